#pragma once

#include <nw/ydmod/module.hpp>

#include <optional>

namespace nw::ydmod {

// Invertible intertwiner T with T a(h) = b(h) T for all h, if the modules are
// isomorphic; absent otherwise. Degrees and fingerprints are checked first
// (necessary conditions), then the joint linear system is solved exactly.
std::optional<Matrix> iso_test(const YDModule& a, const YDModule& b);

}  // namespace nw::ydmod
