#pragma once

#include <nw/nichols/element.hpp>

#include <optional>

namespace nw::nichols {

// The chain of adjoint iterates of part_i applied to part_j inside the
// tensor algebra of space = M_i + M_j. levels[m] is a pruned basis of
// ad(M_i)^m(M_j): representatives whose symmetrizer images are linearly
// independent (spans agree with the full iterate modulo the symmetrizer
// kernel, which is an ideal stable under the group action).
struct AdChain {
    std::shared_ptr<const BraidedSpace> space;
    size_t part_i = 0, part_j = 1;
    std::vector<std::vector<TensorElement>> levels;
    // Smallest m with ad(M_i)^{m+1}(M_j) = 0 in the Nichols quotient;
    // absent if no level <= cap vanished (cap exceeded).
    std::optional<size_t> nilpotency;
};

// Runs the iteration up to the cap. max_side bounds the symmetrizer sizes.
AdChain ad_chain(const YDModule& mi, const YDModule& mj, size_t cap, size_t max_side = BraidedSpace::kDefaultMaxSide);

// Cartan integer m_ij as plain data: nullopt = cap exceeded.
std::optional<size_t> cartan_entry(const YDModule& mi, const YDModule& mj, size_t cap,
                                   size_t max_side = BraidedSpace::kDefaultMaxSide);

}  // namespace nw::nichols
