#pragma once

#include <nw/nichols/space.hpp>

namespace nw::nichols {

// The n-fold evaluation V*^{tensor n} tensor V^{tensor n} -> k contracts
// dual slot j against primal slot n+1-j. On dual-basis indices it is the
// index-reversing delta pattern times one overall rebracketing scalar,
// returned here: the product of the coherence scalars that isolate each
// innermost (dual, primal) pair before contracting it.
CycNumber evaluation_scalar(const ThreeCocycle& phi, const GroupElement& alpha, size_t n);

// Gram matrix of the degree-n pairing ev . (id tensor [n]!) between
// V*^{tensor n} and V^{tensor n}; rows indexed by dual multi-indices,
// columns by primal ones. Its rank is dim B(V)(n).
Matrix pairing_gram(const YDModule& v, size_t n, size_t max_side = BraidedSpace::kDefaultMaxSide);

// Same pairing computed from the dual side, ev . ([n]! tensor id) with the
// symmetrizer of V*; agreement with pairing_gram is the adjointness
// cross-check.
Matrix pairing_gram_dualside(const YDModule& v, size_t n, size_t max_side = BraidedSpace::kDefaultMaxSide);

}  // namespace nw::nichols
