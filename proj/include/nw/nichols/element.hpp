#pragma once

#include <nw/nichols/space.hpp>

#include <map>
#include <memory>

namespace nw::nichols {

// Sparse element of the n-th left-nested tensor power of a braided space.
struct TensorElement {
    std::shared_ptr<const BraidedSpace> space;
    size_t level = 0;
    std::map<size_t, CycNumber> coeffs;  // flat index -> coefficient, no zeros stored

    bool is_zero() const { return coeffs.empty(); }

    TensorElement& add(size_t flat, const CycNumber& c);
    TensorElement scaled(const CycNumber& s) const;
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;

    // Total group degree (product of slot degrees); requires homogeneity,
    // which holds for every element this engine produces.
    GroupElement degree() const;

    std::string str() const;
};

// Basis vector k of summand `part`, as a level-1 element.
TensorElement basis_element(std::shared_ptr<const BraidedSpace> space, size_t part, size_t k);

// Apply a level-preserving matrix (e.g. a power action or symmetrizer).
TensorElement apply_matrix(const Matrix& m, const TensorElement& v);

// Concatenation product in the tensor algebra: each pair of basis terms is
// combined with the rebracketing scalar that moves the left-nested factors
// of u and w into one left-nested word.
TensorElement multiply(const TensorElement& u, const TensorElement& w);

// Adjoint action ad(a)(x) = a x - (deg a acting on x) a for a homogeneous
// level-1 element a.
TensorElement ad_apply(const TensorElement& a, const TensorElement& x);

// True iff the level-n symmetrizer kills v, i.e. v = 0 in the Nichols
// algebra quotient.
bool is_zero_in_nichols(const TensorElement& v);

}  // namespace nw::nichols
