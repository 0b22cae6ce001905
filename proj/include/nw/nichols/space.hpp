#pragma once

#include <nw/exact/matrix.hpp>
#include <nw/ydmod/module.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace nw::nichols {

using nw::exact::CycNumber;
using nw::exact::Matrix;
using nw::groupdata::AbelianGroup;
using nw::groupdata::GroupElement;
using nw::groupdata::ThreeCocycle;
using nw::ydmod::YDModule;

// Raised when a computation would exceed a configured resource bound; callers
// report it as a distinct outcome, never as silent truncation.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite-dimensional graded braided vector space: a direct sum of
// homogeneous modules, carrying a degree per basis vector and the
// block-diagonal action of every group element. Tensor powers are always
// left-nested; braid generators and symmetrizers on them are cached here.
class BraidedSpace {
  public:
    explicit BraidedSpace(const YDModule& m, size_t max_side = kDefaultMaxSide);
    explicit BraidedSpace(std::vector<const YDModule*> parts, size_t max_side = kDefaultMaxSide);

    static constexpr size_t kDefaultMaxSide = 4096;

    size_t dim() const { return dim_; }
    size_t parts() const { return parts_.size(); }
    const YDModule& part(size_t s) const { return *parts_[s]; }
    size_t part_offset(size_t s) const { return offsets_[s]; }
    size_t part_of(size_t basis_index) const;
    const GroupElement& degree_of(size_t basis_index) const { return degrees_[basis_index]; }
    const Matrix& action(const GroupElement& x) const;  // block diagonal over parts
    const ThreeCocycle& cocycle() const { return *phi_; }
    const AbelianGroup& group() const { return phi_->group(); }
    size_t max_side() const { return max_side_; }

    // dim^n, guarded by the configured matrix-side cap.
    size_t power_dim(size_t n) const;

    // Flat-index digits of the left-nested n-th power (base dim, most
    // significant digit = leftmost slot).
    std::vector<size_t> decode(size_t flat, size_t n) const;
    size_t encode(const std::vector<size_t>& digits) const;

    // Braid generator sigma_t (1 <= t <= n-1) on the n-th power: the pair
    // braiding at slots (t, t+1) conjugated by the rebracketing that
    // isolates those slots, so every scalar comes from the 3-cocycle.
    const Matrix& sigma(size_t n, size_t t) const;

    // Woronowicz symmetrizer [n]! via the left factorization
    //   [n]! = ([n-1]! tensor id) (id + s_{n-1} + s_{n-1}s_{n-2} + ... + s_{n-1}...s_1).
    const Matrix& symmetrizer(size_t n) const;

    // Action of x on the n-th power: iterated kron corrected column-wise by
    // the derived 2-cocycle of the actor on the source degrees.
    const Matrix& power_action(const GroupElement& x, size_t n) const;

  private:
    void init();
    Matrix build_sigma(size_t n, size_t t) const;
    Matrix build_symmetrizer(size_t n) const;
    Matrix build_power_action(const GroupElement& x, size_t n) const;

    std::vector<const YDModule*> parts_;
    const ThreeCocycle* phi_;
    size_t dim_ = 0;
    size_t max_side_;
    std::vector<size_t> offsets_;       // per part
    std::vector<size_t> part_index_;    // per basis index
    std::vector<GroupElement> degrees_;  // per basis index
    std::vector<Matrix> actions_;        // per group element index

    mutable std::mutex mu_;
    mutable std::map<std::pair<size_t, size_t>, Matrix> sigmas_;
    mutable std::map<size_t, Matrix> symmetrizers_;
    mutable std::map<std::pair<size_t, size_t>, Matrix> power_actions_;  // (element index, n)
};

// Reference implementation for small n: the sum over all n! positive braid
// lifts, each lift read off a reduced word of the permutation. Equality with
// the recursion is the reduced-word-independence property.
Matrix symmetrizer_by_word_sum(const BraidedSpace& v, size_t n);

// dim B(V)(n) for n = 0..max_deg, via rank [n]!.
std::vector<size_t> nichols_dims(const BraidedSpace& v, size_t max_deg);

}  // namespace nw::nichols
