#pragma once

#include <nw/exact/matrix.hpp>
#include <nw/groupdata/cocycle.hpp>
#include <nw/groupdata/group.hpp>

#include <memory>
#include <string>
#include <vector>

namespace nw::ydmod {

using nw::exact::CycNumber;
using nw::exact::Matrix;
using nw::groupdata::AbelianGroup;
using nw::groupdata::GroupElement;
using nw::groupdata::ThreeCocycle;
using nw::groupdata::TwoCocycle;

// Iso-class invariant: degree, dimension, and the trace of every group
// element's action (under the canonical-word extension, so traces are
// comparable between modules of equal degree).
struct Fingerprint {
    GroupElement degree;
    size_t dim = 0;
    std::vector<CycNumber> character;  // indexed by group element index

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.degree == b.degree && a.dim == b.dim && a.character == b.character;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

// Homogeneous module of a fixed group degree g, with a projective G-action:
//   e acts as the identity,  h(l v) = tphi_g(h,l) (hl)v.
// The action is stored for every group element; construction from generator
// matrices extends along canonical words.
class YDModule {
  public:
    // generator_actions[l] is the matrix of h_{l+1}; extended to all of G by
    //   A(p h_l) = tphi_g(p, h_l)^{-1} A(p) A(h_l)
    // along the canonical word of each element.
    static YDModule from_generator_actions(const ThreeCocycle& phi, std::string name, GroupElement degree,
                                           std::vector<Matrix> generator_actions);
    // Explicit matrix for every group element, indexed by group element index.
    static YDModule from_full_table(const ThreeCocycle& phi, std::string name, GroupElement degree,
                                    std::vector<Matrix> all_actions);

    const std::string& name() const { return name_; }
    const GroupElement& degree() const { return degree_; }
    size_t dim() const { return dim_; }
    const AbelianGroup& group() const { return phi_->group(); }
    const ThreeCocycle& cocycle() const { return *phi_; }
    // tphi_degree, the 2-cocycle its action satisfies.
    TwoCocycle proj_cocycle() const { return TwoCocycle(*phi_, degree_); }

    const Matrix& action(const GroupElement& h) const;
    const Matrix& action_at(size_t element_index) const { return (*actions_)[element_index]; }

    // Empty iff: identity acts as identity, every action matrix is invertible,
    // and the projective relation holds for all |G|^2 pairs.
    std::vector<std::string> validate() const;

    // Whether the joint action has trivial commutant (scalars only); the
    // simplicity criterion for homogeneous modules.
    bool is_simple() const;

    Fingerprint fingerprint() const;

    // Dual module: degree g^{-1}; action pinned by requiring the evaluation
    // map V* tensor V -> k (dual basis pairing) to be action-equivariant:
    //   A*(h) = tphi_g(h, h^{-1})^{-1} tphi_h(g^{-1}, g)^{-1} A(h^{-1})^T
    // where tphi_x(a,b) = Phi(x,a,b) Phi(a,b,x) / Phi(a,x,b).
    YDModule dual(std::string name) const;

    // Same module with the basis changed by invertible P (action conjugated).
    YDModule conjugated(std::string name, const Matrix& p) const;

  private:
    YDModule() = default;
    std::string name_;
    GroupElement degree_;
    size_t dim_ = 0;
    const ThreeCocycle* phi_ = nullptr;
    std::shared_ptr<const std::vector<Matrix>> actions_;  // per element index
};

// Ordered tuple of simple modules (the object the reflection calculus acts on).
struct ModuleTuple {
    std::vector<YDModule> entries;

    size_t size() const { return entries.size(); }
    const YDModule& operator[](size_t i) const { return entries[i]; }
    // Violations: empty tuple, per-entry validate failures, non-simple entries.
    std::vector<std::string> validate() const;
};

// Braiding c: V tensor W -> W tensor V, c(v tensor w) = (g w) tensor v for
// g = deg V, on lexicographic flat bases. Square and invertible.
Matrix braiding(const YDModule& v, const YDModule& w);
Matrix inverse_braiding(const YDModule& v, const YDModule& w);  // exact inverse of braiding(v, w)

// Action of x on the left-nested tensor product of the given modules:
//   x (v tensor w) = tphi_x(deg v, deg w) (x v) tensor (x w),  iterated.
Matrix tensor_action(const GroupElement& x, const std::vector<const YDModule*>& mods);

// The left-nested tensor power as a module (degree = product of degrees,
// action = tensor_action for every element).
YDModule tensor_module(std::string name, const std::vector<const YDModule*>& mods);

}  // namespace nw::ydmod
