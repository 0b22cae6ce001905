#pragma once

#include <nw/nichols/adjoint.hpp>
#include <nw/ydmod/module.hpp>

#include <mutex>
#include <string>
#include <vector>

namespace nw::reflect {

using nw::nichols::AdChain;
using nw::ydmod::Fingerprint;
using nw::ydmod::ModuleTuple;
using nw::ydmod::YDModule;

// Generalized Cartan matrix of a module tuple: a_ii = 2 and a_ij = -m_ij,
// the adjoint nilpotency order of slot i on slot j.
struct CartanMatrix {
    std::vector<std::vector<long>> a;

    size_t size() const { return a.size(); }
    long at(size_t i, size_t j) const { return a[i][j]; }

    // Violations of the GCM shape: diagonal 2, off-diagonal <= 0, and
    // zero-symmetry a_ij = 0 <=> a_ji = 0.
    std::vector<std::string> validate() const;

    friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) { return x.a == y.a; }
    friend bool operator!=(const CartanMatrix& x, const CartanMatrix& y) { return !(x == y); }

    std::string str() const;  // [[2,-1],[-1,2]]
};

// The module carried by the top nonzero adjoint iterate ad(M_i)^m(M_j),
// materialized on the pruned level basis of a computed chain. Its degree is
// deg(M_i)^m deg(M_j); the action of x is solved exactly from the symmetrizer
// images  S (x w_b) = sum_a c_ab S(w_a).
YDModule ad_iterate_module(const AdChain& chain, const YDModule& mi, const YDModule& mj, std::string name);

// The i-th reflection: slot i becomes the dual module, every other slot j its
// top adjoint iterate under slot i. Throws nichols::CapExceeded ("reflection
// undefined at cap") when some nilpotency order is not reached within cap,
// and std::logic_error if an output slot fails validation or simplicity.
ModuleTuple reflect(const ModuleTuple& t, size_t i, size_t cap = 8,
                    size_t max_side = nw::nichols::BraidedSpace::kDefaultMaxSide);

// Cartan matrix of the tuple; throws nichols::CapExceeded naming the pair
// whose adjoint chain did not terminate within cap.
CartanMatrix cartan_of(const ModuleTuple& t, size_t cap = 8,
                       size_t max_side = nw::nichols::BraidedSpace::kDefaultMaxSide);

// Append-only registry of tuple isomorphism classes. Classification compares
// componentwise fingerprints first; on a full fingerprint match the exact
// intertwiner solve is authoritative. Thread-safe.
class TupleCatalog {
  public:
    // Returns the class id, registering a new class when nothing matches.
    size_t classify(const ModuleTuple& t);
    // Like classify, but never registers: empty when the tuple is new.
    std::optional<size_t> find(const ModuleTuple& t) const;

    size_t size() const;
    ModuleTuple representative(size_t id) const;

  private:
    std::optional<size_t> find_locked(const ModuleTuple& t) const;

    mutable std::mutex mu_;
    std::vector<ModuleTuple> reps_;
    std::vector<std::vector<Fingerprint>> keys_;
};

}  // namespace nw::reflect
