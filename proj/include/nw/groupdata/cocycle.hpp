#pragma once

#include <nw/exact/cyclotomic.hpp>
#include <nw/groupdata/group.hpp>

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace nw::groupdata {

using nw::exact::CycNumber;

// Normalized 3-cocycle on G with values in roots of unity. Two backends:
// a closed-form exponent formula (products of minus_one_pow(...) and
// zeta_pow(N, ...) factors over the generator exponents of the three
// arguments) or an explicit value table.
//
// Formula grammar:
//   formula := "1" | factor ("*" factor)*
//   factor  := "minus_one_pow" "(" expr ")" | "zeta_pow" "(" INT "," expr ")"
//   expr    := integer arithmetic in +, -, *, "/" (floor division),
//              parentheses, and the variables i1..ik, j1..jk, k1..kk holding
//              the exponent vectors of the first/second/third argument.
class ThreeCocycle {
  public:
    static ThreeCocycle trivial(const AbelianGroup& g);
    static ThreeCocycle from_formula(const AbelianGroup& g, const std::string& formula);
    // Sparse table; absent triples evaluate to 1. Keys are index triples.
    static ThreeCocycle from_table(const AbelianGroup& g, std::map<std::array<size_t, 3>, CycNumber> table);

    const AbelianGroup& group() const { return *group_; }

    CycNumber eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const;

    // Smallest N with all values in <zeta_N>; formulas report from their
    // factors, tables from scanning the entries.
    unsigned scalar_order() const;

    // Human-readable violations; empty means the data is a normalized
    // 3-cocycle. Exhaustive over |G|^4, intended for |G| <= 16-ish.
    std::vector<std::string> validate() const;

    std::string describe() const;

  private:
    ThreeCocycle() = default;
    struct Formula;
    const AbelianGroup* group_ = nullptr;
    std::shared_ptr<const Formula> formula_;  // null for table backend
    std::shared_ptr<const std::map<std::array<size_t, 3>, CycNumber>> table_;
    std::string source_;
};

// Derived projective-action 2-cocycle for degree g:
//   tphi_g(e, f) = Phi(g,e,f) * Phi(e,f,g) / Phi(e,g,f).
class TwoCocycle {
  public:
    TwoCocycle(const ThreeCocycle& phi, GroupElement base_degree);

    const GroupElement& base_degree() const { return g_; }
    CycNumber eval(const GroupElement& e, const GroupElement& f) const;
    std::vector<std::string> validate() const;  // 2-cocycle identity, exhaustive

  private:
    const ThreeCocycle* phi_;
    GroupElement g_;
};

inline TwoCocycle derive_two_cocycle(const ThreeCocycle& phi, const GroupElement& g) {
    return TwoCocycle(phi, g);
}

}  // namespace nw::groupdata
