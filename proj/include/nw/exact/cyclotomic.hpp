#pragma once

#include <nw/exact/rational.hpp>

#include <string>
#include <vector>

namespace nw::exact {

// Element of the cyclotomic field Q(zeta_N), stored as a polynomial in
// zeta_N of degree < phi(N), i.e. coordinates in the power basis
// {1, zeta, ..., zeta^{phi(N)-1}} reduced modulo the N-th cyclotomic
// polynomial. Equality of coordinate vectors is equality of numbers, so
// comparisons are canonical once both sides live at a common order; binary
// operations lift operands to lcm(order_a, order_b) automatically.
class CycNumber {
  public:
    CycNumber();  // zero at order 1
    explicit CycNumber(const Rational& r);
    CycNumber(long v);  // NOLINT: implicit integer literals are convenient

    static CycNumber zeta(unsigned n, long k);  // zeta_n^k, k reduced mod n
    static CycNumber zero() { return CycNumber(); }
    static CycNumber one() { return CycNumber(1); }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;  // throws std::domain_error if not rational
    bool is_one() const;

    // Embed into Q(zeta_m); requires order() | m.
    CycNumber promoted(unsigned m) const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }

    CycNumber inverse() const;  // throws std::domain_error on zero
    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    // Deterministic rendering, e.g. "1 - 1/2*z8^3"; "0" for zero.
    std::string str() const;

  private:
    unsigned order_;
    std::vector<Rational> c_;  // size phi(order_)
};

// N-th cyclotomic polynomial as integer coefficients c0..cdeg (monic).
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);

}  // namespace nw::exact
