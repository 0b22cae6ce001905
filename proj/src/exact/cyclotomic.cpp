#include <nw/exact/cyclotomic.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nw::exact {

namespace {

// Exact division of integer polynomials, divisor monic; remainder must be 0.
std::vector<mpz_class> divexact_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const size_t dd = den.size() - 1;
    if (num.size() - 1 < dd) throw std::logic_error("cyclotomic: bad division");
    std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
    for (size_t k = num.size(); k-- > den.size() - 1;) {
        if (k < dd) break;
        mpz_class coef = num[k];
        if (coef == 0) continue;
        q[k - dd] = coef;
        for (size_t j = 0; j <= dd; ++j) num[k - dd + j] -= coef * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("cyclotomic: nonzero remainder");
    return q;
}

struct OrderData {
    unsigned n = 1;
    unsigned deg = 1;
    std::vector<mpz_class> phi_poly;
    // pow[k] = coordinates of x^k mod Phi_n, for 0 <= k <= max(2*deg-2, n-1).
    std::vector<std::vector<Rational>> pow;
};

std::map<unsigned, OrderData>& order_cache() {
    static std::map<unsigned, OrderData> cache;
    return cache;
}
std::mutex& order_mutex() {
    static std::mutex m;
    return m;
}

const OrderData& order_data_locked(unsigned n);

std::vector<mpz_class> compute_phi_poly(unsigned n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<mpz_class> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = divexact_monic(std::move(p), order_data_locked(d).phi_poly);
    return p;
}

const OrderData& order_data_locked(unsigned n) {
    auto& cache = order_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    OrderData d;
    d.n = n;
    d.phi_poly = n == 1 ? std::vector<mpz_class>{-1, 1} : compute_phi_poly(n);
    d.deg = static_cast<unsigned>(d.phi_poly.size() - 1);

    const unsigned maxk = std::max(2 * d.deg >= 2 ? 2 * d.deg - 2 : 0, n - 1);
    d.pow.resize(maxk + 1, std::vector<Rational>(d.deg, Rational(0)));
    std::vector<Rational> cur(d.deg, Rational(0));
    cur[0] = 1;
    d.pow[0] = cur;
    for (unsigned k = 1; k <= maxk; ++k) {
        // multiply by x, reduce leading term via x^deg = -(c_0 + ... + c_{deg-1} x^{deg-1})
        Rational top = cur[d.deg - 1];
        for (unsigned t = d.deg - 1; t >= 1; --t) cur[t] = cur[t - 1];
        cur[0] = 0;
        if (top != 0)
            for (unsigned t = 0; t < d.deg; ++t) cur[t] -= top * Rational(d.phi_poly[t]);
        d.pow[k] = cur;
    }
    return cache.emplace(n, std::move(d)).first->second;
}

const OrderData& order_data(unsigned n) {
    if (n == 0) throw std::domain_error("cyclotomic: order must be positive");
    std::lock_guard<std::mutex> lk(order_mutex());
    return order_data_locked(n);
}

}  // namespace

unsigned euler_phi(unsigned n) { return order_data(n).deg; }

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) { return order_data(n).phi_poly; }

CycNumber::CycNumber() : order_(1), c_(1, Rational(0)) {}

CycNumber::CycNumber(const Rational& r) : order_(1), c_(1, r) {}

CycNumber::CycNumber(long v) : order_(1), c_(1, Rational(v)) {}

CycNumber CycNumber::zeta(unsigned n, long k) {
    const OrderData& d = order_data(n);
    long e = k % static_cast<long>(n);
    if (e < 0) e += n;
    CycNumber z;
    z.order_ = n;
    z.c_ = d.pow[static_cast<size_t>(e)];
    return z;
}

bool CycNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool CycNumber::is_rational() const {
    for (size_t t = 1; t < c_.size(); ++t)
        if (c_[t] != 0) return false;
    return true;
}

Rational CycNumber::rational_part() const {
    if (!is_rational()) throw std::domain_error("cyclotomic: not a rational number: " + str());
    return c_[0];
}

bool CycNumber::is_one() const { return is_rational() && c_[0] == 1; }

CycNumber CycNumber::promoted(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::domain_error("cyclotomic: order does not divide target");
    const OrderData& d = order_data(m);
    const unsigned step = m / order_;
    CycNumber out;
    out.order_ = m;
    out.c_.assign(d.deg, Rational(0));
    for (size_t t = 0; t < c_.size(); ++t) {
        if (c_[t] == 0) continue;
        const std::vector<Rational>& p = d.pow[t * step];  // zeta_order^t = zeta_m^{t*step}
        for (unsigned u = 0; u < d.deg; ++u) out.c_[u] += c_[t] * p[u];
    }
    return out;
}

CycNumber CycNumber::operator-() const {
    CycNumber out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

namespace {
unsigned common_order(unsigned a, unsigned b) { return std::lcm(a, b); }
}  // namespace

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    const unsigned m = common_order(order_, o.order_);
    if (m != order_) *this = promoted(m);
    const CycNumber rhs = o.order() == m ? o : o.promoted(m);
    for (size_t t = 0; t < c_.size(); ++t) c_[t] += rhs.c_[t];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
    const unsigned m = common_order(order_, o.order_);
    if (m != order_) *this = promoted(m);
    const CycNumber rhs = o.order() == m ? o : o.promoted(m);
    for (size_t t = 0; t < c_.size(); ++t) c_[t] -= rhs.c_[t];
    return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    const unsigned m = common_order(order_, o.order_);
    if (m != order_) *this = promoted(m);
    const CycNumber rhs = o.order() == m ? o : o.promoted(m);
    const OrderData& d = order_data(m);
    const unsigned deg = d.deg;
    // schoolbook convolution, then reduce powers >= deg through the table
    std::vector<Rational> conv(2 * deg - 1, Rational(0));
    for (size_t i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (rhs.c_[j] == 0) continue;
            conv[i + j] += c_[i] * rhs.c_[j];
        }
    }
    std::vector<Rational> out(deg, Rational(0));
    for (size_t k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        if (k < deg) {
            out[k] += conv[k];
        } else {
            const std::vector<Rational>& p = d.pow[k];
            for (unsigned t = 0; t < deg; ++t) out[t] += conv[k] * p[t];
        }
    }
    c_ = std::move(out);
    return *this;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic: division by zero");
    if (is_rational()) {
        CycNumber out;
        out.order_ = order_;
        out.c_.assign(c_.size(), Rational(0));
        out.c_[0] = Rational(1) / c_[0];
        return out;
    }
    // extended Euclid in Q[x] against Phi_order: u*this + v*Phi = 1  =>  inverse = u
    const OrderData& d = order_data(order_);
    using Poly = std::vector<Rational>;
    auto degree = [](const Poly& p) -> long {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1;
    };
    Poly r0(d.phi_poly.size());
    for (size_t i = 0; i < d.phi_poly.size(); ++i) r0[i] = Rational(d.phi_poly[i]);
    Poly r1(c_.begin(), c_.end());
    Poly u0{Rational(0)}, u1{Rational(1)};  // coefficients of *this in the Bezout combination
    while (degree(r1) > 0) {
        // divide r0 by r1
        Poly q(static_cast<size_t>(degree(r0) - degree(r1) + 1), Rational(0));
        Poly rem = r0;
        const long d1 = degree(r1);
        const Rational lead = r1[static_cast<size_t>(d1)];
        for (long k = degree(rem); k >= d1; --k) {
            const Rational coef = rem[static_cast<size_t>(k)] / lead;
            if (coef == 0) continue;
            q[static_cast<size_t>(k - d1)] = coef;
            for (long j = 0; j <= d1; ++j) rem[static_cast<size_t>(k - d1 + j)] -= coef * r1[static_cast<size_t>(j)];
        }
        // (r0, r1) <- (r1, rem); (u0, u1) <- (u1, u0 - q*u1)
        Poly qu(q.size() + u1.size() - 1, Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) qu[i + j] += q[i] * u1[j];
        }
        Poly nu(std::max(u0.size(), qu.size()), Rational(0));
        for (size_t i = 0; i < u0.size(); ++i) nu[i] += u0[i];
        for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(nu);
    }
    const long dr = degree(r1);
    if (dr != 0) throw std::logic_error("cyclotomic: gcd with Phi_N not a unit");
    const Rational scale = Rational(1) / r1[0];
    CycNumber out;
    out.order_ = order_;
    out.c_.assign(d.deg, Rational(0));
    for (size_t i = 0; i < u1.size() && i < out.c_.size(); ++i) out.c_[i] = u1[i] * scale;
    // u1 may formally exceed deg-1 with zero tail only; anything else is a bug
    for (size_t i = out.c_.size(); i < u1.size(); ++i)
        if (u1[i] != 0) throw std::logic_error("cyclotomic: inverse degree overflow");
    return out;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    const unsigned m = common_order(a.order_, b.order_);
    const CycNumber pa = a.order_ == m ? a : a.promoted(m);
    const CycNumber pb = b.order_ == m ? b : b.promoted(m);
    return pa.c_ == pb.c_;
}

std::string CycNumber::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t t = 0; t < c_.size(); ++t) {
        if (c_[t] == 0) continue;
        Rational v = c_[t];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (t == 0) {
            os << v.get_str();
        } else {
            if (v != 1) os << v.get_str() << "*";
            os << "z" << order_;
            if (t > 1) os << "^" << t;
        }
    }
    return os.str();
}

}  // namespace nw::exact
