#include <nw/titscone/titscone.hpp>

#include <nw/exact/linalg.hpp>
#include <nw/exact/matrix.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace nw::titscone {

using nw::cartangraph::connectivity;
using nw::reflect::CartanMatrix;
using nw::weylroots::morphisms_from;
using nw::weylroots::real_roots;
using nw::weylroots::simple_reflection;
using nw::weylroots::WeylMorphism;

std::vector<long> Chamber::covector(size_t i) const { return winv.column(i); }

std::vector<long> Chamber::ray(size_t j) const {
    std::vector<long> r(w.n);
    for (size_t c = 0; c < w.n; ++c) r[c] = w.at(j, c);
    return r;
}

int Chamber::side(size_t i, const std::vector<Rational>& x) const {
    Rational v(0);
    for (size_t k = 0; k < winv.n; ++k) v += Rational(winv.at(k, i)) * x[k];
    return sgn(v);
}

bool Chamber::contains_open(const std::vector<Rational>& x) const {
    for (size_t i = 0; i < winv.n; ++i)
        if (side(i, x) <= 0) return false;
    return true;
}

bool Chamber::contains_closed(const std::vector<Rational>& x) const {
    for (size_t i = 0; i < winv.n; ++i)
        if (side(i, x) < 0) return false;
    return true;
}

namespace {

// Inverse of a morphism matrix, rebuilt from its word: the generators are
// involutions, so the inverse is the product in the original word order.
IntMatrix inverse_by_word(const CartanGraph& g, size_t base, const std::vector<size_t>& word) {
    IntMatrix inv = IntMatrix::identity(g.rank);
    size_t cur = base;
    for (size_t i : word) {
        inv = inv * simple_reflection(g.cartans[cur], i);
        cur = g.edges[cur][i];
    }
    return inv;
}

Chamber make_chamber(const CartanGraph& g, size_t base, const WeylMorphism& m) {
    Chamber c;
    c.object = m.target;
    c.w = m.matrix;
    c.winv = inverse_by_word(g, base, m.word);
    c.word = m.word;
    if (c.w * c.winv != IntMatrix::identity(g.rank))
        throw std::logic_error("chamber matrix inverse replay failed");
    return c;
}

// Strictly positive primitive integer kernel vector of the matrix (columns
// kernel of a, i.e. a * v = 0), when the kernel is one-dimensional and
// sign-coherent.
std::optional<std::vector<long>> positive_null_vector(const CartanMatrix& a, bool transpose) {
    const size_t n = a.size();
    nw::exact::Matrix m(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            m.at(r, c) = nw::exact::CycNumber(transpose ? a.at(c, r) : a.at(r, c));
    const auto rk = nw::exact::rank_kernel(m);
    if (rk.kernel.cols() != 1) return std::nullopt;

    std::vector<Rational> q(n);
    mpz_class lcm_den(1);
    for (size_t k = 0; k < n; ++k) {
        const nw::exact::CycNumber& e = rk.kernel.at(k, 0);
        if (!e.is_rational()) return std::nullopt;
        q[k] = e.rational_part();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q[k].get_den().get_mpz_t());
    }
    std::vector<mpz_class> z(n);
    mpz_class g(0);
    for (size_t k = 0; k < n; ++k) {
        z[k] = q[k].get_num() * (lcm_den / q[k].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[k].get_mpz_t());
    }
    if (g == 0) return std::nullopt;
    int want = 0;
    std::vector<long> v(n);
    for (size_t k = 0; k < n; ++k) {
        z[k] /= g;
        const int s = sgn(z[k]);
        if (s == 0) return std::nullopt;  // affine null vectors are strictly positive
        if (want == 0) want = s;
        if (s != want) return std::nullopt;  // mixed signs: not a positive vector
    }
    for (size_t k = 0; k < n; ++k) {
        const mpz_class entry = want < 0 ? mpz_class(-z[k]) : z[k];
        if (!entry.fits_slong_p()) return std::nullopt;
        v[k] = entry.get_si();
    }
    return v;
}

std::vector<long> primitive_signed(std::vector<long> v) {
    long g = 0;
    for (long c : v) g = std::gcd(g, c);
    if (g == 0) return v;
    for (long& c : v) c /= g;
    for (long c : v) {
        if (c > 0) break;
        if (c < 0) {
            for (long& e : v) e = -e;
            break;
        }
    }
    return v;
}

std::string word_str(const std::vector<size_t>& w) {
    std::string s = "(";
    for (size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
    return s + ")";
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace

std::vector<Chamber> chambers(const CartanGraph& g, size_t base, size_t bound) {
    if (base >= g.objects()) throw std::invalid_argument("chambers: base object out of range");
    std::vector<Chamber> out;
    std::set<IntMatrix> seen;
    for (const WeylMorphism& m : morphisms_from(g, base, bound)) {
        if (!seen.insert(m.matrix).second) continue;  // one chamber per matrix
        out.push_back(make_chamber(g, base, m));
    }
    return out;
}

std::map<size_t, Chamber> realize(const CartanGraph& g, size_t base, size_t bound) {
    const auto conn = connectivity(g, bound);
    if (!conn.connected)
        throw std::invalid_argument("realization requires a connected graph within the word bound");
    if (!conn.simply_connected_within_bound)
        throw std::invalid_argument("realization requires simple connectivity within the word bound: " +
                                    conn.witness);
    std::map<size_t, Chamber> out;
    for (const WeylMorphism& m : morphisms_from(g, base, bound)) out.emplace(m.target, make_chamber(g, base, m));
    return out;
}

std::string cone_class_name(ConeClass c) {
    switch (c) {
        case ConeClass::finite: return "finite";
        case ConeClass::affine: return "affine";
        case ConeClass::indefinite: return "indefinite";
        case ConeClass::nonstandard: return "nonstandard";
    }
    return "unknown";
}

TitsReport classify_cone(const CartanGraph& g, size_t base, size_t bound) {
    TitsReport rep;
    if (!g.is_standard()) {
        rep.classification = ConeClass::nonstandard;
        rep.notes.push_back("unsupported — nonstandard graph: objects carry different Cartan matrices");
        return rep;
    }
    const CartanMatrix& a = g.cartans.at(base);

    // Left kernel (v with v A = 0), strictly positive and primitive.
    const auto left = positive_null_vector(a, /*transpose=*/true);
    rep.has_positive_null = left.has_value();

    if (bound == 0) {
        rep.roots_closed_below_bound = true;
    } else {
        rep.roots_closed_below_bound =
            real_roots(g, base, bound).size() == real_roots(g, base, bound - 1).size();
    }

    if (rep.has_positive_null && !rep.roots_closed_below_bound) {
        rep.classification = ConeClass::affine;
    } else if (!rep.has_positive_null && rep.roots_closed_below_bound) {
        rep.classification = ConeClass::finite;
    } else if (!rep.has_positive_null && !rep.roots_closed_below_bound) {
        rep.classification = ConeClass::indefinite;
    } else {
        rep.classification = ConeClass::affine;
        rep.consistent = false;
        rep.notes.push_back(
            "inconsistent signals: a positive null vector exists but root enumeration closed "
            "below the bound");
    }

    const std::vector<Chamber> chs = chambers(g, base, bound);
    rep.chamber_count = chs.size();
    for (const Chamber& c : chs)
        for (size_t i = 0; i < g.rank; ++i) rep.hyperplanes.insert(primitive_signed(c.covector(i)));

    if (rep.classification == ConeClass::affine && rep.consistent) {
        rep.null_vector = *left;
        rep.delta = *left;
        rep.half_space_verified = true;
        rep.sum_invariance_verified = true;
        for (const Chamber& c : chs) {
            for (size_t j = 0; j < g.rank && rep.half_space_verified; ++j)
                if (dot(c.ray(j), rep.delta) <= 0) {
                    rep.half_space_verified = false;
                    rep.notes.push_back("chamber " + word_str(c.word) + " has a ray outside the half-space");
                }
            // sum_i v_i beta_i must be the level covector itself.
            for (size_t k = 0; k < g.rank && rep.sum_invariance_verified; ++k) {
                long s = 0;
                for (size_t i = 0; i < g.rank; ++i) s += rep.null_vector[i] * c.winv.at(k, i);
                if (s != rep.delta[k]) {
                    rep.sum_invariance_verified = false;
                    rep.notes.push_back("chamber " + word_str(c.word) + " breaks the sum invariance");
                }
            }
        }
    }
    return rep;
}

TilingReport alcove_tiling_check(const CartanGraph& g, size_t base, size_t bound, long side, long denom) {
    if (side <= 0 || denom <= 0) throw std::invalid_argument("alcove tiling: side and denominator must be positive");
    const TitsReport rep = classify_cone(g, base, bound);
    if (rep.classification != ConeClass::affine || !rep.consistent)
        throw std::invalid_argument("alcove tiling requires an affine cone");

    const std::vector<Chamber> chs = chambers(g, base, bound);
    const size_t rank = g.rank;
    if (rank < 2) throw std::invalid_argument("alcove tiling requires rank at least 2");
    const std::vector<long>& v = rep.delta;

    const long per_axis = 2 * side * denom + 1;
    size_t total = 1;
    for (size_t k = 0; k + 1 < rank; ++k) total *= static_cast<size_t>(per_axis);

    TilingReport out;
    out.grid_points = total;

    size_t covered = 0, uncovered = 0, interior_double = 0, boundary = 0;
    std::vector<size_t> uncovered_idx;

#pragma omp parallel
    {
        std::vector<size_t> local_uncovered;
#pragma omp for reduction(+ : covered, uncovered, interior_double, boundary) schedule(static)
        for (size_t flat = 0; flat < total; ++flat) {
            // Decode the odometer into exact slice coordinates; the last
            // coordinate is pinned by delta(x) = 1.
            std::vector<Rational> x(rank);
            size_t rest = flat;
            Rational partial(0);
            for (size_t k = 0; k + 1 < rank; ++k) {
                const long step = static_cast<long>(rest % static_cast<size_t>(per_axis));
                rest /= static_cast<size_t>(per_axis);
                x[k] = nw::exact::make_rational(step - side * denom, denom);
                partial += Rational(v[k]) * x[k];
            }
            x[rank - 1] = (Rational(1) - partial) / Rational(v[rank - 1]);

            size_t closed_count = 0, interior_count = 0;
            for (const Chamber& c : chs) {
                if (!c.contains_closed(x)) continue;
                ++closed_count;
                if (c.contains_open(x)) ++interior_count;
            }
            if (closed_count == 0) {
                ++uncovered;
                local_uncovered.push_back(flat);
            } else {
                ++covered;
                if (interior_count == 0) ++boundary;
            }
            if (interior_count >= 2) ++interior_double;
        }
#pragma omp critical
        uncovered_idx.insert(uncovered_idx.end(), local_uncovered.begin(), local_uncovered.end());
    }

    out.covered = covered;
    out.uncovered = uncovered;
    out.interior_double = interior_double;
    out.boundary = boundary;

    std::sort(uncovered_idx.begin(), uncovered_idx.end());
    for (size_t s = 0; s < uncovered_idx.size() && s < 5; ++s) {
        size_t rest = uncovered_idx[s];
        std::string p = "(";
        for (size_t k = 0; k + 1 < rank; ++k) {
            const long step = static_cast<long>(rest % static_cast<size_t>(per_axis));
            rest /= static_cast<size_t>(per_axis);
            p += (k ? ", " : "") + nw::exact::to_string(nw::exact::make_rational(step - side * denom, denom));
        }
        out.uncovered_samples.push_back(p + ", *)");
    }
    return out;
}

std::string alcove_vertex_dump(const std::vector<Chamber>& chs, const std::vector<long>& delta) {
    std::ostringstream os;
    for (const Chamber& c : chs) {
        os << word_str(c.word) << ":";
        for (size_t j = 0; j < c.w.n; ++j) {
            const std::vector<long> r = c.ray(j);
            const long level = dot(r, delta);
            os << " (";
            for (size_t k = 0; k < r.size(); ++k) {
                if (k) os << ", ";
                if (level == 0)
                    os << r[k] << "/0";  // ray parallel to the slice (never affine-lawful)
                else
                    os << nw::exact::to_string(nw::exact::make_rational(r[k], level));
            }
            os << ")";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace nw::titscone
