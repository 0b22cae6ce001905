#include <nw/weylroots/weyl.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nw::weylroots {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix out(n);
    for (size_t r = 0; r < n; ++r)
        for (size_t k = 0; k < n; ++k) {
            const long v = at(r, k);
            if (v == 0) continue;
            for (size_t c = 0; c < n; ++c) out.at(r, c) += v * o.at(k, c);
        }
    return out;
}

std::vector<long> IntMatrix::apply(const std::vector<long>& v) const {
    std::vector<long> out(n, 0);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) out[r] += at(r, c) * v[c];
    return out;
}

std::vector<long> IntMatrix::column(size_t c) const {
    std::vector<long> out(n);
    for (size_t r = 0; r < n; ++r) out[r] = at(r, c);
    return out;
}

long IntMatrix::row_sum(size_t r) const {
    long s = 0;
    for (size_t c = 0; c < n; ++c) s += at(r, c);
    return s;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t r = 0; r < n; ++r) {
        os << (r ? ",[" : "[");
        for (size_t c = 0; c < n; ++c) os << (c ? "," : "") << at(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix simple_reflection(const CartanMatrix& a, size_t i) {
    const size_t n = a.size();
    IntMatrix s = IntMatrix::identity(n);
    for (size_t j = 0; j < n; ++j) s.at(i, j) = (i == j ? 1 : 0) - a.at(i, j);
    return s;
}

std::vector<WeylMorphism> morphisms_from(const CartanGraph& g, size_t x, size_t bound) {
    std::vector<WeylMorphism> out;
    std::set<std::pair<size_t, IntMatrix>> seen;
    WeylMorphism id{x, x, IntMatrix::identity(g.rank), {}};
    seen.insert({x, id.matrix});
    out.push_back(id);
    std::vector<WeylMorphism> frontier{out.back()};
    for (size_t step = 1; step <= bound; ++step) {
        std::vector<WeylMorphism> next;
        for (const WeylMorphism& w : frontier) {
            for (size_t i = 0; i < g.rank; ++i) {
                const size_t t = g.edges[w.target][i];
                if (t >= g.objects()) continue;
                WeylMorphism w2{x, t, simple_reflection(g.cartans[w.target], i) * w.matrix, w.word};
                w2.word.push_back(i);
                if (!seen.insert({t, w2.matrix}).second) continue;
                out.push_back(w2);
                next.push_back(std::move(w2));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<WeylMorphism> morphisms_into(const CartanGraph& g, size_t x, size_t bound) {
    std::vector<WeylMorphism> out;
    std::set<std::pair<size_t, IntMatrix>> seen;
    WeylMorphism id{x, x, IntMatrix::identity(g.rank), {}};
    seen.insert({x, id.matrix});
    out.push_back(id);
    std::vector<WeylMorphism> frontier{out.back()};
    for (size_t step = 1; step <= bound; ++step) {
        std::vector<WeylMorphism> next;
        for (const WeylMorphism& w : frontier) {
            for (size_t i = 0; i < g.rank; ++i) {
                const size_t z = g.edges[w.source][i];  // = r_i(source), whence s_i^z: z -> source
                if (z >= g.objects()) continue;
                WeylMorphism w2{z, x, w.matrix * simple_reflection(g.cartans[z], i), w.word};
                w2.word.push_back(i);
                if (!seen.insert({z, w2.matrix}).second) continue;
                out.push_back(w2);
                next.push_back(std::move(w2));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<WeylMorphism> hom_enumerate(const CartanGraph& g, size_t x, size_t y, size_t bound) {
    std::vector<WeylMorphism> out;
    for (auto& w : morphisms_from(g, x, bound))
        if (w.target == y) out.push_back(std::move(w));
    return out;
}

RootSet real_roots(const CartanGraph& g, size_t x, size_t bound) {
    RootSet rs;
    rs.object = x;
    rs.bound = bound;
    for (const WeylMorphism& w : morphisms_into(g, x, bound)) {
        for (size_t c = 0; c < g.rank; ++c) {
            const std::vector<long> root = w.matrix.column(c);
            const auto it = rs.first_depth.find(root);
            if (it == rs.first_depth.end() || it->second > w.word.size()) rs.first_depth[root] = w.word.size();
        }
    }
    return rs;
}

namespace {

Rank2Count rank2_from_roots(const CartanGraph& g, const RootSet& rs, size_t x, size_t i, size_t j) {
    Rank2Count rc;
    for (const auto& [root, depth] : rs.first_depth) {
        bool in_span = true, nonzero = false;
        for (size_t k = 0; k < root.size(); ++k) {
            if (k == i || k == j) {
                if (root[k] < 0) in_span = false;
                if (root[k] != 0) nonzero = true;
            } else if (root[k] != 0) {
                in_span = false;
            }
        }
        if (in_span && nonzero) ++rc.count;
    }
    const long p = g.cartans[x].at(i, j) * g.cartans[x].at(j, i);
    switch (p) {
        case 0: rc.classified = 2; break;
        case 1: rc.classified = 3; break;
        case 2: rc.classified = 4; break;
        case 3: rc.classified = 6; break;
        default: rc.classified = std::nullopt; break;  // unbounded type
    }
    rc.agreement = !rc.classified || rc.count == *rc.classified;
    return rc;
}

}  // namespace

Rank2Count rank2_count(const CartanGraph& g, size_t x, size_t i, size_t j, size_t bound) {
    return rank2_from_roots(g, real_roots(g, x, bound), x, i, j);
}

namespace {

bool sign_coherent(const std::vector<long>& r) {
    bool nonneg = true, nonpos = true;
    for (long v : r) {
        if (v < 0) nonneg = false;
        if (v > 0) nonpos = false;
    }
    return nonneg || nonpos;
}

// Primitive direction with the first nonzero entry positive; empty for 0.
std::vector<long> primitive_direction(std::vector<long> r) {
    long g = 0;
    for (long v : r) g = std::gcd(g, std::abs(v));
    if (g == 0) return {};
    long sign = 0;
    for (long v : r)
        if (v != 0) {
            sign = v > 0 ? 1 : -1;
            break;
        }
    for (long& v : r) v = v * sign / g;
    return r;
}

std::string vec_str(const std::vector<long>& v) {
    std::string s = "(";
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

}  // namespace

AxiomReport cartan_axioms(const CartanGraph& g, size_t bound) {
    AxiomReport rep;
    auto fail = [&](bool& flagbit, std::string msg) {
        flagbit = false;
        rep.failures.push_back(std::move(msg));
    };

    std::vector<RootSet> rootsets;
    rootsets.reserve(g.objects());
    for (size_t x = 0; x < g.objects(); ++x) rootsets.push_back(real_roots(g, x, bound));

    for (size_t x = 0; x < g.objects(); ++x) {
        const RootSet& rs = rootsets[x];
        const std::string ox = "object " + std::to_string(x);

        // Simple roots present, zero absent.
        for (size_t i = 0; i < g.rank; ++i) {
            std::vector<long> e(g.rank, 0);
            e[i] = 1;
            if (!rs.contains(e)) fail(rep.simple_roots_present, ox + ": missing simple root " + vec_str(e));
        }
        if (rs.contains(std::vector<long>(g.rank, 0))) fail(rep.simple_roots_present, ox + ": zero is a root");

        // CG3 and reducedness.
        std::map<std::vector<long>, std::vector<const std::vector<long>*>> directions;
        for (const auto& [root, depth] : rs.first_depth) {
            if (!sign_coherent(root)) fail(rep.cg3, ox + ": sign-incoherent root " + vec_str(root));
            directions[primitive_direction(root)].push_back(&root);
        }
        for (const auto& [dir, roots] : directions) {
            if (dir.empty()) continue;  // the zero root, flagged above
            for (const auto* r : roots) {
                // Every bucket member is c * dir; |c| != 1 is non-reduced.
                long c = 0;
                for (size_t k = 0; k < dir.size(); ++k)
                    if (dir[k] != 0) {
                        c = (*r)[k] / dir[k];
                        break;
                    }
                if (c != 1 && c != -1) fail(rep.reduced, ox + ": non-reduced root " + vec_str(*r));
            }
        }

        for (size_t i = 0; i < g.rank; ++i) {
            const size_t y = g.edges[x][i];
            if (y >= g.objects()) continue;

            // s_i^{r_i(X)} s_i^X = id exactly.
            const IntMatrix six = simple_reflection(g.cartans[x], i);
            if (simple_reflection(g.cartans[y], i) * six != IntMatrix::identity(g.rank))
                fail(rep.reflection_compatible,
                     ox + ": s_" + std::to_string(i + 1) + " does not invert across the edge");

            // Window-adjusted axiom (3): roots produced strictly inside the
            // bound map into the neighbor's root set.
            const RootSet& rt = rootsets[y];
            for (const auto& [root, depth] : rs.first_depth) {
                if (depth + 1 > bound) continue;
                if (!rt.contains(six.apply(root)))
                    fail(rep.reflection_compatible, ox + ": reflected root " + vec_str(six.apply(root)) +
                                                        " missing at neighbor " + std::to_string(y));
            }
        }

        // CG4 via the rank-2 counts.
        for (size_t i = 0; i < g.rank; ++i) {
            for (size_t j = 0; j < g.rank; ++j) {
                if (i == j) continue;
                const Rank2Count rc = rank2_from_roots(g, rs, x, i, j);
                if (!rc.agreement)
                    fail(rep.rank2_agreement, ox + ": rank-2 count " + std::to_string(rc.count) + " for (" +
                                                  std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                  ") disagrees with classification");
                if (rc.classified && rc.agreement) {
                    size_t cur = x;
                    for (size_t step = 0; step < *rc.classified; ++step) {
                        cur = g.edges[cur][j];
                        if (cur >= g.objects()) break;
                        cur = g.edges[cur][i];
                        if (cur >= g.objects()) break;
                    }
                    if (cur != x)
                        fail(rep.cg4, ox + ": (r_" + std::to_string(i + 1) + " r_" + std::to_string(j + 1) + ")^" +
                                          std::to_string(*rc.classified) + " is not the identity");
                }
            }
        }
    }
    return rep;
}

}  // namespace nw::weylroots

namespace nw::cartangraph {

// Defined here because the simple-connectivity half is a morphism-enumeration
// question.
Connectivity connectivity(const CartanGraph& g, size_t bound) {
    Connectivity c;
    c.bound = bound;
    c.connected = g.connected_from(0);
    c.simply_connected_within_bound = true;
    for (size_t x = 0; x < g.objects() && c.simply_connected_within_bound; ++x) {
        std::map<size_t, const nw::weylroots::WeylMorphism*> first_by_target;
        const auto all = nw::weylroots::morphisms_from(g, x, bound);
        for (const auto& w : all) {
            const auto [it, fresh] = first_by_target.emplace(w.target, &w);
            if (fresh) continue;
            c.simply_connected_within_bound = false;
            std::string ws;
            for (size_t k : w.word) ws += (ws.empty() ? "" : ",") + std::to_string(k + 1);
            c.witness = "objects " + std::to_string(x) + " -> " + std::to_string(w.target) +
                        " admit two morphisms within " + std::to_string(bound) + "; second word (" + ws + ")";
            break;
        }
    }
    return c;
}

}  // namespace nw::cartangraph
