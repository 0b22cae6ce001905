#pragma once

#include <nw/cartangraph/graph.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nw::weylroots {

using nw::cartangraph::CartanGraph;
using nw::reflect::CartanMatrix;

// Dense square integer matrix, sized by the graph rank.
struct IntMatrix {
    size_t n = 0;
    std::vector<long> a;  // row-major

    IntMatrix() = default;
    explicit IntMatrix(size_t n) : n(n), a(n * n, 0) {}
    static IntMatrix identity(size_t n);

    long& at(size_t r, size_t c) { return a[r * n + c]; }
    long at(size_t r, size_t c) const { return a[r * n + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<long> apply(const std::vector<long>& v) const;  // matrix * column
    std::vector<long> column(size_t c) const;
    long row_sum(size_t r) const;

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }
    friend bool operator<(const IntMatrix& x, const IntMatrix& y) {
        return x.n != y.n ? x.n < y.n : x.a < y.a;
    }

    std::string str() const;  // [[..],[..]]
};

// s_i: alpha_j -> alpha_j - a_ij alpha_i; the identity except row i.
IntMatrix simple_reflection(const CartanMatrix& a, size_t i);

// Morphism of the Weyl groupoid, identified by (source, target, matrix);
// the word is a witness (generator indices in the order they were applied
// during the search).
struct WeylMorphism {
    size_t source = 0, target = 0;
    IntMatrix matrix;
    std::vector<size_t> word;
};

// All morphisms source -> anywhere of word length <= bound, deduplicated by
// (target, matrix). Generators act on the left: w extends to s_i^{target(w)} w.
std::vector<WeylMorphism> morphisms_from(const CartanGraph& g, size_t x, size_t bound);

// All morphisms anywhere -> x of word length <= bound, deduplicated by
// (source, matrix). Generators compose on the right: w extends to w s_i^Z
// with Z = r_i(source(w)).
std::vector<WeylMorphism> morphisms_into(const CartanGraph& g, size_t x, size_t bound);

// Morphisms x -> y within the bound (distinct matrices).
std::vector<WeylMorphism> hom_enumerate(const CartanGraph& g, size_t x, size_t y, size_t bound);

// Real roots at x: columns of matrices of all bounded morphisms into x,
// each tagged with the least word length that produced it.
struct RootSet {
    size_t object = 0;
    size_t bound = 0;
    std::map<std::vector<long>, size_t> first_depth;  // root -> least length

    bool contains(const std::vector<long>& r) const { return first_depth.count(r) != 0; }
    size_t size() const { return first_depth.size(); }
};
RootSet real_roots(const CartanGraph& g, size_t x, size_t bound);

// m_ij^X: the number of enumerated roots in N0 alpha_i + N0 alpha_j, with the
// 2x2 GCM classification (a_ij a_ji in {0,1,2,3} -> 2,3,4,6; else unbounded)
// as the cross-check.
struct Rank2Count {
    size_t count = 0;
    std::optional<size_t> classified;  // empty = unbounded type
    bool agreement = true;
};
Rank2Count rank2_count(const CartanGraph& g, size_t x, size_t i, size_t j, size_t bound);

// Axioms over every object within the bound: sign coherence of all roots
// (CG3), rank-2 periodicity of the object map (CG4), presence of the simple
// roots and absence of 0, reducedness (no root is a proper multiple of
// another), compatibility s_i^X(window roots of X) inside roots of r_i(X),
// and the matrix identity s_i^{r_i(X)} s_i^X = id.
struct AxiomReport {
    bool cg3 = true;
    bool cg4 = true;
    bool simple_roots_present = true;
    bool reduced = true;
    bool reflection_compatible = true;
    bool rank2_agreement = true;
    std::vector<std::string> failures;

    bool all() const {
        return cg3 && cg4 && simple_roots_present && reduced && reflection_compatible && rank2_agreement;
    }
};
AxiomReport cartan_axioms(const CartanGraph& g, size_t bound);

}  // namespace nw::weylroots
