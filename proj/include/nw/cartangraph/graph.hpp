#pragma once

#include <nw/reflect/reflect.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nw::cartangraph {

using nw::reflect::CartanMatrix;
using nw::ydmod::ModuleTuple;
using nw::ydmod::YDModule;

// Semi-Cartan graph: objects with one generalized Cartan matrix each and an
// involutive reflection map r_i per index. Holds either the classes found by
// exploring a module tuple or abstract user-supplied exchange data.
struct CartanGraph {
    size_t rank = 0;
    std::vector<std::string> labels;         // per object
    std::vector<std::vector<size_t>> edges;  // edges[x][i] = r_i(x)
    std::vector<CartanMatrix> cartans;       // per object
    bool closed = true;                      // discovery reached closure
    std::vector<std::string> violations;     // axiom failures (empty = pass)

    size_t objects() const { return edges.size(); }
    // All objects carry the same matrix (meaningful once closed).
    bool is_standard() const;
    // Every object reachable from `start` along the reflection edges.
    bool connected_from(size_t start = 0) const;
    std::string dot() const;  // undirected, edges labeled r_i
};

// Shape, CG1 (r_i^2 = id) and CG2 (rows match across edges) verification;
// appends human-readable findings to g.violations, returns how many.
size_t verify_axioms(CartanGraph& g);

// Abstract mode: no algebra backend, data given directly.
CartanGraph abstract_graph(size_t rank, std::vector<CartanMatrix> cartans, std::vector<std::vector<size_t>> edges,
                           std::vector<std::string> labels = {});

struct ExploreResult {
    CartanGraph graph;
    std::vector<ModuleTuple> representatives;  // per object id
    std::vector<std::vector<size_t>> words;    // reflection sequence reaching each object
};

// BFS over reflections from the seed, deduplicating objects through the
// isomorphism catalog. Discovery stops (closed = false) once max_objects
// classes exist. Throws nichols::CapExceeded, naming the failing reflection
// sequence, if some reflection is undefined within cap.
ExploreResult explore(const ModuleTuple& seed, size_t max_objects = 256, size_t cap = 8,
                      size_t max_side = nw::nichols::BraidedSpace::kDefaultMaxSide);

// Object id of a tuple in an explored result (componentwise isomorphism).
std::optional<size_t> locate(const ExploreResult& res, const ModuleTuple& t);

// Relabel every object "(a,b,c)" by matching its representative's slots
// against the given named modules; unmatched slots keep their own names.
void relabel(ExploreResult& res, const std::vector<const YDModule*>& refs);

// Whether the reflection edges span the objects and whether the Weyl
// groupoid has at most one morphism between any two objects within word
// bound L (checked by morphism enumeration; a counterexample is reported).
struct Connectivity {
    bool connected = false;
    bool simply_connected_within_bound = false;
    size_t bound = 0;
    std::string witness;  // a non-identity closed morphism, when found
};
Connectivity connectivity(const CartanGraph& g, size_t bound);

}  // namespace nw::cartangraph
