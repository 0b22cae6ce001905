#include <nw/cartangraph/graph.hpp>
#include <nw/ydmod/iso.hpp>

#include <deque>
#include <sstream>

namespace nw::cartangraph {

using nw::nichols::CapExceeded;
using nw::reflect::cartan_of;
using nw::reflect::reflect;
using nw::reflect::TupleCatalog;

bool CartanGraph::is_standard() const {
    for (const auto& c : cartans)
        if (c != cartans.front()) return false;
    return !cartans.empty();
}

bool CartanGraph::connected_from(size_t start) const {
    if (start >= objects()) return false;
    std::vector<bool> seen(objects(), false);
    std::deque<size_t> q{start};
    seen[start] = true;
    size_t reached = 1;
    while (!q.empty()) {
        const size_t x = q.front();
        q.pop_front();
        for (size_t y : edges[x]) {
            if (y >= objects() || seen[y]) continue;
            seen[y] = true;
            ++reached;
            q.push_back(y);
        }
    }
    return reached == objects();
}

std::string CartanGraph::dot() const {
    std::ostringstream os;
    os << "graph cartan {\n";
    for (size_t x = 0; x < objects(); ++x)
        os << "  n" << x << " [label=\"" << (x < labels.size() ? labels[x] : "") << "\"];\n";
    for (size_t x = 0; x < objects(); ++x) {
        for (size_t i = 0; i < rank; ++i) {
            const size_t y = edges[x][i];
            if (y >= objects()) continue;  // unfilled edge of a non-closed graph
            if (y < x) continue;           // each unordered pair once; keeps self-loops
            os << "  n" << x << " -- n" << y << " [label=\"r" << (i + 1) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

size_t verify_axioms(CartanGraph& g) {
    size_t added = 0;
    auto flag = [&](std::string msg) {
        g.violations.push_back(std::move(msg));
        ++added;
    };
    if (g.cartans.size() != g.objects()) flag("object/matrix count mismatch");
    for (size_t x = 0; x < g.objects(); ++x) {
        if (g.edges[x].size() != g.rank) {
            flag("object " + std::to_string(x) + " has wrong edge arity");
            continue;
        }
        if (x < g.cartans.size()) {
            if (g.cartans[x].size() != g.rank) flag("matrix of object " + std::to_string(x) + " has wrong size");
            for (auto& v : g.cartans[x].validate()) flag("object " + std::to_string(x) + ": " + v);
        }
        for (size_t i = 0; i < g.rank; ++i) {
            const size_t y = g.edges[x][i];
            if (y >= g.objects()) {
                flag("dangling edge r" + std::to_string(i + 1) + " at object " + std::to_string(x));
                continue;
            }
            if (g.edges[y][i] != x)
                flag("CG1 fails: r" + std::to_string(i + 1) + " not involutive at object " + std::to_string(x));
            if (x < g.cartans.size() && y < g.cartans.size() && g.cartans[x].a[i] != g.cartans[y].a[i])
                flag("CG2 fails: row " + std::to_string(i + 1) + " differs across edge " + std::to_string(x) +
                     " -- " + std::to_string(y));
        }
    }
    return added;
}

CartanGraph abstract_graph(size_t rank, std::vector<CartanMatrix> cartans, std::vector<std::vector<size_t>> edges,
                           std::vector<std::string> labels) {
    CartanGraph g;
    g.rank = rank;
    g.cartans = std::move(cartans);
    g.edges = std::move(edges);
    if (labels.empty())
        for (size_t x = 0; x < g.objects(); ++x) labels.push_back("X" + std::to_string(x));
    g.labels = std::move(labels);
    verify_axioms(g);
    return g;
}

namespace {

std::string word_str(const std::vector<size_t>& w) {
    std::string s = "(";
    for (size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
    return s + ")";
}

}  // namespace

ExploreResult explore(const ModuleTuple& seed, size_t max_objects, size_t cap, size_t max_side) {
    const size_t rank = seed.size();
    ExploreResult res;
    res.graph.rank = rank;
    res.graph.closed = true;

    TupleCatalog cat;
    cat.classify(seed);
    res.representatives.push_back(seed);
    res.words.push_back({});
    res.graph.edges.push_back(std::vector<size_t>(rank, SIZE_MAX));
    res.graph.cartans.push_back(cartan_of(seed, cap, max_side));

    std::deque<size_t> frontier{0};
    while (!frontier.empty() && res.graph.closed) {
        const size_t x = frontier.front();
        frontier.pop_front();
        for (size_t i = 0; i < rank; ++i) {
            if (res.graph.edges[x][i] != SIZE_MAX) continue;
            ModuleTuple r = [&] {
                try {
                    return reflect(res.representatives[x], i, cap, max_side);
                } catch (const CapExceeded& e) {
                    auto w = res.words[x];
                    w.push_back(i);
                    throw CapExceeded(std::string(e.what()) + " reached by sequence " + word_str(w));
                }
            }();
            const size_t before = cat.size();
            const size_t id = cat.classify(r);
            if (id == before) {  // new object
                if (cat.size() > max_objects) {
                    res.graph.closed = false;
                    break;
                }
                res.representatives.push_back(r);
                auto w = res.words[x];
                w.push_back(i);
                res.graph.edges.push_back(std::vector<size_t>(rank, SIZE_MAX));
                try {
                    res.graph.cartans.push_back(cartan_of(r, cap, max_side));
                } catch (const CapExceeded& e) {
                    throw CapExceeded(std::string(e.what()) + " reached by sequence " + word_str(w));
                }
                res.words.push_back(std::move(w));
                frontier.push_back(id);
            }
            // The partner edge r_i at `id` is left for the BFS visit of `id`,
            // so CG1 is genuinely recomputed rather than assumed.
            res.graph.edges[x][i] = id;
        }
    }

    for (size_t x = 0; x < res.graph.objects(); ++x) res.graph.labels.push_back("X" + std::to_string(x));
    if (res.graph.closed) verify_axioms(res.graph);
    return res;
}

std::optional<size_t> locate(const ExploreResult& res, const ModuleTuple& t) {
    for (size_t x = 0; x < res.representatives.size(); ++x) {
        const ModuleTuple& rep = res.representatives[x];
        if (rep.size() != t.size()) continue;
        bool all = true;
        for (size_t j = 0; j < t.size() && all; ++j) all = nw::ydmod::iso_test(rep[j], t[j]).has_value();
        if (all) return x;
    }
    return std::nullopt;
}

void relabel(ExploreResult& res, const std::vector<const YDModule*>& refs) {
    for (size_t x = 0; x < res.representatives.size(); ++x) {
        std::string label = "(";
        const ModuleTuple& rep = res.representatives[x];
        for (size_t j = 0; j < rep.size(); ++j) {
            std::string slot = rep[j].name();
            for (const YDModule* ref : refs) {
                if (nw::ydmod::iso_test(rep[j], *ref)) {
                    slot = ref->name();
                    break;
                }
            }
            label += (j ? "," : "") + slot;
        }
        res.graph.labels[x] = label + ")";
    }
}

}  // namespace nw::cartangraph
