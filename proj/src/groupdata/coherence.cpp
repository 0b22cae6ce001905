#include <nw/groupdata/coherence.hpp>

#include <stdexcept>

namespace nw::groupdata {

struct BracketTree::Node {
    std::shared_ptr<const Node> l, r;  // both null for a leaf
    GroupElement degree;
    size_t leaves;
};

BracketTree BracketTree::leaf(const AbelianGroup& g, GroupElement degree) {
    auto n = std::make_shared<Node>();
    n->degree = std::move(degree);
    n->leaves = 1;
    return BracketTree(std::move(n), &g);
}

BracketTree BracketTree::node(const BracketTree& l, const BracketTree& r) {
    if (l.group_ != r.group_) throw std::invalid_argument("bracket tree: children over different groups");
    auto n = std::make_shared<Node>();
    n->l = l.n_;
    n->r = r.n_;
    n->degree = l.group_->mul(l.n_->degree, r.n_->degree);
    n->leaves = l.n_->leaves + r.n_->leaves;
    return BracketTree(std::move(n), l.group_);
}

BracketTree BracketTree::left_comb(const AbelianGroup& g, const std::vector<GroupElement>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("bracket tree: empty degree sequence");
    BracketTree t = leaf(g, degrees[0]);
    for (size_t i = 1; i < degrees.size(); ++i) t = node(t, leaf(g, degrees[i]));
    return t;
}

BracketTree BracketTree::right_comb(const AbelianGroup& g, const std::vector<GroupElement>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("bracket tree: empty degree sequence");
    BracketTree t = leaf(g, degrees.back());
    for (size_t i = degrees.size() - 1; i-- > 0;) t = node(leaf(g, degrees[i]), t);
    return t;
}

bool BracketTree::is_leaf() const { return n_->l == nullptr; }
BracketTree BracketTree::left() const { return BracketTree(n_->l, group_); }
BracketTree BracketTree::right() const { return BracketTree(n_->r, group_); }
const GroupElement& BracketTree::degree() const { return n_->degree; }
size_t BracketTree::leaf_count() const { return n_->leaves; }

std::vector<GroupElement> BracketTree::leaf_degrees() const {
    std::vector<GroupElement> out;
    out.reserve(leaf_count());
    const auto walk = [&out](auto&& self, const Node& n) -> void {
        if (!n.l) {
            out.push_back(n.degree);
            return;
        }
        self(self, *n.l);
        self(self, *n.r);
    };
    walk(walk, *n_);
    return out;
}

bool BracketTree::operator==(const BracketTree& o) const {
    if (group_ != o.group_) return false;
    const auto eq = [](auto&& self, const Node& a, const Node& b) -> bool {
        if ((a.l == nullptr) != (b.l == nullptr)) return false;
        if (a.degree != b.degree) return false;
        if (!a.l) return true;
        return self(self, *a.l, *b.l) && self(self, *a.r, *b.r);
    };
    return eq(eq, *n_, *o.n_);
}

std::string BracketTree::str() const {
    if (is_leaf()) return group_->str(degree());
    return "(" + left().str() + " " + right().str() + ")";
}

namespace {

void check_same_sequence(const BracketTree& from, const BracketTree& to) {
    if (&from.group() != &to.group() || from.leaf_degrees() != to.leaf_degrees())
        throw std::invalid_argument("coherence scalar: trees bracket different degree sequences: " + from.str() +
                                    " vs " + to.str());
}

// All subtrees of shape x (y z), as root-relative paths (0 = left, 1 = right).
void rotation_sites(const BracketTree& t, std::vector<size_t>& path, std::vector<std::vector<size_t>>& out) {
    if (t.is_leaf()) return;
    if (!t.right().is_leaf()) out.push_back(path);
    path.push_back(0);
    rotation_sites(t.left(), path, out);
    path.back() = 1;
    rotation_sites(t.right(), path, out);
    path.pop_back();
}

BracketTree rotate_at(const BracketTree& t, const std::vector<size_t>& path, size_t i, CycNumber& s,
                      const ThreeCocycle& phi) {
    if (i == path.size()) {
        const BracketTree x = t.left(), yz = t.right();
        s *= phi.eval(x.degree(), yz.left().degree(), yz.right().degree());
        return BracketTree::node(BracketTree::node(x, yz.left()), yz.right());
    }
    if (path[i] == 0) return BracketTree::node(rotate_at(t.left(), path, i + 1, s, phi), t.right());
    return BracketTree::node(t.left(), rotate_at(t.right(), path, i + 1, s, phi));
}

// Scalar picked up converting `t` to the left comb along the canonical
// path: at each step rotate the deepest right-leaning node, leftmost on a
// depth tie.
CycNumber collapse_to_left_comb(const ThreeCocycle& phi, BracketTree t) {
    CycNumber s = CycNumber::one();
    while (true) {
        std::vector<std::vector<size_t>> sites;
        std::vector<size_t> path;
        rotation_sites(t, path, sites);
        if (sites.empty()) return s;  // left comb reached
        const std::vector<size_t>* pick = &sites.front();
        for (const auto& cand : sites)
            if (cand.size() > pick->size() || (cand.size() == pick->size() && cand < *pick)) pick = &cand;
        t = rotate_at(t, *pick, 0, s, phi);
    }
}

}  // namespace

CycNumber coherence_scalar(const ThreeCocycle& phi, const BracketTree& from, const BracketTree& to) {
    check_same_sequence(from, to);
    return collapse_to_left_comb(phi, from) * collapse_to_left_comb(phi, to).inverse();
}

CycNumber coherence_scalar_random_path(const ThreeCocycle& phi, const BracketTree& from, const BracketTree& to,
                                       std::mt19937& rng) {
    check_same_sequence(from, to);
    const auto collapse_random = [&phi, &rng](BracketTree t) {
        CycNumber s = CycNumber::one();
        while (true) {
            std::vector<std::vector<size_t>> sites;
            std::vector<size_t> path;
            rotation_sites(t, path, sites);
            if (sites.empty()) return s;  // left comb reached
            const auto& pick = sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
            t = rotate_at(t, pick, 0, s, phi);
        }
    };
    return collapse_random(from) * collapse_random(to).inverse();
}

BracketTree random_tree(const AbelianGroup& g, const std::vector<GroupElement>& degrees, std::mt19937& rng) {
    if (degrees.empty()) throw std::invalid_argument("bracket tree: empty degree sequence");
    const auto build = [&](auto&& self, size_t lo, size_t hi) -> BracketTree {  // [lo, hi)
        if (hi - lo == 1) return BracketTree::leaf(g, degrees[lo]);
        const size_t cut = std::uniform_int_distribution<size_t>(lo + 1, hi - 1)(rng);
        return BracketTree::node(self(self, lo, cut), self(self, cut, hi));
    };
    return build(build, 0, degrees.size());
}

}  // namespace nw::groupdata
