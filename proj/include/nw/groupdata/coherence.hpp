#pragma once

#include <nw/groupdata/cocycle.hpp>
#include <nw/groupdata/group.hpp>

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace nw::groupdata {

// Immutable binary bracketing of a sequence of group degrees. Each node
// carries the product degree of its leaves, so associator scalars can be
// read off locally.
class BracketTree {
  public:
    static BracketTree leaf(const AbelianGroup& g, GroupElement degree);
    static BracketTree node(const BracketTree& l, const BracketTree& r);
    // (((d1 d2) d3) ... dn)
    static BracketTree left_comb(const AbelianGroup& g, const std::vector<GroupElement>& degrees);
    // (d1 (d2 (... dn)))
    static BracketTree right_comb(const AbelianGroup& g, const std::vector<GroupElement>& degrees);

    bool is_leaf() const;
    BracketTree left() const;   // requires !is_leaf()
    BracketTree right() const;  // requires !is_leaf()
    const GroupElement& degree() const;  // product of all leaf degrees
    size_t leaf_count() const;
    std::vector<GroupElement> leaf_degrees() const;
    const AbelianGroup& group() const { return *group_; }

    bool operator==(const BracketTree& o) const;
    bool operator!=(const BracketTree& o) const { return !(*this == o); }

    std::string str() const;  // e.g. "((h1 h2) h3)"

  private:
    struct Node;
    BracketTree(std::shared_ptr<const Node> n, const AbelianGroup* g) : n_(std::move(n)), group_(g) {}
    std::shared_ptr<const Node> n_;
    const AbelianGroup* group_;
};

// Scalar relating coefficients of the same leaf sequence under two
// bracketings: one re-bracketing step x (y z) -> (x y) z multiplies a
// coefficient by Phi(deg x, deg y, deg z), and the total is the product
// along any rotation path from `from` to `to` (path-independent because
// Phi satisfies the 3-cocycle identity). Throws if the trees do not carry
// the same leaf degree sequence.
CycNumber coherence_scalar(const ThreeCocycle& phi, const BracketTree& from, const BracketTree& to);

// Same value computed along a uniformly random rotation path; used to test
// path independence.
CycNumber coherence_scalar_random_path(const ThreeCocycle& phi, const BracketTree& from, const BracketTree& to,
                                       std::mt19937& rng);

// Uniformly random bracketing of the given degree sequence.
BracketTree random_tree(const AbelianGroup& g, const std::vector<GroupElement>& degrees, std::mt19937& rng);

}  // namespace nw::groupdata
