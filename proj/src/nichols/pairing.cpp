#include <nw/groupdata/coherence.hpp>
#include <nw/nichols/pairing.hpp>

#include <algorithm>

namespace nw::nichols {

using nw::groupdata::BracketTree;

CycNumber evaluation_scalar(const ThreeCocycle& phi, const GroupElement& alpha, size_t n) {
    const AbelianGroup& g = phi.group();
    const GroupElement ainv = g.inv(alpha);
    CycNumber s(1);
    for (size_t i = 0; i < n; ++i) {
        const size_t k = n - i;  // (dual, primal) pairs still uncontracted
        std::vector<GroupElement> degs;
        degs.reserve(2 * k);
        for (size_t t = 0; t < k; ++t) degs.push_back(ainv);
        for (size_t t = 0; t < k; ++t) degs.push_back(alpha);
        const BracketTree from = BracketTree::left_comb(g, degs);
        // Left comb over 2k-1 super-leaves whose k-th entry is the isolated
        // innermost (dual, primal) pair. Contracting that node leaves the
        // next left comb unchanged because its degree is the identity.
        std::vector<BracketTree> supers;
        supers.reserve(2 * k - 1);
        for (size_t t = 0; t + 1 < k; ++t) supers.push_back(BracketTree::leaf(g, ainv));
        supers.push_back(BracketTree::node(BracketTree::leaf(g, ainv), BracketTree::leaf(g, alpha)));
        for (size_t t = 0; t + 1 < k; ++t) supers.push_back(BracketTree::leaf(g, alpha));
        BracketTree to = supers[0];
        for (size_t t = 1; t < supers.size(); ++t) to = BracketTree::node(to, supers[t]);
        s = s * coherence_scalar(phi, from, to);
    }
    return s;
}

namespace {

// Digit reversal of a flat multi-index: dual slot j pairs with primal slot
// n+1-j, so the delta pattern of the full evaluation reverses the word.
size_t reversed_index(const BraidedSpace& space, size_t flat, size_t n) {
    std::vector<size_t> digits = space.decode(flat, n);
    std::reverse(digits.begin(), digits.end());
    return space.encode(digits);
}

}  // namespace

Matrix pairing_gram(const YDModule& v, size_t n, size_t max_side) {
    const BraidedSpace space(v, max_side);
    const Matrix& sym = space.symmetrizer(n);
    const CycNumber s = evaluation_scalar(v.cocycle(), v.degree(), n);
    const size_t total = space.power_dim(n);
    Matrix gram(total, total);
    for (size_t f = 0; f < total; ++f) {
        const size_t rf = reversed_index(space, f, n);
        for (size_t mu = 0; mu < total; ++mu) gram.at(f, mu) = s * sym.at(rf, mu);
    }
    return gram;
}

Matrix pairing_gram_dualside(const YDModule& v, size_t n, size_t max_side) {
    const YDModule vd = v.dual(v.name() + "_dual");
    const BraidedSpace space(vd, max_side);
    const Matrix& symd = space.symmetrizer(n);
    const CycNumber s = evaluation_scalar(v.cocycle(), v.degree(), n);
    const size_t total = space.power_dim(n);
    Matrix gram(total, total);
    for (size_t f = 0; f < total; ++f) {
        for (size_t mu = 0; mu < total; ++mu) gram.at(f, mu) = s * symd.at(reversed_index(space, mu, n), f);
    }
    return gram;
}

}  // namespace nw::nichols
