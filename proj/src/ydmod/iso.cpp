#include <nw/exact/linalg.hpp>
#include <nw/ydmod/iso.hpp>

namespace nw::ydmod {

std::optional<Matrix> iso_test(const YDModule& a, const YDModule& b) {
    if (&a.group() != &b.group() || a.degree() != b.degree() || a.dim() != b.dim()) return std::nullopt;
    if (a.fingerprint() != b.fingerprint()) return std::nullopt;  // necessary condition, cheap filter
    std::vector<Matrix> as, bs;
    for (size_t l = 0; l < a.group().rank(); ++l) {
        as.push_back(a.action(a.group().generator(l)));
        bs.push_back(b.action(b.group().generator(l)));
    }
    // Same degree means both sides satisfy the same projective cocycle, so a
    // generator intertwiner extends to all canonical words.
    const auto res = nw::exact::solve_intertwiner(as, bs, a.dim(), b.dim());
    if (!res.invertible) return std::nullopt;
    return res.t;
}

}  // namespace nw::ydmod
