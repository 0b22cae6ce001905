#include <nw/exact/linalg.hpp>
#include <nw/nichols/adjoint.hpp>

namespace nw::nichols {

AdChain ad_chain(const YDModule& mi, const YDModule& mj, size_t cap, size_t max_side) {
    AdChain chain;
    chain.space = std::make_shared<BraidedSpace>(std::vector<const YDModule*>{&mi, &mj}, max_side);
    chain.part_i = 0;
    chain.part_j = 1;

    std::vector<TensorElement> base;
    base.reserve(mj.dim());
    for (size_t k = 0; k < mj.dim(); ++k) base.push_back(basis_element(chain.space, 1, k));
    chain.levels.push_back(std::move(base));

    for (size_t m = 1; m <= cap; ++m) {
        const std::vector<TensorElement>& prev = chain.levels.back();
        std::vector<TensorElement> cands;
        cands.reserve(mi.dim() * prev.size());
        for (size_t k = 0; k < mi.dim(); ++k) {
            const TensorElement a = basis_element(chain.space, 0, k);
            for (const TensorElement& x : prev) cands.push_back(ad_apply(a, x));
        }

        // Columns are the symmetrizer images of the candidates; columns that
        // are independent there stay independent in the Nichols quotient, and
        // the dependent ones are redundant because the symmetrizer kernel is
        // an ideal stable under the group action.
        const Matrix& sym = chain.space->symmetrizer(m + 1);
        Matrix img(chain.space->power_dim(m + 1), cands.size());
        for (size_t c = 0; c < cands.size(); ++c) {
            const TensorElement s = apply_matrix(sym, cands[c]);
            for (const auto& [idx, coeff] : s.coeffs) img.at(idx, c) = coeff;
        }
        const auto rk = nw::exact::rank_kernel(img);
        if (rk.rank == 0) {
            chain.nilpotency = m - 1;
            return chain;
        }
        std::vector<TensorElement> level;
        level.reserve(rk.rank);
        for (size_t c : rk.pivot_cols) level.push_back(cands[c]);
        chain.levels.push_back(std::move(level));
    }
    return chain;  // nilpotency left absent: no level within the cap vanished
}

std::optional<size_t> cartan_entry(const YDModule& mi, const YDModule& mj, size_t cap, size_t max_side) {
    return ad_chain(mi, mj, cap, max_side).nilpotency;
}

}  // namespace nw::nichols
