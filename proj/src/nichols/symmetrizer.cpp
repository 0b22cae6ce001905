#include <nw/exact/linalg.hpp>
#include <nw/nichols/space.hpp>

#include <algorithm>
#include <numeric>

namespace nw::nichols {

const Matrix& BraidedSpace::symmetrizer(size_t n) const {
    if (n == 0) throw std::invalid_argument("symmetrizer degree must be >= 1");
    {
        std::lock_guard<std::mutex> lock(mu_);
        const auto it = symmetrizers_.find(n);
        if (it != symmetrizers_.end()) return it->second;
    }
    Matrix built = build_symmetrizer(n);  // recurses through the public accessors
    std::lock_guard<std::mutex> lock(mu_);
    return symmetrizers_.emplace(n, std::move(built)).first->second;
}

Matrix BraidedSpace::build_symmetrizer(size_t n) const {
    if (n == 1) return Matrix::identity(dim_);
    const size_t total = power_dim(n);
    // id + s_{n-1} + s_{n-1}s_{n-2} + ... + s_{n-1}...s_1
    Matrix sum = Matrix::identity(total);
    Matrix acc = sigma(n, n - 1);
    sum = sum + acc;
    for (size_t k = n - 1; k-- > 1;) {
        acc = acc * sigma(n, k);
        sum = sum + acc;
    }
    return Matrix::kron(symmetrizer(n - 1), Matrix::identity(dim_)) * sum;
}

Matrix symmetrizer_by_word_sum(const BraidedSpace& v, size_t n) {
    const size_t total = v.power_dim(n);
    Matrix sum(total, total);
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Reduced word by bubble sort: each adjacent descent swap is one
        // braid letter; the letter count equals the inversion number.
        std::vector<size_t> p = perm;
        Matrix lift = Matrix::identity(total);
        bool moved = true;
        while (moved) {
            moved = false;
            for (size_t t = 0; t + 1 < n; ++t) {
                if (p[t] > p[t + 1]) {
                    std::swap(p[t], p[t + 1]);
                    lift = lift * v.sigma(n, t + 1);
                    moved = true;
                }
            }
        }
        sum = sum + lift;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

std::vector<size_t> nichols_dims(const BraidedSpace& v, size_t max_deg) {
    std::vector<size_t> dims{1};
    for (size_t n = 1; n <= max_deg; ++n) dims.push_back(nw::exact::rank_kernel(v.symmetrizer(n)).rank);
    return dims;
}

}  // namespace nw::nichols
