#include <nw/exact/linalg.hpp>

#include <stdexcept>

namespace nw::exact {

namespace {

// Kernel basis from a (not necessarily reduced) row echelon form: for each
// free column f, set that coordinate to 1, all other free coordinates to 0,
// and solve the pivot coordinates bottom-up. This normal form matches the
// RREF-derived kernel exactly.
Matrix kernel_from_echelon(const Matrix& e, const std::vector<size_t>& pivot_cols) {
    const size_t n = e.cols();
    const size_t r = pivot_cols.size();
    std::vector<char> is_pivot(n, 0);
    for (size_t p : pivot_cols) is_pivot[p] = 1;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix k(n, free_cols.size());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::vector<CycNumber> v(n);
        v[free_cols[fi]] = CycNumber::one();
        for (size_t row = r; row-- > 0;) {
            const size_t p = pivot_cols[row];
            CycNumber acc;
            for (size_t c = p + 1; c < n; ++c) {
                if (v[c].is_zero()) continue;
                acc += e.at(row, c) * v[c];
            }
            v[p] = -(acc / e.at(row, p));
        }
        for (size_t c = 0; c < n; ++c) k.at(c, fi) = v[c];
    }
    return k;
}

}  // namespace

RankKernel rank_kernel(const Matrix& m) {
    Matrix a = m;
    const size_t rows = a.rows(), cols = a.cols();
    std::vector<size_t> pivot_cols;
    CycNumber prev = CycNumber::one();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t pr = r;
        while (pr < rows && a.at(pr, col).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (size_t c = 0; c < cols; ++c) std::swap(a.at(r, c), a.at(pr, c));
        const long lo = static_cast<long>(r + 1), hi = static_cast<long>(rows);
        const CycNumber pivot = a.at(r, col);
#pragma omp parallel for schedule(dynamic)
        for (long rr = lo; rr < hi; ++rr) {
            const size_t row = static_cast<size_t>(rr);
            const CycNumber head = a.at(row, col);
            for (size_t c = col + 1; c < cols; ++c)
                a.at(row, c) = (pivot * a.at(row, c) - head * a.at(r, c)) / prev;
            a.at(row, col) = CycNumber::zero();
        }
        prev = pivot;
        pivot_cols.push_back(col);
        ++r;
    }
    RankKernel out;
    out.rank = r;
    out.pivot_cols = pivot_cols;
    out.kernel = kernel_from_echelon(a, pivot_cols);
    return out;
}

CycNumber determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: square matrix required");
    Matrix a = m;
    const size_t n = a.rows();
    if (n == 0) return CycNumber::one();
    CycNumber prev = CycNumber::one();
    bool negate = false;
    for (size_t col = 0; col < n; ++col) {
        size_t pr = col;
        while (pr < n && a.at(pr, col).is_zero()) ++pr;
        if (pr == n) return CycNumber::zero();
        if (pr != col) {
            negate = !negate;
            for (size_t c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(pr, c));
        }
        const CycNumber pivot = a.at(col, col);
        for (size_t row = col + 1; row < n; ++row) {
            const CycNumber head = a.at(row, col);
            for (size_t c = col + 1; c < n; ++c)
                a.at(row, c) = (pivot * a.at(row, c) - head * a.at(col, c)) / prev;
            a.at(row, col) = CycNumber::zero();
        }
        prev = pivot;
    }
    const CycNumber det = a.at(n - 1, n - 1);
    return negate ? -det : det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: square matrix required");
    const size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t pr = col;
        while (pr < n && a.at(pr, col).is_zero()) ++pr;
        if (pr == n) return std::nullopt;
        if (pr != col)
            for (size_t c = 0; c < n; ++c) {
                std::swap(a.at(col, c), a.at(pr, c));
                std::swap(inv.at(col, c), inv.at(pr, c));
            }
        const CycNumber piv = a.at(col, col).inverse();
        for (size_t c = 0; c < n; ++c) {
            a.at(col, c) *= piv;
            inv.at(col, c) *= piv;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col) continue;
            const CycNumber f = a.at(row, col);
            if (f.is_zero()) continue;
            for (size_t c = 0; c < n; ++c) {
                a.at(row, c) -= f * a.at(col, c);
                inv.at(row, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

IntertwinerResult solve_intertwiner(const std::vector<Matrix>& as, const std::vector<Matrix>& bs,
                                    size_t dim_a, size_t dim_b) {
    if (as.size() != bs.size()) throw std::invalid_argument("intertwiner: operator count mismatch");
    // Unknown T is dim_b x dim_a; flatten row-major: t[(i,j)] at i*dim_a+j.
    // Constraint per h and (i,j): sum_k T[i][k] A[k][j] - sum_k B[i][k] T[k][j] = 0.
    const size_t nvar = dim_a * dim_b;
    Matrix sys(as.size() * nvar, nvar);
    size_t row = 0;
    for (size_t h = 0; h < as.size(); ++h) {
        const Matrix& A = as[h];
        const Matrix& B = bs[h];
        for (size_t i = 0; i < dim_b; ++i)
            for (size_t j = 0; j < dim_a; ++j, ++row) {
                for (size_t k = 0; k < dim_a; ++k) sys.at(row, i * dim_a + k) += A.at(k, j);
                for (size_t k = 0; k < dim_b; ++k) sys.at(row, k * dim_a + j) -= B.at(i, k);
            }
    }
    const RankKernel rk = rank_kernel(sys);
    IntertwinerResult res;
    res.space_dim = rk.kernel.cols();
    if (res.space_dim == 0) return res;
    res.t = Matrix(dim_b, dim_a);
    for (size_t i = 0; i < dim_b; ++i)
        for (size_t j = 0; j < dim_a; ++j) res.t.at(i, j) = rk.kernel.at(i * dim_a + j, 0);
    res.exists = !res.t.is_zero();
    if (res.exists && dim_a == dim_b) res.invertible = !determinant(res.t).is_zero();
    return res;
}

namespace ref {

RankKernel rank_kernel(const Matrix& m) {
    Matrix a = m;
    const size_t rows = a.rows(), cols = a.cols();
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t pr = r;
        while (pr < rows && a.at(pr, col).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (size_t c = 0; c < cols; ++c) std::swap(a.at(r, c), a.at(pr, c));
        const CycNumber inv = a.at(r, col).inverse();
        for (size_t c = col; c < cols; ++c) a.at(r, c) *= inv;
        for (size_t row = 0; row < rows; ++row) {
            if (row == r) continue;
            const CycNumber f = a.at(row, col);
            if (f.is_zero()) continue;
            for (size_t c = col; c < cols; ++c) a.at(row, c) -= f * a.at(r, c);
        }
        pivot_cols.push_back(col);
        ++r;
    }
    RankKernel out;
    out.rank = r;
    out.pivot_cols = pivot_cols;
    // kernel straight off the RREF
    std::vector<char> is_pivot(cols, 0);
    for (size_t p : pivot_cols) is_pivot[p] = 1;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    out.kernel = Matrix(cols, free_cols.size());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        out.kernel.at(free_cols[fi], fi) = CycNumber::one();
        for (size_t row = 0; row < r; ++row) out.kernel.at(pivot_cols[row], fi) = -a.at(row, free_cols[fi]);
    }
    return out;
}

}  // namespace ref

}  // namespace nw::exact
