#pragma once

#include <nw/exact/matrix.hpp>

#include <optional>
#include <vector>

namespace nw::exact {

struct RankKernel {
    size_t rank = 0;
    // Kernel basis as columns, echelon-normalized: each basis vector carries 1
    // in its own free coordinate and 0 in every other free coordinate, so the
    // basis is unique and comparable across implementations.
    Matrix kernel;
    std::vector<size_t> pivot_cols;
};

// Fraction-free Bareiss-style forward elimination with row pivoting; the row
// update loop is the OpenMP kernel. Exact over Q(zeta).
RankKernel rank_kernel(const Matrix& m);

CycNumber determinant(const Matrix& m);          // Bareiss, square input
std::optional<Matrix> inverse(const Matrix& m);  // Gauss-Jordan; nullopt if singular

// Solve T*A_h = B_h*T jointly over all h; T maps the A-space to the B-space.
// space_dim is the dimension of the full solution space (Schur: at most 1
// when both sides are simple).
struct IntertwinerResult {
    size_t space_dim = 0;
    bool exists = false;      // a nonzero solution exists
    bool invertible = false;  // the chosen solution is a linear isomorphism
    Matrix t;
};
IntertwinerResult solve_intertwiner(const std::vector<Matrix>& as, const std::vector<Matrix>& bs,
                                    size_t dim_a, size_t dim_b);

namespace ref {
// Serial reference: classic Gauss-Jordan over the field, kernel from the
// reduced row echelon form. Independent arithmetic path from the Bareiss
// kernel above; the suites assert exact agreement.
RankKernel rank_kernel(const Matrix& m);
}  // namespace ref

}  // namespace nw::exact
