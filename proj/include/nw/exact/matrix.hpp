#pragma once

#include <nw/exact/cyclotomic.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace nw::exact {

// Dense matrix over Q(zeta). Row-major; sizes are small enough (couple of
// thousand) that dense exact arithmetic is the right tool.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    CycNumber& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const CycNumber& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // OpenMP over rows
    Matrix scaled(const CycNumber& s) const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Kronecker product: (A tensor B)[(i*pB+k),(j*qB+l)] = A[i][j]*B[k][l].
    static Matrix kron(const Matrix& a, const Matrix& b);

    Matrix column(size_t c) const;
    std::string str() const;

  private:
    size_t rows_, cols_;
    std::vector<CycNumber> a_;
};

namespace ref {
// Serial schoolbook multiply kept as the reference twin of operator*.
Matrix multiply(const Matrix& a, const Matrix& b);
}  // namespace ref

}  // namespace nw::exact
