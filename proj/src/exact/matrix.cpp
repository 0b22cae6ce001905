#include <nw/exact/matrix.hpp>

#include <sstream>
#include <stdexcept>

namespace nw::exact {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycNumber::one();
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: shape mismatch in +");
    Matrix s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: shape mismatch in -");
    Matrix s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix: shape mismatch in *");
    Matrix p(rows_, o.cols_);
    const long n = static_cast<long>(rows_);
#pragma omp parallel for schedule(dynamic)
    for (long r = 0; r < n; ++r) {
        for (size_t k = 0; k < cols_; ++k) {
            const CycNumber& arK = at(static_cast<size_t>(r), k);
            if (arK.is_zero()) continue;
            for (size_t c = 0; c < o.cols_; ++c) {
                const CycNumber& bkc = o.at(k, c);
                if (bkc.is_zero()) continue;
                p.at(static_cast<size_t>(r), c) += arK * bkc;
            }
        }
    }
    return p;
}

Matrix Matrix::scaled(const CycNumber& s) const {
    Matrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const CycNumber& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (size_t r = 0; r < b.rows(); ++r)
                for (size_t c = 0; c < b.cols(); ++c) {
                    const CycNumber& brc = b.at(r, c);
                    if (brc.is_zero()) continue;
                    k.at(i * b.rows() + r, j * b.cols() + c) = aij * brc;
                }
        }
    return k;
}

Matrix Matrix::column(size_t c) const {
    Matrix v(rows_, 1);
    for (size_t r = 0; r < rows_; ++r) v.at(r, 0) = at(r, c);
    return v;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << at(r, c).str();
        }
        os << "]\n";
    }
    return os.str();
}

namespace ref {

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix: shape mismatch in ref multiply");
    Matrix p(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c) {
            CycNumber acc;
            for (size_t k = 0; k < a.cols(); ++k) acc += a.at(r, k) * b.at(k, c);
            p.at(r, c) = acc;
        }
    return p;
}

}  // namespace ref

}  // namespace nw::exact
