#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "cqg/scalar.hpp"

namespace cqg {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct NotTriangularizable : std::runtime_error {
    explicit NotTriangularizable(const std::string& what) : std::runtime_error(what) {}
};
struct NonMonomialPivot : std::runtime_error {
    explicit NonMonomialPivot(const std::string& what) : std::runtime_error(what) {}
};

/// Dense matrix over any exact ring R.  R must provide default construction
/// (zero), R::one(), +, *, unary -, == and is_zero().
template <class R>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = R::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& at(int i, int j) { return e_[i * cols_ + j]; }
    const R& at(int i, int j) const { return e_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw DimensionMismatch("matmul " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_) + " by " + std::to_string(o.rows_) +
                                    "x" + std::to_string(o.cols_));
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const R& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += a * o.at(k, j);  // left factor from A, order matters
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + (-o.e_[i]);
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Left scalar multiple.
    Matrix scaled(const R& c) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
        return r;
    }

    template <class S>
    Matrix<S> map(const std::function<S(const R&)>& f) const {
        Matrix<S> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const R& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Number of entries that are not zero.
    int nonzero_count() const {
        int n = 0;
        for (const R& x : e_)
            if (!x.is_zero()) ++n;
        return n;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("shape mismatch");
    }

    int rows_, cols_;
    std::vector<R> e_;
};

/// Kronecker product: (A otimes B)[(i*rB+k, j*cB+l)] = A[i,j]*B[k,l].
template <class R>
Matrix<R> kron(const Matrix<R>& a, const Matrix<R>& b) {
    Matrix<R> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return r;
}

enum class SlotPair { s12, s13, s23 };

/// Embed a 4x4 two-site operator into three sites of local dimension 2,
/// acting on the named pair of tensor slots and as identity on the third.
/// Composite indices are flattened row-major: (i1,i2,i3) -> 4*i1+2*i2+i3.
template <class R>
Matrix<R> slot_embed(const Matrix<R>& m, SlotPair slots) {
    if (m.rows() != 4 || m.cols() != 4)
        throw DimensionMismatch("slot_embed expects a 4x4 matrix");
    int s1, s2;
    switch (slots) {
        case SlotPair::s12: s1 = 0; s2 = 1; break;
        case SlotPair::s13: s1 = 0; s2 = 2; break;
        default:            s1 = 1; s2 = 2; break;
    }
    Matrix<R> r(8, 8);
    for (int row = 0; row < 8; ++row) {
        int ri[3] = {(row >> 2) & 1, (row >> 1) & 1, row & 1};
        for (int col = 0; col < 8; ++col) {
            int ci[3] = {(col >> 2) & 1, (col >> 1) & 1, col & 1};
            bool ok = true;
            for (int s = 0; s < 3; ++s)
                if (s != s1 && s != s2 && ri[s] != ci[s]) ok = false;
            if (!ok) continue;
            r.at(row, col) = m.at(2 * ri[s1] + ri[s2], 2 * ci[s1] + ci[s2]);
        }
    }
    return r;
}

/// The 4x4 swap P with P(x otimes y) = y otimes x.
template <class R>
Matrix<R> permutation4() {
    Matrix<R> p(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p.at(2 * i + j, 2 * j + i) = R::one();
    return p;
}

/// Exact inverse of a Scalar matrix that is triangular up to simultaneous
/// row/column permutation with monomial pivots.  The result is verified by
/// multiplication in both orders on every call.
Matrix<Scalar> triangular_inverse(const Matrix<Scalar>& m);

}  // namespace cqg
