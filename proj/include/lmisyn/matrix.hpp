#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lmisyn/errors.hpp"

namespace lmisyn {

/// Dense matrix with value semantics, row-major storage.
template <class T>
class BasicMatrix {
 public:
    BasicMatrix() = default;

    BasicMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    BasicMatrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionMismatch("ragged initializer");
            for (const T& v : row) data_.push_back(v);
        }
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    static BasicMatrix zeros(std::size_t rows, std::size_t cols) { return BasicMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    BasicMatrix operator+(const BasicMatrix& o) const {
        check_same_shape(o);
        BasicMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }

    BasicMatrix operator-(const BasicMatrix& o) const {
        check_same_shape(o);
        BasicMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }

    BasicMatrix operator-() const {
        BasicMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }

    BasicMatrix operator*(const BasicMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
        BasicMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T a = (*this)(i, k);
                if (a == T{}) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    BasicMatrix operator*(const T& s) const {
        BasicMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
        return r;
    }

    BasicMatrix transpose() const {
        BasicMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Copy the block of shape (r, c) whose top-left corner is (i0, j0).
    BasicMatrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        if (i0 + r > rows_ || j0 + c > cols_) throw DimensionMismatch("block out of range");
        BasicMatrix out(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
        return out;
    }

    /// Write a block into this matrix at (i0, j0).
    void set_block(std::size_t i0, std::size_t j0, const BasicMatrix& m) {
        if (i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_) throw DimensionMismatch("set_block out of range");
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) (*this)(i0 + i, j0 + j) = m(i, j);
    }

 private:
    void check_same_shape(const BasicMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;
using CMatrix = BasicMatrix<std::complex<double>>;

template <class T>
BasicMatrix<T> operator*(const T& s, const BasicMatrix<T>& m) { return m * s; }

inline Matrix operator*(double s, const Matrix& m) { return m * s; }

/// Frobenius norm.
double frobenius_norm(const Matrix& a);
double frobenius_norm(const CMatrix& a);

/// Largest absolute entry.
double max_abs(const Matrix& a);

/// Promote a real matrix to complex.
CMatrix to_complex(const Matrix& a);

CMatrix conjugate_transpose(const CMatrix& a);

// ---------------------------------------------------------------------------
// Dense kernels. All are deterministic; tolerances are relative to Frobenius
// norms of the inputs with an absolute floor of 1e-14.
// ---------------------------------------------------------------------------

/// Solve A * X = B by LU with partial pivoting.
/// Throws SingularMatrix when a pivot falls below 1e-12 * ||A||_F.
Matrix solve_linear(const Matrix& a, const Matrix& b);
CMatrix solve_linear(const CMatrix& a, const CMatrix& b);

/// All eigenvalues of a general square real matrix, with multiplicity,
/// via Householder reduction to Hessenberg form + Francis shifted QR.
/// Throws NoConvergence past 100 * n sweeps.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

/// Largest singular value, relative accuracy ~1e-10.
double spectral_norm(const Matrix& a);
double spectral_norm(const CMatrix& a);

/// Smallest singular value (same machinery as spectral_norm).
double smallest_singular_value(const CMatrix& a);

/// Cholesky test on a symmetric matrix; throws NotSymmetric when the input
/// is asymmetric beyond 1e-12 relative tolerance.
bool is_positive_definite(const Matrix& s);

/// Cholesky factor L (lower) with S = L * L^T; returns false when a pivot
/// is not strictly positive. No symmetry check; reads the lower triangle.
bool cholesky(const Matrix& s, Matrix& l);

/// Solve A X - X L = C (Kronecker formulation, desk scale).
/// Throws SpectraOverlap when eig(A) and eig(L) nearly intersect.
Matrix solve_sylvester(const Matrix& a, const Matrix& lambda, const Matrix& c);

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenvalues ascend; vectors are the columns of `vectors`.
void symmetric_eig(const Matrix& s, std::vector<double>& values, Matrix* vectors);

/// Smallest eigenvalue of a symmetric matrix.
double symmetric_min_eig(const Matrix& s);

} // namespace lmisyn
