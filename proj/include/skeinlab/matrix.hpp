#pragma once

// Dense exact matrices over a field scalar (CycloNum or RatFunc): product,
// inverse, kernel, linear solves, plus complex embedding and eigenvalues via
// Eigen for the numeric reports.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>
#include <vector>

#include "skeinlab/cyclotomic.hpp"
#include "skeinlab/errors.hpp"

namespace skeinlab {

template <typename S>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const S& fill = S{})
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n, const S& one) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    S& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix sum shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix difference shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend Matrix operator*(const S& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (!is_zero(a.data_[i] - b.data_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix apply");
        std::vector<S> r(rows_, S{});
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j))) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    // reduced row echelon form; returns pivot column indices
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i)
                if (!is_zero((*this)(i, col))) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
            S inv = invert((*this)(row, col));
            for (int j = 0; j < cols_; ++j) (*this)(row, j) = inv * (*this)(row, j);
            for (int i = 0; i < rows_; ++i) {
                if (i == row || is_zero((*this)(i, col))) continue;
                S f = (*this)(i, col);
                for (int j = 0; j < cols_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    // basis of { v : M v = 0 }
    std::vector<std::vector<S>> null_space(const S& one) const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<char> is_pivot(cols_, 0);
        for (int p : pivots) is_pivot[p] = 1;
        std::vector<std::vector<S>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<S> v(cols_, S{});
            v[free] = one;
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = S{} - m(static_cast<int>(r), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // basis of { v : v^T M = 0 }
    std::vector<std::vector<S>> left_null_space(const S& one) const {
        return transpose().null_space(one);
    }

    Matrix inverse(const S& one) const {
        if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
        Matrix aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = one;
        }
        auto pivots = aug.rref();
        if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_ ||
            static_cast<int>(pivots.size()) != rows_)
            throw GramDegenerate("matrix is singular");
        for (int p : pivots)
            if (p >= cols_) throw GramDegenerate("matrix is singular");
        Matrix r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = aug(i, cols_ + j);
        return r;
    }

    // solve M x = b; throws if inconsistent or underdetermined
    std::vector<S> solve(const std::vector<S>& b, const S& one) const {
        if (static_cast<int>(b.size()) != rows_) throw DimensionMismatch("solve rhs length");
        Matrix aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_)
            throw std::runtime_error("solve: inconsistent system");
        if (static_cast<int>(pivots.size()) != cols_)
            throw std::runtime_error("solve: underdetermined system");
        std::vector<S> x(cols_, S{});
        for (int r = 0; r < cols_; ++r) x[pivots[r]] = aug(r, cols_);
        (void)one;
        return x;
    }

  private:
    static bool is_zero(const S& c) {
        if constexpr (requires(const S& x) { x.is_zero(); }) return c.is_zero();
        else return c == 0;
    }
    static S invert(const S& c) {
        if constexpr (std::is_same_v<S, CycloNum>) return c.inverse();
        else if constexpr (requires { S::one(); }) return S::one() / c;
        else return S(1) / c;
    }

    int rows_, cols_;
    std::vector<S> data_;
};

// complex embedding for numeric work (S must provide approx())
template <typename S>
Eigen::MatrixXcd to_complex(const Matrix<S>& m) {
    Eigen::MatrixXcd r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).approx();
    return r;
}

inline std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver failed");
    std::vector<std::complex<double>> r(m.rows());
    for (int i = 0; i < m.rows(); ++i) r[i] = solver.eigenvalues()(i);
    return r;
}

template <typename S>
double spectral_radius(const Matrix<S>& m) {
    double rad = 0.0;
    for (const auto& ev : eigenvalues(to_complex(m))) rad = std::max(rad, std::abs(ev));
    return rad;
}

// entrywise conjugate (CycloNum matrices)
inline Matrix<CycloNum> conjugate(const Matrix<CycloNum>& m) {
    Matrix<CycloNum> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
    return r;
}

}  // namespace skeinlab
