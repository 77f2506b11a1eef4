#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace speclab {

using Complex = std::complex<double>;

/// Dense complex vector with the inner product conventions used throughout:
/// dot(x, y) = sum_i x_i * conj(y_i), linear in the first argument.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : v_(n, Complex{0.0, 0.0}) {}
    Vector(std::initializer_list<Complex> init) : v_(init) {}
    explicit Vector(std::vector<Complex> data) : v_(std::move(data)) {}

    std::size_t size() const { return v_.size(); }
    Complex& operator[](std::size_t i) { return v_[i]; }
    const Complex& operator[](std::size_t i) const { return v_[i]; }

    std::vector<Complex>& data() { return v_; }
    const std::vector<Complex>& data() const { return v_; }

    Vector& operator+=(const Vector& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    Vector& operator*=(Complex a) {
        for (auto& x : v_) x *= a;
        return *this;
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(Complex a, Vector x) { return x *= a; }

    double norm() const {
        // Two-pass scaled norm; magnitudes in this project are tame but the
        // scaling costs nothing.
        double maxabs = 0.0;
        for (const auto& x : v_) maxabs = std::max(maxabs, std::abs(x));
        if (maxabs == 0.0) return 0.0;
        double s = 0.0;
        for (const auto& x : v_) {
            const double r = std::abs(x) / maxabs;
            s += r * r;
        }
        return maxabs * std::sqrt(s);
    }

    void normalize() {
        const double n = norm();
        if (n == 0.0) throw std::invalid_argument("Vector::normalize: zero vector");
        for (auto& x : v_) x /= n;
    }

private:
    void check_same_size(const Vector& o) const {
        if (v_.size() != o.v_.size())
            throw std::invalid_argument("Vector: size mismatch");
    }

    std::vector<Complex> v_;
};

inline Complex dot(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

/// Dense row-major complex matrix. The domain types of this library are
/// square but rectangular shapes are allowed (orthonormal bases, least
/// squares blocks); operations that require squareness check it.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.begin()->size() : 0;
        ComplexMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
            std::size_t j = 0;
            for (const auto& x : row) m(i, j++) = x;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    /// Dimension of a square matrix; throws on rectangular input.
    std::size_t dim() const {
        if (!square()) throw std::invalid_argument("ComplexMatrix::dim: matrix is not square");
        return rows_;
    }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::span<Complex> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
    std::span<const Complex> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    ComplexMatrix& operator*=(Complex s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        ComplexMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    friend Vector operator*(const ComplexMatrix& a, const Vector& x) {
        if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
        Vector y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            Complex s{0.0, 0.0};
            for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& x : a_) s += std::norm(x);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    bool all_finite() const {
        for (const auto& x : a_)
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
        return true;
    }

    Vector column(std::size_t j) const {
        Vector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const Vector& c) {
        if (c.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

private:
    void check_same_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("ComplexMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> a_;
};

inline ComplexMatrix outer(const Vector& x, const Vector& y) {
    ComplexMatrix m(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
    return m;
}

}  // namespace speclab
