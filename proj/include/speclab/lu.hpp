#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "speclab/complex_matrix.hpp"

namespace speclab {

/// LU factorization with partial pivoting of a square complex matrix.
/// Used for resolvent solves and shifted inverse iteration.
class LuFactorization {
public:
    explicit LuFactorization(ComplexMatrix a) : lu_(std::move(a)) {
        const std::size_t n = lu_.dim();
        perm_.resize(n);
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            double best = std::abs(lu_(k, k));
            for (std::size_t i = k + 1; i < n; ++i) {
                const double v = std::abs(lu_(i, k));
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
                std::swap(perm_[k], perm_[p]);
            }
            const Complex piv = lu_(k, k);
            if (std::abs(piv) == 0.0) {
                singular_ = true;
                continue;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                const Complex m = lu_(i, k) / piv;
                lu_(i, k) = m;
                for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
            }
        }
    }

    bool singular() const { return singular_; }

    /// Smallest pivot magnitude relative to the largest; a crude condition probe.
    double min_pivot_ratio() const {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (std::size_t k = 0; k < lu_.dim(); ++k) {
            const double v = std::abs(lu_(k, k));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return hi == 0.0 ? 0.0 : lo / hi;
    }

    Vector solve(const Vector& b) const {
        if (singular_) throw std::runtime_error("LuFactorization::solve: singular matrix");
        const std::size_t n = lu_.dim();
        if (b.size() != n) throw std::invalid_argument("LuFactorization::solve: size mismatch");
        Vector y(n);
        for (std::size_t i = 0; i < n; ++i) {
            Complex s = b[perm_[i]];
            for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * y[j];
            y[i] = s;
        }
        Vector x(n);
        for (std::size_t ii = n; ii-- > 0;) {
            Complex s = y[ii];
            for (std::size_t j = ii + 1; j < n; ++j) s -= lu_(ii, j) * x[j];
            x[ii] = s / lu_(ii, ii);
        }
        return x;
    }

    ComplexMatrix solve(const ComplexMatrix& b) const {
        const std::size_t n = lu_.dim();
        if (b.rows() != n) throw std::invalid_argument("LuFactorization::solve: shape mismatch");
        ComplexMatrix x(n, b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) x.set_column(j, solve(b.column(j)));
        return x;
    }

    ComplexMatrix inverse() const { return solve(ComplexMatrix::identity(lu_.dim())); }

private:
    ComplexMatrix lu_;
    std::vector<std::size_t> perm_;
    bool singular_ = false;
};

inline ComplexMatrix inverse(const ComplexMatrix& a) { return LuFactorization(a).inverse(); }

}  // namespace speclab
