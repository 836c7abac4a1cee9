#pragma once

#include "obdim/errors.hpp"
#include "obdim/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace obdim {

/// Square matrix over exact rationals.  Indices are 0-based; helpers taking
/// matrix positions in the (row, column) = (1..n, 1..n) convention say so.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}

    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : n_(rows.size()), a_() {
        a_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw DimensionMismatch("matrix literal must be square");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Elementary matrix E_ij in the 1-based position convention.
    static ExactMatrix unit(std::size_t n, int row, int col) {
        ExactMatrix m(n);
        m.at1(row, col) = 1;
        return m;
    }

    static ExactMatrix diagonal(const std::vector<Rational>& d) {
        ExactMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t size() const { return n_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    Rational& at1(int row, int col) {
        check1(row, col);
        return (*this)(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
    }
    const Rational& at1(int row, int col) const {
        check1(row, col);
        return (*this)(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("matrix product of different sizes");
        ExactMatrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const Rational& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    if (b(k, j) != 0) c(i, j) += x * b(k, j);
            }
        return c;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("matrix sum of different sizes");
        for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
        return a;
    }

    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("matrix difference of different sizes");
        for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
        return a;
    }

    friend ExactMatrix operator*(const Rational& s, ExactMatrix a) {
        for (auto& x : a.a_) x *= s;
        return a;
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
    }

    /// Determinant by exact Gaussian elimination.
    Rational determinant() const {
        ExactMatrix m = *this;
        Rational det = 1;
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t p = col;
            while (p < n_ && m(p, col) == 0) ++p;
            if (p == n_) return 0;
            if (p != col) {
                for (std::size_t j = 0; j < n_; ++j) std::swap(m(p, j), m(col, j));
                det = -det;
            }
            det *= m(col, col);
            const Rational inv = 1 / m(col, col);
            for (std::size_t r = col + 1; r < n_; ++r) {
                if (m(r, col) == 0) continue;
                const Rational f = m(r, col) * inv;
                for (std::size_t j = col; j < n_; ++j) m(r, j) -= f * m(col, j);
            }
        }
        return det;
    }

    /// Exact inverse by Gauss-Jordan elimination; throws Singular.
    ExactMatrix inverse() const {
        ExactMatrix m = *this;
        ExactMatrix inv = identity(n_);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t p = col;
            while (p < n_ && m(p, col) == 0) ++p;
            if (p == n_) throw Singular("matrix is singular");
            if (p != col)
                for (std::size_t j = 0; j < n_; ++j) {
                    std::swap(m(p, j), m(col, j));
                    std::swap(inv(p, j), inv(col, j));
                }
            const Rational pivot_inv = 1 / m(col, col);
            for (std::size_t j = 0; j < n_; ++j) {
                m(col, j) *= pivot_inv;
                inv(col, j) *= pivot_inv;
            }
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == col || m(r, col) == 0) continue;
                const Rational f = m(r, col);
                for (std::size_t j = 0; j < n_; ++j) {
                    if (m(col, j) != 0) m(r, j) -= f * m(col, j);
                    if (inv(col, j) != 0) inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    /// Largest absolute entry.
    Rational max_abs() const {
        Rational best = 0;
        for (const auto& x : a_) best = std::max(best, abs_value(x));
        return best;
    }

    bool is_upper_unitriangular() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    bool is_lower_unitriangular() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < n_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j).str();
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    void check1(int row, int col) const {
        if (row < 1 || col < 1 || static_cast<std::size_t>(row) > n_ || static_cast<std::size_t>(col) > n_)
            throw BadVertex("matrix position (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
    }

    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

/// Commutator [X, Y] = XY - YX.
inline ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

/// exp(X) for nilpotent X; the series terminates after n terms.  Throws
/// when X is not nilpotent.
inline ExactMatrix exp_nilpotent(const ExactMatrix& x) {
    const std::size_t n = x.size();
    ExactMatrix result = ExactMatrix::identity(n);
    ExactMatrix term = ExactMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        term = term * x;
        if (term.is_zero()) return result;
        // term holds X^k / (k-1)! here
        term = Rational(1, static_cast<long>(k)) * term;
        result = result + term;
    }
    throw Error("exp_nilpotent: matrix is not nilpotent");
}

/// Size functional: log of the largest absolute entry of g and g^{-1},
/// floored at 0.  Symmetric under inversion and 0 at the identity.
inline double size_of(const ExactMatrix& g) {
    const ExactMatrix inv = g.inverse();
    const Rational top = std::max(g.max_abs(), inv.max_abs());
    if (top <= 1) return 0.0;
    return log_of(top);
}

/// Divergence statistic D(A, B) = size(A^{-1} B).
inline double distance_proxy(const ExactMatrix& a, const ExactMatrix& b) { return size_of(a.inverse() * b); }

/// Coefficient of E_kl in g E_ij g^{-1} (all positions 1-based).
inline Rational adjoint_component(const ExactMatrix& g, int i, int j, int k, int l) {
    if (i == j || k == l) throw Error("adjoint_component needs off-diagonal positions");
    const ExactMatrix inv = g.inverse();
    return g.at1(k, i) * inv.at1(j, l);
}

}  // namespace obdim
