#ifndef SKEWCY_MATRIX_HPP
#define SKEWCY_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewcy/scalar.hpp"

namespace skewcy {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over one field.
///
/// Automorphism matrices use the column convention: column j holds the coordinates
/// of the image of basis vector j.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(field_)) {}

    static Matrix identity(const FieldSpec& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix diagonal(const FieldSpec& f, const Vector& d) {
        Matrix m(f, d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vector column(std::size_t c) const {
        Vector v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_diagonal() const {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (r != c && !(*this)(r, c).is_zero()) return false;
        return true;
    }

    bool is_identity() const { return square() && *this == identity(field_, rows_); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(Errc::AlgebraMismatch, "matrix shapes do not compose");
        Matrix m(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
            }
        return m;
    }

    friend Vector operator*(const Matrix& a, const Vector& v) {
        Vector out(a.rows_, Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
        return out;
    }

    friend Matrix operator*(const Scalar& s, Matrix m) {
        for (auto& x : m.a_) x *= s;
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> row_reduce() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
            std::size_t p = row;
            while (p < rows_ && (*this)(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            swap_rows(p, row);
            Scalar inv = (*this)(row, c).inverse();
            for (std::size_t k = c; k < cols_; ++k) (*this)(row, k) *= inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || (*this)(r, c).is_zero()) continue;
                Scalar f = (*this)(r, c);
                for (std::size_t k = c; k < cols_; ++k)
                    if (!(*this)(row, k).is_zero()) (*this)(r, k) -= f * (*this)(row, k);
            }
            pivots.push_back(c);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.row_reduce().size();
    }

    /// Basis of the right kernel {v : M v = 0}.
    std::vector<Vector> kernel() const {
        Matrix m = *this;
        auto pivots = m.row_reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<Vector> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            Vector v(cols_, Scalar::zero(field_));
            v[free] = Scalar::one(field_);
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Some solution of M x = b, or nullopt when inconsistent.
    std::optional<Vector> solve(const Vector& b) const {
        Matrix aug(field_, rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
            aug(r, cols_) = b[r];
        }
        auto pivots = aug.row_reduce();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        Vector x(cols_, Scalar::zero(field_));
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
        return x;
    }

    Scalar determinant() const {
        if (!square()) throw Error(Errc::SingularMatrix, "determinant of a non-square matrix");
        Matrix m = *this;
        Scalar det = Scalar::one(field_);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && m(p, c).is_zero()) ++p;
            if (p == rows_) return Scalar::zero(field_);
            if (p != c) {
                m.swap_rows(p, c);
                det = -det;
            }
            det *= m(c, c);
            Scalar inv = m(c, c).inverse();
            for (std::size_t r = c + 1; r < rows_; ++r) {
                if (m(r, c).is_zero()) continue;
                Scalar f = m(r, c) * inv;
                for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(c, k);
            }
        }
        return det;
    }

    Matrix inverse() const {
        if (!square()) throw Error(Errc::SingularMatrix, "inverse of a non-square matrix");
        const std::size_t n = rows_;
        Matrix aug(field_, n, 2 * n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
            aug(r, n + r) = Scalar::one(field_);
        }
        auto pivots = aug.row_reduce();
        if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(Errc::SingularMatrix, "matrix is not invertible");
        Matrix inv(field_, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
        return inv;
    }

    Matrix pow(long long e) const {
        Matrix base = e < 0 ? inverse() : *this;
        unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
        Matrix r = identity(field_, rows_);
        while (k) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    /// Text form `[[a, b], [c, d]]` with canonical scalars.
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            s += r ? ", [" : "[";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) s += ", ";
                s += (*this)(r, c).to_string();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[a * cols_ + c], a_[b * cols_ + c]);
    }

    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

}  // namespace skewcy

#endif
