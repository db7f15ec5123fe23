#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cen/scalar.hpp"

namespace cen {

template <Scalar S>
using Vector = std::vector<S>;

/// Dense row-major matrix over a scalar domain.
///
/// Vectors are columns and matrices act on them from the left, so the
/// ambient space is a right vector space over the scalars. Row reduction uses
/// left row operations only, which keeps every algorithm valid over the
/// quaternions.
template <Scalar S>
class Matrix {
public:
    Matrix(ScalarDomain dom, std::size_t rows, std::size_t cols)
        : dom_(dom), rows_(rows), cols_(cols), data_(rows * cols, S::zero(dom)) {}

    static Matrix identity(ScalarDomain dom, std::size_t n) {
        Matrix m(dom, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one(dom);
        return m;
    }

    /// Matrix unit E_{r,c}.
    static Matrix unit(ScalarDomain dom, std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
        Matrix m(dom, rows, cols);
        m(r, c) = S::one(dom);
        return m;
    }

    static Matrix from_rows(ScalarDomain dom, const std::vector<std::vector<S>>& rows) {
        const std::size_t nc = rows.empty() ? 0 : rows.front().size();
        Matrix m(dom, rows.size(), nc);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != nc) throw ShapeError("ragged rows");
            for (std::size_t j = 0; j < nc; ++j) {
                if (rows[i][j].domain() != dom) throw DomainMismatch("entry outside " + dom.name());
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static Matrix from_columns(ScalarDomain dom, std::size_t rows, const std::vector<Vector<S>>& cols) {
        Matrix m(dom, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionMismatch("column length");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    const ScalarDomain& domain() const noexcept { return dom_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const S> data() const noexcept { return data_; }

    Vector<S> column(std::size_t c) const {
        Vector<S> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    Vector<S> row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix m(dom_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    /// Plain index transpose; over a noncommutative ring it is not an
    /// anti-automorphism, so callers use it only for bookkeeping.
    Matrix transpose() const {
        Matrix m(dom_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.data_) x = -x;
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes");
        if (a.dom_ != b.dom_) throw DomainMismatch("matrix product domains");
        Matrix m(a.dom_, a.rows_, b.cols_);
        if constexpr (std::is_same_v<S, ModP>) {
            // Lazy reduction: accumulate in 128 bits and reduce once per entry.
            const std::uint64_t p = a.dom_.modulus();
            for (std::size_t i = 0; i < a.rows_; ++i)
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    unsigned __int128 acc = 0;
                    for (std::size_t k = 0; k < a.cols_; ++k) acc += static_cast<unsigned __int128>(a(i, k).value()) * b(k, j).value();
                    m(i, j) = ModP::raw(static_cast<std::uint64_t>(acc % p), static_cast<std::uint32_t>(p));
                }
        } else {
            for (std::size_t i = 0; i < a.rows_; ++i)
                for (std::size_t k = 0; k < a.cols_; ++k) {
                    const S& aik = a(i, k);
                    if (aik.is_zero()) continue;
                    for (std::size_t j = 0; j < b.cols_; ++j)
                        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
                }
        }
        return m;
    }

    friend Vector<S> operator*(const Matrix& a, const Vector<S>& v) {
        if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shapes");
        Vector<S> out(a.rows_, S::zero(a.dom_));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.dom_ == b.dom_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
            s += "]";
        }
        return s + "]";
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
        if (dom_ != o.dom_) throw DomainMismatch("matrix domains differ");
    }

    ScalarDomain dom_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<S> data_;
};

template <Scalar S>
struct RrefResult {
    Matrix<S> reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank;
};

/// Multiplies by a central scalar; throws NonCentralScale otherwise.
template <Scalar S>
Matrix<S> scale(const S& c, Matrix<S> m) {
    if (!c.is_central()) throw NonCentralScale();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = c * m(i, j);
    return m;
}

/// Repeated squaring.
template <Scalar S>
Matrix<S> matpow(const Matrix<S>& m, std::size_t e) {
    if (!m.is_square()) throw DimensionMismatch("power of a non-square matrix");
    Matrix<S> result = Matrix<S>::identity(m.domain(), m.rows());
    Matrix<S> base = m;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

template <Scalar S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
    return a * b - b * a;
}

template <Scalar S>
bool is_zero(const Vector<S>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Reduced row echelon form under left row operations. The pivot in each
/// column is the first nonzero entry at or below the current row.
template <Scalar S>
RrefResult<S> rref(const Matrix<S>& a);

template <Scalar S>
std::size_t rank(const Matrix<S>& a);

/// Basis of the right solution space {v : a v = 0}, one vector per free
/// column in increasing order.
template <Scalar S>
std::vector<Vector<S>> nullspace(const Matrix<S>& a);

/// Throws SingularMatrix.
template <Scalar S>
Matrix<S> inverse(const Matrix<S>& a);

/// Some x with a x = b, if one exists.
template <Scalar S>
std::optional<Vector<S>> solve(const Matrix<S>& a, const Vector<S>& b);

/// Columns are the Z(R)-coordinates of each matrix, entries in row-major
/// order and each entry expanded over the center basis.
template <Scalar S>
Matrix<typename S::Center> center_coordinates(std::span<const Matrix<S>> mats);

/// Dimension over Z(R) of the span of `mats`.
template <Scalar S>
std::size_t center_rank(std::span<const Matrix<S>> mats);

/// Equal Z(R)-spans, by rank of each part against the union.
template <Scalar S>
bool same_center_span(std::span<const Matrix<S>> a, std::span<const Matrix<S>> b) {
    std::vector<Matrix<S>> both(a.begin(), a.end());
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t ra = center_rank(a);
    return ra == center_rank(b) && center_rank(std::span<const Matrix<S>>(both)) == ra;
}

/// Sum of coefficient[i] * mats[i] with central coefficients.
template <Scalar S>
Matrix<S> center_combination(std::span<const Matrix<S>> mats, std::span<const typename S::Center> coefficients);

/// Left-multiplication operator over Z(R): 1x1 for fields, 4x4 in the basis
/// (1, i, j, k) for quaternions. Injective ring homomorphism.
Matrix<Rational> regular_representation(const Rational& a);
Matrix<ModP> regular_representation(const ModP& a);
Matrix<Rational> regular_representation(const Quaternion& a);

/// Entrywise regular representation of a matrix.
template <Scalar S>
Matrix<typename S::Center> regular_representation(const Matrix<S>& m);

}  // namespace cen
