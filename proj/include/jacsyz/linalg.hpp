#pragma once

#include "jacsyz/cyclo.hpp"
#include "jacsyz/rat.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jacsyz {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
    static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    /// Keeps the first n rows.
    void truncate_rows(std::size_t n) {
        rows_ = std::min(rows_, n);
        data_.resize(rows_ * cols_);
    }
    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
        std::vector<F> out(rows_, F(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!jacsyz::is_zero((*this)(i, j)) && !jacsyz::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

using RatMatrix = Matrix<Rat>;

template <class F>
struct RrefResult {
    Matrix<F> form;  // rank rows, canonical reduced echelon form
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Plain Gauss-Jordan over the field.
template <class F>
RrefResult<F> rref_naive(Matrix<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && jacsyz::is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, r);
        const F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || jacsyz::is_zero(m(i, c))) continue;
            const F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!jacsyz::is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    return {std::move(m), r, std::move(pivots)};
}

/// Fraction-free (Bareiss) forward elimination on the integer-scaled rows,
/// then rational normalization and back-substitution.
RrefResult<Rat> rref_fraction_free(const RatMatrix& m);

inline RrefResult<Rat> rref(const RatMatrix& m) { return rref_fraction_free(m); }
inline RrefResult<Cyclo> rref(const Matrix<Cyclo>& m) { return rref_naive(m); }

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

/// Subspace of F^n held as its canonical reduced echelon basis.
template <class F>
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}
    /// Span of the given rows.
    static Subspace span(std::size_t ambient, const std::vector<std::vector<F>>& rows) {
        Matrix<F> m(rows.size(), ambient);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != ambient) throw std::invalid_argument("Subspace::span: ambient mismatch");
            for (std::size_t j = 0; j < ambient; ++j) m(i, j) = rows[i][j];
        }
        return from_matrix(m);
    }
    static Subspace from_matrix(const Matrix<F>& m) {
        Subspace s(m.cols());
        auto r = rref(m);
        s.basis_ = std::move(r.form);
        s.pivots_ = std::move(r.pivots);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<std::vector<F>> vectors() const {
        std::vector<std::vector<F>> out;
        for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : M v = 0} in canonical form.
template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
    const auto r = rref(m);
    const std::size_t n = m.cols();
    std::vector<char> is_pivot(n, 0);
    for (auto c : r.pivots) is_pivot[c] = 1;
    std::vector<std::vector<F>> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(n, F(0));
        v[f] = F(1);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, f);
        rows.push_back(std::move(v));
    }
    return Subspace<F>::span(n, rows);
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("subspace_sum: ambient mismatch");
    auto rows = u.vectors();
    for (auto& r : v.vectors()) rows.push_back(std::move(r));
    return Subspace<F>::span(u.ambient_dim(), rows);
}

template <class F>
bool contains(const Subspace<F>& u, const std::vector<F>& v) {
    if (v.size() != u.ambient_dim()) throw std::invalid_argument("contains: ambient mismatch");
    // reduce v against the echelon basis; it lies in U iff the residue is zero
    std::vector<F> w = v;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        const std::size_t c = u.pivots()[i];
        if (jacsyz::is_zero(w[c])) continue;
        const F f = w[c];
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!jacsyz::is_zero(u.basis()(i, j))) w[j] -= f * u.basis()(i, j);
    }
    for (const auto& x : w)
        if (!jacsyz::is_zero(x)) return false;
    return true;
}

/// dim U - dim W for W contained in U; throws std::invalid_argument otherwise.
template <class F>
std::size_t quotient_dim(const Subspace<F>& u, const Subspace<F>& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("quotient_dim: ambient mismatch");
    for (const auto& v : w.vectors())
        if (!contains(u, v)) throw std::invalid_argument("quotient_dim: W is not contained in U");
    return u.dim() - w.dim();
}

}  // namespace jacsyz
