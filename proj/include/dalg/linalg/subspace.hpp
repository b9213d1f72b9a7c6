#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dalg/linalg/matrix.hpp"

namespace dalg {

template <FieldScalar S>
struct RrefResult {
    Matrix<S> reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with leading-one pivots. The pivot in each
/// column is the first nonzero entry at or below the current row.
template <FieldScalar S>
RrefResult<S> rref(Matrix<S> m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        S inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            S factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), row, std::move(pivots)};
}

template <FieldScalar S>
std::size_t rank(const Matrix<S>& m) {
    return rref(m).rank;
}

/// A linear subspace of F^n, held as the nonzero rows of an RREF matrix.
/// Two subspaces are equal exactly when these bases coincide.
template <FieldScalar S>
class Subspace {
public:
    using field_type = field_of<S>;

    static Subspace zero(const field_type& f, std::size_t n) { return Subspace(f, n); }
    static Subspace full(const field_type& f, std::size_t n) {
        return Subspace(f, n, Matrix<S>::identity(f, n), [&] {
            std::vector<std::size_t> p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = i;
            return p;
        }());
    }
    static Subspace span(const field_type& f, std::size_t n, const std::vector<Vector<S>>& vectors) {
        if (vectors.empty()) return zero(f, n);
        auto r = rref(Matrix<S>::from_rows(f, n, vectors));
        Matrix<S> basis(f, r.rank, n);
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t c = 0; c < n; ++c) basis(i, c) = r.reduced(i, c);
        return Subspace(f, n, std::move(basis), std::move(r.pivots));
    }
    /// Row space of a matrix.
    static Subspace row_space(const Matrix<S>& m) {
        std::vector<Vector<S>> rows;
        for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vector(r));
        return span(m.field(), m.cols(), rows);
    }
    static Subspace column_space(const Matrix<S>& m) { return row_space(m.transpose()); }

    const field_type& field() const { return field_; }
    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == n_; }
    const Matrix<S>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::vector<Vector<S>> basis_vectors() const {
        std::vector<Vector<S>> out;
        for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
        return out;
    }

    /// v minus its projection along the pivot coordinates; zero iff v is a member.
    Vector<S> reduce(Vector<S> v) const {
        if (v.size() != n_) throw dimension_mismatch("vector not in the ambient space");
        for (std::size_t r = 0; r < dim(); ++r) {
            S coef = v[pivots_[r]];
            if (coef.is_zero()) continue;
            for (std::size_t c = 0; c < n_; ++c) v[c] = v[c] - coef * basis_(r, c);
        }
        return v;
    }

    bool contains(const Vector<S>& v) const {
        auto rest = reduce(v);
        return is_zero_vector<S>(rest);
    }

    bool contains(const Subspace& o) const {
        same_ambient(o);
        for (std::size_t r = 0; r < o.dim(); ++r)
            if (!contains(o.basis_.row_vector(r))) return false;
        return true;
    }

    Subspace operator+(const Subspace& o) const {
        same_ambient(o);
        auto vs = basis_vectors();
        for (auto& v : o.basis_vectors()) vs.push_back(std::move(v));
        return span(field_, n_, vs);
    }

    Subspace intersect(const Subspace& o) const;

    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }

    std::string to_string() const {
        std::string out = "span{";
        for (std::size_t r = 0; r < dim(); ++r) {
            out += r ? ", (" : "(";
            for (std::size_t c = 0; c < n_; ++c) out += (c ? ", " : "") + basis_(r, c).to_string();
            out += ")";
        }
        return out + "}";
    }

    void same_ambient(const Subspace& o) const {
        if (n_ != o.n_) throw dimension_mismatch("subspaces live in different ambient spaces");
    }

private:
    Subspace(const field_type& f, std::size_t n) : field_(f), n_(n), basis_(f, 0, n) {}
    Subspace(const field_type& f, std::size_t n, Matrix<S> basis, std::vector<std::size_t> pivots)
        : field_(f), n_(n), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    field_type field_;
    std::size_t n_;
    Matrix<S> basis_;
    std::vector<std::size_t> pivots_;
};

/// Basis of {v : m v = 0}.
template <FieldScalar S>
Subspace<S> kernel_basis(const Matrix<S>& m) {
    const auto& f = m.field();
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector<S>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector<S> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return Subspace<S>::span(f, m.cols(), basis);
}

/// Some x with m x = b, if one exists.
template <FieldScalar S>
std::optional<Vector<S>> solve(const Matrix<S>& m, const Vector<S>& b) {
    if (b.size() != m.rows()) throw dimension_mismatch("right-hand side length differs from row count");
    const auto& f = m.field();
    Matrix<S> aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
    Vector<S> x(m.cols(), f.zero());
    for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
    return x;
}

template <FieldScalar S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
    if (!m.is_square()) throw dimension_mismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const auto& f = m.field();
    Matrix<S> aug(f, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = f.one();
    }
    auto red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<S> inv(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
    return inv;
}

/// Intersection via the kernel of the stacked constraint [A^T | -B^T].
template <FieldScalar S>
Subspace<S> Subspace<S>::intersect(const Subspace& o) const {
    same_ambient(o);
    const std::size_t da = dim(), db = o.dim();
    if (da == 0 || db == 0) return zero(field_, n_);
    Matrix<S> stacked(field_, n_, da + db);
    for (std::size_t c = 0; c < n_; ++c) {
        for (std::size_t i = 0; i < da; ++i) stacked(c, i) = basis_(i, c);
        for (std::size_t j = 0; j < db; ++j) stacked(c, da + j) = -o.basis_(j, c);
    }
    std::vector<Vector<S>> members;
    for (const auto& coeffs : kernel_basis(stacked).basis_vectors()) {
        Vector<S> v(n_, field_.zero());
        for (std::size_t i = 0; i < da; ++i)
            if (!coeffs[i].is_zero())
                for (std::size_t c = 0; c < n_; ++c) v[c] = v[c] + coeffs[i] * basis_(i, c);
        members.push_back(std::move(v));
    }
    return span(field_, n_, members);
}

/// Smallest subspace containing `seed` and invariant under every operator
/// in `ops`. Saturates breadth-first over (vector, operator) pairs in
/// insertion order, so the result is deterministic.
template <FieldScalar S>
Subspace<S> cyclic_closure(const field_of<S>& f, std::size_t n, const std::vector<Vector<S>>& seed,
                           const std::vector<Matrix<S>>& ops) {
    for (const auto& op : ops)
        if (op.rows() != n || op.cols() != n) throw dimension_mismatch("operator is not an endomorphism of F^n");
    auto current = Subspace<S>::zero(f, n);
    std::vector<Vector<S>> queue;
    auto push = [&](const Vector<S>& v) {
        if (current.contains(v)) return;
        queue.push_back(v);
        current = current + Subspace<S>::span(f, n, {v});
    };
    for (const auto& v : seed) push(v);
    for (std::size_t i = 0; i < queue.size() && !current.is_full(); ++i) {
        Vector<S> v = queue[i];
        for (const auto& op : ops) push(op * v);
    }
    return current;
}

}  // namespace dalg
