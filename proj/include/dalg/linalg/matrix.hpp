#pragma once

#include <span>
#include <string>
#include <vector>

#include "dalg/error.hpp"
#include "dalg/field/concepts.hpp"

namespace dalg {

template <FieldScalar S>
using Vector = std::vector<S>;

template <FieldScalar S>
Vector<S> zero_vector(const field_of<S>& f, std::size_t n) {
    return Vector<S>(n, f.zero());
}

/// k-th standard basis vector of F^n.
template <FieldScalar S>
Vector<S> unit_vector(const field_of<S>& f, std::size_t n, std::size_t k) {
    Vector<S> v(n, f.zero());
    v.at(k) = f.one();
    return v;
}

template <FieldScalar S>
bool is_zero_vector(std::span<const S> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <FieldScalar S>
Vector<S> operator+(const Vector<S>& a, const Vector<S>& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector sizes differ");
    Vector<S> r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

template <FieldScalar S>
Vector<S> operator-(const Vector<S>& a, const Vector<S>& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector sizes differ");
    Vector<S> r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

template <FieldScalar S>
Vector<S> scale(const S& k, const Vector<S>& v) {
    Vector<S> r(v);
    for (auto& x : r) x = k * x;
    return r;
}

/// Dense row-major matrix over a single field.
template <FieldScalar S>
class Matrix {
public:
    using field_type = field_of<S>;

    Matrix(field_type field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix identity(const field_type& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    /// Builds a matrix whose rows are the given vectors (all of length cols).
    static Matrix from_rows(const field_type& f, std::size_t cols, const std::vector<Vector<S>>& rows) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw dimension_mismatch("row length differs from column count");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix from_columns(const field_type& f, std::size_t rows, const std::vector<Vector<S>>& cols) {
        return from_rows(f, rows, cols).transpose();
    }

    const field_type& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector<S> row_vector(std::size_t r) const { return Vector<S>(row(r).begin(), row(r).end()); }
    Vector<S> column(std::size_t c) const {
        Vector<S> v;
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

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw dimension_mismatch("matrix product shape mismatch");
        Matrix p(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const S& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) = p(i, j) + a * o(k, j);
            }
        return p;
    }

    Vector<S> operator*(const Vector<S>& v) const {
        if (cols_ != v.size()) throw dimension_mismatch("matrix-vector shape mismatch");
        Vector<S> out(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k)
                if (!v[k].is_zero()) out[i] = out[i] + (*this)(i, k) * v[k];
        return out;
    }

    Matrix operator+(const Matrix& o) const {
        same_shape(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        same_shape(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.data_) x = -x;
        return r;
    }
    friend Matrix operator*(const S& k, const Matrix& m) {
        Matrix r(m);
        for (auto& x : r.data_) x = k * x;
        return r;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    S trace() const {
        if (!is_square()) throw dimension_mismatch("trace of a non-square matrix");
        S t = field_.zero();
        for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    const std::vector<S>& data() const { return data_; }

    std::string to_string() const {
        std::string out;
        for (std::size_t r = 0; r < rows_; ++r) {
            out += "[";
            for (std::size_t c = 0; c < cols_; ++c) out += (c ? ", " : "") + (*this)(r, c).to_string();
            out += "]\n";
        }
        return out;
    }

private:
    void same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix shapes differ");
    }

    field_type field_;
    std::size_t rows_, cols_;
    std::vector<S> data_;
};

}  // namespace dalg
