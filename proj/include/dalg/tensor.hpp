#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "dalg/error.hpp"
#include "dalg/linalg/subspace.hpp"

// Coordinates of V⊗V and V⊗V⊗V for V = F^n with basis e_0, ..., e_{n-1}:
//   e_k⊗e_l       -> k*n + l
//   e_k⊗e_l⊗e_m   -> (k*n + l)*n + m
// Every module (brackets, operators, files) shares these index maps.

namespace dalg {

/// A permutation of tensor factor positions. u^σ moves the factor at
/// position i to position σ(i).
class Permutation {
public:
    static Permutation identity(std::size_t arity) {
        std::vector<std::size_t> img(arity);
        for (std::size_t i = 0; i < arity; ++i) img[i] = i;
        return Permutation(std::move(img));
    }

    /// Images of 0..k-1; must be a bijection.
    explicit Permutation(std::vector<std::size_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (auto x : img_) {
            if (x >= img_.size() || seen[x]) throw invalid_argument("not a permutation");
            seen[x] = true;
        }
    }

    /// Cycle notation with 1-based positions, e.g. "(12)", "(23)", "(132)",
    /// "(12)(3)"; "()" or "id" is the identity.
    static Permutation parse(const std::string& text, std::size_t arity) {
        auto p = identity(arity);
        if (text == "id") return p;
        std::vector<std::size_t> cycle;
        bool open = false;
        for (char c : text) {
            if (c == ' ') continue;
            if (c == '(') {
                if (open) throw parse_error("nested cycle in '" + text + "'");
                open = true;
                cycle.clear();
            } else if (c == ')') {
                if (!open) throw parse_error("unbalanced ')' in '" + text + "'");
                open = false;
                for (std::size_t i = 0; i < cycle.size(); ++i) p.img_[cycle[i]] = cycle[(i + 1) % cycle.size()];
            } else if (c >= '1' && c <= '9') {
                std::size_t pos = static_cast<std::size_t>(c - '1');
                if (!open || pos >= arity) throw parse_error("bad cycle '" + text + "'");
                cycle.push_back(pos);
            } else {
                throw parse_error("bad cycle '" + text + "'");
            }
        }
        if (open) throw parse_error("unterminated cycle in '" + text + "'");
        return Permutation(p.img_);
    }

    std::size_t arity() const { return img_.size(); }
    std::size_t operator()(std::size_t i) const { return img_.at(i); }

    /// (τ ∘ σ)(i) = τ(σ(i)); `after.compose(first)`.
    Permutation compose(const Permutation& first) const {
        if (first.arity() != arity()) throw invalid_argument("permutation arity mismatch");
        std::vector<std::size_t> img(arity());
        for (std::size_t i = 0; i < arity(); ++i) img[i] = img_[first.img_[i]];
        return Permutation(std::move(img));
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::size_t> img_;
};

template <FieldScalar S>
class Tensor2 {
public:
    using field_type = field_of<S>;

    Tensor2(const field_type& f, std::size_t n) : n_(n), c_(n * n, f.zero()) {}
    Tensor2(std::size_t n, std::vector<S> coords) : n_(n), c_(std::move(coords)) {
        if (c_.size() != n * n) throw dimension_mismatch("Tensor2 needs n^2 coordinates");
    }

    static std::size_t index(std::size_t n, std::size_t k, std::size_t l) { return k * n + l; }

    std::size_t dim() const { return n_; }
    S& operator()(std::size_t k, std::size_t l) { return c_[k * n_ + l]; }
    const S& operator()(std::size_t k, std::size_t l) const { return c_[k * n_ + l]; }
    const std::vector<S>& coords() const { return c_; }
    bool is_zero() const { return is_zero_vector<S>(c_); }

    Tensor2 operator+(const Tensor2& o) const { return Tensor2(n_, check(o).c_ + o.c_); }
    Tensor2 operator-(const Tensor2& o) const { return Tensor2(n_, check(o).c_ - o.c_); }
    Tensor2 operator-() const {
        std::vector<S> c(c_);
        for (auto& x : c) x = -x;
        return Tensor2(n_, std::move(c));
    }
    friend Tensor2 operator*(const S& k, const Tensor2& t) { return Tensor2(t.n_, scale(k, t.c_)); }

    bool operator==(const Tensor2& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
    const Tensor2& check(const Tensor2& o) const {
        if (n_ != o.n_) throw dimension_mismatch("Tensor2 dimensions differ");
        return *this;
    }

    std::size_t n_;
    std::vector<S> c_;
};

template <FieldScalar S>
class Tensor3 {
public:
    using field_type = field_of<S>;

    Tensor3(const field_type& f, std::size_t n) : n_(n), c_(n * n * n, f.zero()) {}
    Tensor3(std::size_t n, std::vector<S> coords) : n_(n), c_(std::move(coords)) {
        if (c_.size() != n * n * n) throw dimension_mismatch("Tensor3 needs n^3 coordinates");
    }

    static std::size_t index(std::size_t n, std::size_t k, std::size_t l, std::size_t m) { return (k * n + l) * n + m; }

    std::size_t dim() const { return n_; }
    S& operator()(std::size_t k, std::size_t l, std::size_t m) { return c_[(k * n_ + l) * n_ + m]; }
    const S& operator()(std::size_t k, std::size_t l, std::size_t m) const { return c_[(k * n_ + l) * n_ + m]; }
    const std::vector<S>& coords() const { return c_; }
    bool is_zero() const { return is_zero_vector<S>(c_); }

    Tensor3 operator+(const Tensor3& o) const { return Tensor3(n_, check(o).c_ + o.c_); }
    Tensor3 operator-(const Tensor3& o) const { return Tensor3(n_, check(o).c_ - o.c_); }
    friend Tensor3 operator*(const S& k, const Tensor3& t) { return Tensor3(t.n_, scale(k, t.c_)); }

    bool operator==(const Tensor3& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
    const Tensor3& check(const Tensor3& o) const {
        if (n_ != o.n_) throw dimension_mismatch("Tensor3 dimensions differ");
        return *this;
    }

    std::size_t n_;
    std::vector<S> c_;
};

/// a⊗b
template <FieldScalar S>
Tensor2<S> outer(const Vector<S>& a, const Vector<S>& b) {
    if (a.size() != b.size() || a.empty()) throw dimension_mismatch("outer product of mismatched vectors");
    const std::size_t n = a.size();
    Tensor2<S> t(a[0].field(), n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) t(k, l) = a[k] * b[l];
    return t;
}

/// u⊗c
template <FieldScalar S>
Tensor3<S> outer(const Tensor2<S>& u, const Vector<S>& c) {
    const std::size_t n = u.dim();
    if (c.size() != n) throw dimension_mismatch("outer product of mismatched operands");
    Tensor3<S> t(c[0].field(), n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            if (u(k, l).is_zero()) continue;
            for (std::size_t m = 0; m < n; ++m) t(k, l, m) = u(k, l) * c[m];
        }
    return t;
}

/// a⊗u
template <FieldScalar S>
Tensor3<S> outer(const Vector<S>& a, const Tensor2<S>& u) {
    const std::size_t n = u.dim();
    if (a.size() != n) throw dimension_mismatch("outer product of mismatched operands");
    Tensor3<S> t(a[0].field(), n);
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k].is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t m = 0; m < n; ++m) t(k, l, m) = a[k] * u(l, m);
    }
    return t;
}

template <FieldScalar S>
Tensor2<S> permute(const Tensor2<S>& u, const Permutation& sigma) {
    if (sigma.arity() != 2) throw invalid_argument("Tensor2 needs a permutation in S_2");
    if (sigma(0) == 0) return u;
    const std::size_t n = u.dim();
    std::vector<S> c(u.coords());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) c[l * n + k] = u(k, l);
    return Tensor2<S>(n, std::move(c));
}

template <FieldScalar S>
Tensor3<S> permute(const Tensor3<S>& u, const Permutation& sigma) {
    if (sigma.arity() != 3) throw invalid_argument("Tensor3 needs a permutation in S_3");
    const std::size_t n = u.dim();
    std::vector<S> c(u.coords());
    std::array<std::size_t, 3> src{}, dst{};
    for (src[0] = 0; src[0] < n; ++src[0])
        for (src[1] = 0; src[1] < n; ++src[1])
            for (src[2] = 0; src[2] < n; ++src[2]) {
                for (std::size_t i = 0; i < 3; ++i) dst[sigma(i)] = src[i];
                c[(dst[0] * n + dst[1]) * n + dst[2]] = u(src[0], src[1], src[2]);
            }
    return Tensor3<S>(n, std::move(c));
}

/// u^(12) for u in V⊗V.
template <FieldScalar S>
Tensor2<S> swap12(const Tensor2<S>& u) {
    return permute(u, Permutation({1, 0}));
}

/// I⊗V + V⊗I as a subspace of V⊗V.
template <FieldScalar S>
Subspace<S> sleeve(const Subspace<S>& ideal) {
    const std::size_t n = ideal.ambient();
    const auto& f = ideal.field();
    std::vector<Vector<S>> gens;
    for (const auto& u : ideal.basis_vectors())
        for (std::size_t j = 0; j < n; ++j) {
            auto e = unit_vector<S>(f, n, j);
            gens.push_back(outer(u, e).coords());
            gens.push_back(outer(e, u).coords());
        }
    return Subspace<S>::span(f, n * n, gens);
}

}  // namespace dalg
