#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dalg/error.hpp"
#include "dalg/tensor.hpp"

namespace dalg {

/// A finite-dimensional double algebra: V = F^n with a double bracket given
/// by structure constants, {{e_i, e_j}} = sum_{k,l} c[i][j](k,l) e_k⊗e_l.
template <FieldScalar S>
class DoubleAlgebra {
public:
    using field_type = field_of<S>;

    /// `constants[i*n + j]` is {{e_i, e_j}}.
    DoubleAlgebra(field_type field, std::size_t n, std::vector<Tensor2<S>> constants, std::string name = {})
        : field_(std::move(field)), n_(n), c_(std::move(constants)), name_(std::move(name)) {
        if (n_ == 0) throw invalid_argument("double algebra dimension must be at least 1");
        if (c_.size() != n_ * n_) throw dimension_mismatch("need n^2 structure-constant tensors");
        for (const auto& t : c_) {
            if (t.dim() != n_) throw dimension_mismatch("structure-constant tensor has the wrong dimension");
            for (const auto& x : t.coords())
                if (!(x.field() == field_)) throw field_mismatch();
        }
    }

    static DoubleAlgebra zero(const field_type& f, std::size_t n, std::string name = {}) {
        return DoubleAlgebra(f, n, empty_table(f, n), std::move(name));
    }

    /// n^2 zero tensors, a starting point for filling in a table.
    static std::vector<Tensor2<S>> empty_table(const field_type& f, std::size_t n) {
        return std::vector<Tensor2<S>>(n * n, Tensor2<S>(f, n));
    }

    const field_type& field() const { return field_; }
    std::size_t dim() const { return n_; }
    const std::string& name() const { return name_; }
    const std::vector<Tensor2<S>>& table() const { return c_; }

    const Tensor2<S>& constants(std::size_t i, std::size_t j) const { return c_.at(i * n_ + j); }
    const S& coefficient(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return constants(i, j)(k, l);
    }

    DoubleAlgebra renamed(std::string name) const {
        DoubleAlgebra copy(*this);
        copy.name_ = std::move(name);
        return copy;
    }

    /// {{a, b}} extended bilinearly.
    Tensor2<S> bracket(const Vector<S>& a, const Vector<S>& b) const {
        if (a.size() != n_ || b.size() != n_) throw dimension_mismatch("bracket arguments must lie in F^n");
        Tensor2<S> out(field_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (b[j].is_zero()) continue;
                S w = a[i] * b[j];
                const auto& t = constants(i, j);
                for (std::size_t k = 0; k < n_; ++k)
                    for (std::size_t l = 0; l < n_; ++l)
                        if (!t(k, l).is_zero()) out(k, l) = out(k, l) + w * t(k, l);
            }
        }
        return out;
    }

    bool is_zero_bracket() const {
        for (const auto& t : c_)
            if (!t.is_zero()) return false;
        return true;
    }

    /// Equal structure constants over the same field; names are ignored.
    bool operator==(const DoubleAlgebra& o) const { return field_ == o.field_ && n_ == o.n_ && c_ == o.c_; }

private:
    field_type field_;
    std::size_t n_;
    std::vector<Tensor2<S>> c_;
    std::string name_;
};

// The four extensions of the bracket to V⊗V⊗V.

/// {{a, b⊗c}}_L = {{a,b}}⊗c
template <FieldScalar S>
Tensor3<S> extend_vec_tensor_L(const DoubleAlgebra<S>& V, const Vector<S>& a, const Tensor2<S>& u) {
    const std::size_t n = V.dim();
    Tensor3<S> out(V.field(), n);
    for (std::size_t k = 0; k < n; ++k) {
        auto ab = V.bracket(a, unit_vector<S>(V.field(), n, k));
        for (std::size_t z = 0; z < n; ++z) {
            if (u(k, z).is_zero()) continue;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) out(x, y, z) = out(x, y, z) + u(k, z) * ab(x, y);
        }
    }
    return out;
}

/// {{a, b⊗c}}_R = (b⊗{{a,c}})^(12)
template <FieldScalar S>
Tensor3<S> extend_vec_tensor_R(const DoubleAlgebra<S>& V, const Vector<S>& a, const Tensor2<S>& u) {
    const std::size_t n = V.dim();
    Tensor3<S> out(V.field(), n);
    for (std::size_t l = 0; l < n; ++l) {
        auto ac = V.bracket(a, unit_vector<S>(V.field(), n, l));
        for (std::size_t k = 0; k < n; ++k) {
            if (u(k, l).is_zero()) continue;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) out(x, k, y) = out(x, k, y) + u(k, l) * ac(x, y);
        }
    }
    return out;
}

/// {{a⊗b, c}}_L = ({{a,c}}⊗b)^(23)
template <FieldScalar S>
Tensor3<S> extend_tensor_vec_L(const DoubleAlgebra<S>& V, const Tensor2<S>& u, const Vector<S>& c) {
    const std::size_t n = V.dim();
    Tensor3<S> out(V.field(), n);
    for (std::size_t k = 0; k < n; ++k) {
        auto ac = V.bracket(unit_vector<S>(V.field(), n, k), c);
        for (std::size_t l = 0; l < n; ++l) {
            if (u(k, l).is_zero()) continue;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) out(x, l, y) = out(x, l, y) + u(k, l) * ac(x, y);
        }
    }
    return out;
}

/// {{a⊗b, c}}_R = a⊗{{b,c}}
template <FieldScalar S>
Tensor3<S> extend_tensor_vec_R(const DoubleAlgebra<S>& V, const Tensor2<S>& u, const Vector<S>& c) {
    const std::size_t n = V.dim();
    Tensor3<S> out(V.field(), n);
    for (std::size_t l = 0; l < n; ++l) {
        auto bc = V.bracket(unit_vector<S>(V.field(), n, l), c);
        for (std::size_t k = 0; k < n; ++k) {
            if (u(k, l).is_zero()) continue;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) out(k, x, y) = out(k, x, y) + u(k, l) * bc(x, y);
        }
    }
    return out;
}

struct ClassificationFlags {
    bool is_skew = false;
    bool is_symmetric = false;
    bool is_lie = false;
    bool is_associative = false;
    bool is_commutative = false;

    bool operator==(const ClassificationFlags&) const = default;

    std::string to_string() const {
        auto b = [](bool x) { return x ? "true" : "false"; };
        return std::string("skew=") + b(is_skew) + " symmetric=" + b(is_symmetric) + " lie=" + b(is_lie) +
               " associative=" + b(is_associative) + " commutative=" + b(is_commutative);
    }
};

namespace detail {

template <FieldScalar S>
struct SparseEntry {
    std::size_t k, l;
    S coef;
};

/// Nonzero coordinates of every {{e_i, e_j}}, indexed i*n + j.
template <FieldScalar S>
std::vector<std::vector<SparseEntry<S>>> sparse_table(const DoubleAlgebra<S>& V) {
    const std::size_t n = V.dim();
    std::vector<std::vector<SparseEntry<S>>> out(n * n);
    for (std::size_t ij = 0; ij < n * n; ++ij)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                const S& x = V.table()[ij](k, l);
                if (!x.is_zero()) out[ij].push_back({k, l, x});
            }
    return out;
}

/// Sparse accumulator for elements of V⊗V⊗V keyed by flat index.
template <FieldScalar S>
class SparseTensor3 {
public:
    void add(std::size_t idx, const S& v) {
        auto it = entries_.find(idx);
        if (it == entries_.end()) {
            entries_.emplace(idx, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    void add(const SparseTensor3& o) {
        for (const auto& [idx, v] : o.entries_) add(idx, v);
    }
    bool operator==(const SparseTensor3&) const = default;

private:
    std::map<std::size_t, S> entries_;
};

}  // namespace detail

/// Checks every defining identity on all basis pairs and triples, which
/// suffices because each identity is multilinear.
template <FieldScalar S>
ClassificationFlags classify_direct(const DoubleAlgebra<S>& V) {
    const std::size_t n = V.dim();
    ClassificationFlags flags;
    flags.is_skew = flags.is_symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto swapped = swap12(V.constants(j, i));
            if (!(V.constants(i, j) == -swapped)) flags.is_skew = false;
            if (!(V.constants(i, j) == swapped)) flags.is_symmetric = false;
        }

    // Basis-triple evaluation on the sparse table; the dense extend_*
    // functions compute the same tensors.
    const auto C = detail::sparse_table(V);
    auto at = [&](std::size_t i, std::size_t j) -> const auto& { return C[i * n + j]; };
    auto idx = [n](std::size_t x, std::size_t y, std::size_t z) { return (x * n + y) * n + z; };

    bool jacobi = true, assoc_L = true, assoc_R = true;
    for (std::size_t a = 0; a < n && (jacobi || assoc_L || assoc_R); ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                detail::SparseTensor3<S> inner_L, outer_L, inner_R, outer_R, twisted;
                // {{e_a, {{e_b,e_c}}}}_L and _R
                for (const auto& u : at(b, c)) {
                    for (const auto& w : at(a, u.k)) inner_L.add(idx(w.k, w.l, u.l), u.coef * w.coef);
                    for (const auto& w : at(a, u.l)) inner_R.add(idx(w.k, u.k, w.l), u.coef * w.coef);
                }
                // {{ {{e_a,e_b}}, e_c }}_L and _R
                for (const auto& u : at(a, b)) {
                    for (const auto& w : at(u.k, c)) outer_L.add(idx(w.k, u.l, w.l), u.coef * w.coef);
                    for (const auto& w : at(u.l, c)) outer_R.add(idx(u.k, w.k, w.l), u.coef * w.coef);
                }
                if (assoc_L && !(inner_L == outer_L)) assoc_L = false;
                if (assoc_R && !(inner_R == outer_R)) assoc_R = false;
                if (jacobi) {
                    // {{e_a,{{e_b,e_c}}}}_L = {{e_b,{{e_a,e_c}}}}_R^(12) + {{{{e_a,e_b}},e_c}}_L
                    for (const auto& u : at(a, c))
                        for (const auto& w : at(b, u.l)) twisted.add(idx(u.k, w.k, w.l), u.coef * w.coef);
                    twisted.add(outer_L);
                    if (!(inner_L == twisted)) jacobi = false;
                }
            }
    flags.is_lie = flags.is_skew && jacobi;
    flags.is_associative = assoc_L && assoc_R;
    flags.is_commutative = flags.is_associative && flags.is_symmetric;
    return flags;
}

/// V^(-): [[a,b]] = {{a,b}} - {{b,a}}^(12).
template <FieldScalar S>
DoubleAlgebra<S> commutator_algebra(const DoubleAlgebra<S>& V) {
    const std::size_t n = V.dim();
    auto table = DoubleAlgebra<S>::empty_table(V.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = V.constants(i, j) - swap12(V.constants(j, i));
    return DoubleAlgebra<S>(V.field(), n, std::move(table), V.name().empty() ? "" : V.name() + "^(-)");
}

/// V^op: {{u,v}}^op = {{u,v}}^(12).
template <FieldScalar S>
DoubleAlgebra<S> opposite(const DoubleAlgebra<S>& V) {
    const std::size_t n = V.dim();
    auto table = DoubleAlgebra<S>::empty_table(V.field(), n);
    for (std::size_t i = 0; i < n * n; ++i) table[i] = swap12(V.table()[i]);
    return DoubleAlgebra<S>(V.field(), n, std::move(table), V.name().empty() ? "" : V.name() + "^op");
}

/// Bracket on V* given by the transpose of the bracket's n^2 x n^2 matrix
/// in the dual bases: {{e_k*, e_l*}} = sum_{i,j} c[i][j](k,l) e_i*⊗e_j*.
template <FieldScalar S>
DoubleAlgebra<S> dual(const DoubleAlgebra<S>& V) {
    const std::size_t n = V.dim();
    auto table = DoubleAlgebra<S>::empty_table(V.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) table[k * n + l](i, j) = V.coefficient(i, j, k, l);
    return DoubleAlgebra<S>(V.field(), n, std::move(table), V.name().empty() ? "" : V.name() + "^*");
}

/// V⊗U with {{v1⊗u1, v2⊗u2}} = ({{v1,v2}}⊗{{u1,u2}})^(23); basis
/// e_i⊗f_a has index i*dim(U) + a.
template <FieldScalar S>
DoubleAlgebra<S> tensor_product(const DoubleAlgebra<S>& V, const DoubleAlgebra<S>& U) {
    if (!(V.field() == U.field())) throw field_mismatch();
    const std::size_t n = V.dim(), m = U.dim(), d = n * m;
    auto table = DoubleAlgebra<S>::empty_table(V.field(), d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& cv = V.constants(i, j);
            if (cv.is_zero()) continue;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    const auto& cu = U.constants(a, b);
                    if (cu.is_zero()) continue;
                    auto& out = table[(i * m + a) * d + (j * m + b)];
                    for (std::size_t k = 0; k < n; ++k)
                        for (std::size_t l = 0; l < n; ++l) {
                            if (cv(k, l).is_zero()) continue;
                            for (std::size_t c = 0; c < m; ++c)
                                for (std::size_t e = 0; e < m; ++e)
                                    if (!cu(c, e).is_zero()) out(k * m + c, l * m + e) = cv(k, l) * cu(c, e);
                        }
                }
        }
    std::string name;
    if (!V.name().empty() && !U.name().empty()) name = "(" + V.name() + ")⊗(" + U.name() + ")";
    return DoubleAlgebra<S>(V.field(), d, std::move(table), std::move(name));
}

}  // namespace dalg
