#pragma once

#include <string>
#include <vector>

#include "dalg/algebra.hpp"
#include "dalg/endv.hpp"
#include "dalg/field/ratfunc.hpp"
#include "dalg/field/rational.hpp"

// Constructors for the standard double algebras and operators.

namespace dalg {

template <FieldScalar S>
DoubleAlgebra<S> zero_algebra(const field_of<S>& f, std::size_t n) {
    return DoubleAlgebra<S>::zero(f, n, "zero(" + std::to_string(n) + ")");
}

/// V_c: {{u,v}} = alpha u⊗v on F^n.
template <FieldScalar S>
DoubleAlgebra<S> commutative_vc(const field_of<S>& f, std::size_t n, const S& alpha) {
    auto table = DoubleAlgebra<S>::empty_table(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j](i, j) = alpha;
    return DoubleAlgebra<S>(f, n, std::move(table), "V_c(" + std::to_string(n) + ")");
}

template <FieldScalar S>
DoubleAlgebra<S> commutative_vc(const field_of<S>& f, std::size_t n) {
    return commutative_vc<S>(f, n, f.one());
}

/// V_2: {{e1,e1}} = e1⊗e2, all other products zero.
template <FieldScalar S>
DoubleAlgebra<S> v2(const field_of<S>& f) {
    auto table = DoubleAlgebra<S>::empty_table(f, 2);
    table[0](0, 1) = f.one();
    return DoubleAlgebra<S>(f, 2, std::move(table), "V_2");
}

/// L_2: [[e1,e1]] = e1⊗e2 - e2⊗e1.
template <FieldScalar S>
DoubleAlgebra<S> l2(const field_of<S>& f) {
    auto table = DoubleAlgebra<S>::empty_table(f, 2);
    table[0](0, 1) = f.one();
    table[0](1, 0) = -f.one();
    return DoubleAlgebra<S>(f, 2, std::move(table), "L_2");
}

/// L_2*: [[e1,e2]] = e1⊗e1 = -[[e2,e1]].
template <FieldScalar S>
DoubleAlgebra<S> l2_dual(const field_of<S>& f) {
    auto table = DoubleAlgebra<S>::empty_table(f, 2);
    table[1](0, 0) = f.one();
    table[2](0, 0) = -f.one();
    return DoubleAlgebra<S>(f, 2, std::move(table), "L_2*");
}

/// {{u,v}} = phi(u)⊗v + u⊗phi(v) for phi with phi^2 = 0.
template <FieldScalar S>
DoubleAlgebra<S> phi_algebra(const Matrix<S>& phi) {
    if (!phi.is_square()) throw invalid_argument("phi must be square");
    if (!(phi * phi).is_zero()) throw invalid_argument("phi_algebra requires phi^2 = 0");
    const auto& f = phi.field();
    const std::size_t n = phi.rows();
    auto table = DoubleAlgebra<S>::empty_table(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ei = unit_vector<S>(f, n, i), ej = unit_vector<S>(f, n, j);
            table[i * n + j] = outer(phi * ei, ej) + outer(ei, phi * ej);
        }
    return DoubleAlgebra<S>(f, n, std::move(table), "phi-algebra");
}

/// A finite-dimensional associative algebra given by structure constants:
/// `products[i*d + j]` is a_i a_j in the basis a_0..a_{d-1}.
template <FieldScalar S>
class AssociativeAlgebra {
public:
    AssociativeAlgebra(field_of<S> f, std::size_t d, std::vector<Vector<S>> products)
        : f_(std::move(f)), d_(d), prod_(std::move(products)) {
        if (prod_.size() != d_ * d_) throw dimension_mismatch("need d^2 products");
        for (const auto& p : prod_)
            if (p.size() != d_) throw dimension_mismatch("product vector has the wrong length");
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                for (std::size_t k = 0; k < d_; ++k)
                    if (!(multiply(multiply(unit(i), unit(j)), unit(k)) == multiply(unit(i), multiply(unit(j), unit(k)))))
                        throw invalid_argument("structure constants are not associative");
    }

    /// The field itself as a 1-dimensional algebra.
    static AssociativeAlgebra ground_field(const field_of<S>& f) { return AssociativeAlgebra(f, 1, {{f.one()}}); }

    const field_of<S>& field() const { return f_; }
    std::size_t dim() const { return d_; }
    Vector<S> unit(std::size_t i) const { return unit_vector<S>(f_, d_, i); }

    Vector<S> multiply(const Vector<S>& x, const Vector<S>& y) const {
        Vector<S> out(d_, f_.zero());
        for (std::size_t i = 0; i < d_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < d_; ++j)
                if (!y[j].is_zero()) out = out + scale(x[i] * y[j], prod_[i * d_ + j]);
        }
        return out;
    }

private:
    field_of<S> f_;
    std::size_t d_;
    std::vector<Vector<S>> prod_;
};

/// V = A ⊕ Z (basis of A first, then phi_1..phi_m) with
/// {{x,y}} = sum_i phi_i(x)y ⊗ phi_i for x, y in A and all brackets with Z
/// zero. Each phi_i must satisfy phi(xy) = x phi(y), and the phi_i must be
/// linearly independent.
template <FieldScalar S>
DoubleAlgebra<S> module_extension(const AssociativeAlgebra<S>& A, const std::vector<Matrix<S>>& phis) {
    const auto& f = A.field();
    const std::size_t d = A.dim(), m = phis.size(), n = d + m;
    std::vector<Vector<S>> flat;
    for (const auto& phi : phis) {
        if (phi.rows() != d || phi.cols() != d) throw dimension_mismatch("phi must be a d x d matrix");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                auto x = A.unit(i), y = A.unit(j);
                if (!(phi * A.multiply(x, y) == A.multiply(x, phi * y)))
                    throw invalid_argument("phi does not satisfy phi(xy) = x phi(y)");
            }
        flat.push_back(phi.data());
    }
    if (m > 0 && Subspace<S>::span(f, d * d, flat).dim() != m) throw invalid_argument("phi_i are linearly dependent");

    auto table = DoubleAlgebra<S>::empty_table(f, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t r = 0; r < m; ++r) {
                auto left = A.multiply(phis[r] * A.unit(i), A.unit(j));
                for (std::size_t k = 0; k < d; ++k)
                    if (!left[k].is_zero()) table[i * n + j](k, d + r) = table[i * n + j](k, d + r) + left[k];
            }
    return DoubleAlgebra<S>(f, n, std::move(table), "Z+A");
}

/// L(2,n) = L_2 ⊗ V_c ⊗ V_c^op with V = F^n.
template <FieldScalar S>
DoubleAlgebra<S> l2n(const field_of<S>& f, std::size_t n) {
    auto vc = commutative_vc<S>(f, n);
    return tensor_product(tensor_product(l2<S>(f), vc), opposite(vc)).renamed("L(2," + std::to_string(n) + ")");
}

/// F[t] / (t^D) with [[t^a, t^b]] = sum_{x+y=a-1} (t^{x+b}⊗t^y - t^x⊗t^{y+b}),
/// dropping every term with an exponent >= D.
template <FieldScalar S>
DoubleAlgebra<S> p1_quotient(const field_of<S>& f, std::size_t D) {
    if (D < 1) throw invalid_argument("p1_quotient needs D >= 1");
    auto table = DoubleAlgebra<S>::empty_table(f, D);
    for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < D; ++b) {
            auto& t = table[a * D + b];
            for (std::size_t x = 0; x < a; ++x) {
                std::size_t y = a - 1 - x;
                if (x + b < D) t(x + b, y) = t(x + b, y) + f.one();
                if (y + b < D) t(x, y + b) = t(x, y + b) - f.one();
            }
        }
    return DoubleAlgebra<S>(f, D, std::move(table), "P_1/(t^" + std::to_string(D) + ")");
}

/// dY(N) truncated at degree D: p1_quotient(D) ⊗ V_c^op(N) ⊗ V_c(N), with
/// T_m^{ij} at index (m*N + i)*N + j (0-based i, j).
template <FieldScalar S>
DoubleAlgebra<S> yangian_dy(const field_of<S>& f, std::size_t N, std::size_t D) {
    auto vc = commutative_vc<S>(f, N);
    return tensor_product(tensor_product(p1_quotient<S>(f, D), opposite(vc)), vc)
        .renamed("dY(" + std::to_string(N) + "," + std::to_string(D) + ")");
}

/// The symmetric averaging operator on M_2(Q)
///   R(x y; v w) = (x+w  y-v; v-y  x+w),  R^2 = 2R.
inline EndOperator<Rational> real_example_operator() {
    RationalField Q;
    return EndOperator<Rational>::from_function(Q, 2, [&](const Matrix<Rational>& m) {
        Matrix<Rational> r(Q, 2, 2);
        r(0, 0) = m(0, 0) + m(1, 1);
        r(0, 1) = m(0, 1) - m(1, 0);
        r(1, 0) = m(1, 0) - m(0, 1);
        r(1, 1) = m(0, 0) + m(1, 1);
        return r;
    });
}

/// The commutative double algebra on Q^2 with
///   {{e1,e1}} = -{{e2,e2}} = e1⊗e1 - e2⊗e2,  {{e1,e2}} = {{e2,e1}} = e1⊗e2 + e2⊗e1.
inline DoubleAlgebra<Rational> real_example() {
    RationalField Q;
    auto table = DoubleAlgebra<Rational>::empty_table(Q, 2);
    table[0](0, 0) = 1;
    table[0](1, 1) = -1;
    table[3](0, 0) = -1;
    table[3](1, 1) = 1;
    for (std::size_t ij : {1, 2}) {
        table[ij](0, 1) = 1;
        table[ij](1, 0) = 1;
    }
    return DoubleAlgebra<Rational>(Q, 2, std::move(table), "real_example");
}

/// The symmetric averaging operator on M_2(GF(2)(t))
///   R(x y; v w) = (x+w  y+tv; y/t+v  x+w),  R^2 = 0.
inline EndOperator<RatFunc> gf2t_example_operator() {
    RationalFunctionField K(2);
    const RatFunc t = K.t();
    return EndOperator<RatFunc>::from_function(K, 2, [&](const Matrix<RatFunc>& m) {
        Matrix<RatFunc> r(K, 2, 2);
        r(0, 0) = m(0, 0) + m(1, 1);
        r(0, 1) = m(0, 1) + t * m(1, 0);
        r(1, 0) = m(0, 1) / t + m(1, 0);
        r(1, 1) = m(0, 0) + m(1, 1);
        return r;
    });
}

inline DoubleAlgebra<RatFunc> gf2t_example() {
    return bracket_from_operator(gf2t_example_operator()).renamed("gf2t_example");
}

}  // namespace dalg
