#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dalg/algebra.hpp"
#include "dalg/linalg/subspace.hpp"

// End V for V = F^n is coordinatized by matrix units e_pq (e_pq(v_j) =
// δ_qj v_p) in the order p*n + q, so an n x n matrix x has coordinate
// vector vec(x)[p*n + q] = x(p, q).

namespace dalg {

template <FieldScalar S>
Vector<S> vec(const Matrix<S>& x) {
    return x.data();
}

template <FieldScalar S>
Matrix<S> unvec(const field_of<S>& f, std::size_t n, const Vector<S>& v) {
    if (v.size() != n * n) throw dimension_mismatch("vectorized matrix has the wrong length");
    Matrix<S> x(f, n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) x(p, q) = v[p * n + q];
    return x;
}

template <FieldScalar S>
Matrix<S> matrix_unit(const field_of<S>& f, std::size_t n, std::size_t p, std::size_t q) {
    Matrix<S> x(f, n, n);
    x(p, q) = f.one();
    return x;
}

/// e_pq in the order p*n + q.
template <FieldScalar S>
std::vector<Matrix<S>> matrix_units(const field_of<S>& f, std::size_t n) {
    std::vector<Matrix<S>> out;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) out.push_back(matrix_unit<S>(f, n, p, q));
    return out;
}

/// <x, y> = tr(xy).
template <FieldScalar S>
S trace_form(const Matrix<S>& x, const Matrix<S>& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw dimension_mismatch("trace form needs two n x n matrices");
    return (x * y).trace();
}

/// Gram matrix G(i,j) = <b_i, b_j>.
template <FieldScalar S>
Matrix<S> trace_gram(const std::vector<Matrix<S>>& basis) {
    if (basis.empty()) throw invalid_argument("empty basis");
    Matrix<S> g(basis[0].field(), basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = trace_form(basis[i], basis[j]);
    return g;
}

/// The basis b_i* with <b_i, b_j*> = δ_ij. Throws if the input is not a
/// basis of End V.
template <FieldScalar S>
std::vector<Matrix<S>> dual_basis(const std::vector<Matrix<S>>& basis) {
    if (basis.empty()) throw invalid_argument("empty basis");
    const std::size_t n = basis[0].rows();
    if (basis.size() != n * n) throw invalid_argument("a basis of End V has n^2 elements");
    auto ginv = inverse(trace_gram(basis));
    if (!ginv) throw invalid_argument("matrices are linearly dependent");
    // b_j* = sum_k D(j,k) b_k with D G^T = I; G is symmetric.
    std::vector<Matrix<S>> out;
    const auto& f = basis[0].field();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Matrix<S> d(f, n, n);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!(*ginv)(j, k).is_zero()) d = d + (*ginv)(j, k) * basis[k];
        out.push_back(std::move(d));
    }
    return out;
}

/// A linear map R: End V -> End V, stored as the n^2 x n^2 matrix acting on
/// vec coordinates (column c is vec(R(e_c))).
template <FieldScalar S>
class EndOperator {
public:
    using field_type = field_of<S>;

    EndOperator(std::size_t n, Matrix<S> m) : n_(n), m_(std::move(m)) {
        if (m_.rows() != n_ * n_ || m_.cols() != n_ * n_) throw dimension_mismatch("operator matrix must be n^2 x n^2");
    }

    static EndOperator zero(const field_type& f, std::size_t n) { return EndOperator(n, Matrix<S>(f, n * n, n * n)); }
    static EndOperator identity(const field_type& f, std::size_t n) {
        return EndOperator(n, Matrix<S>::identity(f, n * n));
    }
    /// Tabulates a linear map given on matrices.
    static EndOperator from_function(const field_type& f, std::size_t n,
                                     const std::function<Matrix<S>(const Matrix<S>&)>& map) {
        std::vector<Vector<S>> cols;
        for (const auto& e : matrix_units<S>(f, n)) cols.push_back(vec(map(e)));
        return EndOperator(n, Matrix<S>::from_columns(f, n * n, cols));
    }

    std::size_t n() const { return n_; }
    const field_type& field() const { return m_.field(); }
    const Matrix<S>& matrix() const { return m_; }

    Matrix<S> operator()(const Matrix<S>& x) const {
        if (x.rows() != n_ || x.cols() != n_) throw dimension_mismatch("operator argument must be n x n");
        return unvec(field(), n_, m_ * vec(x));
    }
    /// R(e_c) for the c-th matrix unit.
    Matrix<S> on_unit(std::size_t c) const { return unvec(field(), n_, m_.column(c)); }

    EndOperator operator+(const EndOperator& o) const { return EndOperator(n_, m_ + o.m_); }
    EndOperator operator-(const EndOperator& o) const { return EndOperator(n_, m_ - o.m_); }
    EndOperator operator-() const { return EndOperator(n_, -m_); }
    friend EndOperator operator*(const S& k, const EndOperator& r) { return EndOperator(r.n_, k * r.m_); }
    /// Composition: (R * T)(x) = R(T(x)).
    EndOperator operator*(const EndOperator& o) const { return EndOperator(n_, m_ * o.m_); }

    bool is_zero() const { return m_.is_zero(); }
    bool operator==(const EndOperator& o) const { return n_ == o.n_ && m_ == o.m_; }

private:
    std::size_t n_;
    Matrix<S> m_;
};

/// The adjoint R* with <R(x), y> = <x, R*(y)>: M* = G^{-1} M^T G for the
/// trace-form Gram matrix G of the matrix units.
template <FieldScalar S>
EndOperator<S> conjugate(const EndOperator<S>& R) {
    auto g = trace_gram(matrix_units<S>(R.field(), R.n()));
    auto ginv = inverse(g);
    return EndOperator<S>(R.n(), *ginv * R.matrix().transpose() * g);
}

/// Both operator expressions of the bracket,
///   {{a,b}} = sum_i e_i(a)⊗R(e_i*)(b)  and  sum_i R*(e_i)(a)⊗e_i*(b),
/// with e_i the matrix units and e_i* their trace-dual basis.
template <FieldScalar S>
std::pair<DoubleAlgebra<S>, DoubleAlgebra<S>> bracket_expressions(const EndOperator<S>& R) {
    const std::size_t n = R.n();
    const auto& f = R.field();
    const auto units = matrix_units<S>(f, n);
    const auto duals = dual_basis(units);
    const auto Rs = conjugate(R);
    std::vector<Matrix<S>> R_dual, Rs_unit;
    for (std::size_t i = 0; i < units.size(); ++i) {
        R_dual.push_back(R(duals[i]));
        Rs_unit.push_back(Rs(units[i]));
    }
    auto first = DoubleAlgebra<S>::empty_table(f, n);
    auto second = DoubleAlgebra<S>::empty_table(f, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto a = unit_vector<S>(f, n, j);
        for (std::size_t l = 0; l < n; ++l) {
            const auto b = unit_vector<S>(f, n, l);
            auto& t1 = first[j * n + l];
            auto& t2 = second[j * n + l];
            for (std::size_t i = 0; i < units.size(); ++i) {
                t1 = t1 + outer(units[i] * a, R_dual[i] * b);
                t2 = t2 + outer(Rs_unit[i] * a, duals[i] * b);
            }
        }
    }
    return {DoubleAlgebra<S>(f, n, std::move(first)), DoubleAlgebra<S>(f, n, std::move(second))};
}

/// The double bracket determined by R. Both operator expressions are
/// evaluated and must agree.
template <FieldScalar S>
DoubleAlgebra<S> bracket_from_operator(const EndOperator<S>& R) {
    auto [first, second] = bracket_expressions(R);
    if (!(first == second)) throw error("operator expressions of the bracket disagree; conjugation is inconsistent");
    return first;
}

/// Inverse of bracket_from_operator: R(e_jp) v_l = sum_k c[j][l](p,k) v_k.
template <FieldScalar S>
EndOperator<S> operator_from_bracket(const DoubleAlgebra<S>& V) {
    const std::size_t n = V.dim();
    Matrix<S> m(V.field(), n * n, n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t k = 0; k < n; ++k) m(k * n + l, j * n + p) = V.coefficient(j, l, p, k);
    return EndOperator<S>(n, std::move(m));
}

/// Which operator identities hold, each checked on all pairs of matrix
/// units (every identity is bilinear).
struct IdentityReport {
    bool eq3 = false;  ///< R(x)R(y) = R(R(x)y)
    bool eq4 = false;  ///< R*(x)R(y) = R*(xR(y))
    bool eq5 = false;  ///< R*(R(x)y) = R*(xR*(y))
    bool eq6 = false;  ///< R*(x)R*(y) = R*(R*(x)y)
    bool eq7 = false;  ///< R(x)R*(y) = R(xR*(y))
    bool eq8 = false;  ///< R(R*(x)y) = R(xR(y))
    bool skew = false;
    bool symmetric = false;
    bool rota_baxter = false;
    /// Both R(x)R(y) = R(R(x)y) and R(x)R(y) = R(xR(y)).
    bool averaging = false;

    bool operator==(const IdentityReport&) const = default;
};

template <FieldScalar S>
IdentityReport check_identities(const EndOperator<S>& R) {
    const std::size_t n = R.n(), N = n * n;
    const auto& f = R.field();
    const auto Rs = conjugate(R);
    const auto units = matrix_units<S>(f, n);
    std::vector<Matrix<S>> Ru, Su;
    for (std::size_t i = 0; i < N; ++i) {
        Ru.push_back(R.on_unit(i));
        Su.push_back(Rs.on_unit(i));
    }

    IdentityReport rep;
    rep.skew = Rs == -R;
    rep.symmetric = Rs == R;
    bool e3 = true, e4 = true, e5 = true, e6 = true, e7 = true, e8 = true, rb = true, avg = true;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            const auto& x = units[a];
            const auto& y = units[b];
            const auto& Rx = Ru[a];
            const auto& Ry = Ru[b];
            const auto& Sx = Su[a];
            const auto& Sy = Su[b];
            if (e3 || rb || avg) {
                const auto RxRy = Rx * Ry;
                const auto R_Rxy = R(Rx * y);
                if (e3 && !(RxRy == R_Rxy)) e3 = false;
                if (rb || avg) {
                    const auto R_xRy = R(x * Ry);
                    if (rb && !(RxRy == R_Rxy + R_xRy)) rb = false;
                    if (avg && !(RxRy == R_Rxy && RxRy == R_xRy)) avg = false;
                }
            }
            if (e4 && !(Sx * Ry == Rs(x * Ry))) e4 = false;
            if (e5 && !(Rs(Rx * y) == Rs(x * Sy))) e5 = false;
            if (e6 && !(Sx * Sy == Rs(Sx * y))) e6 = false;
            if (e7 && !(Rx * Sy == R(x * Sy))) e7 = false;
            if (e8 && !(R(Sx * y) == R(x * Ry))) e8 = false;
        }
    rep.eq3 = e3;
    rep.eq4 = e4;
    rep.eq5 = e5;
    rep.eq6 = e6;
    rep.eq7 = e7;
    rep.eq8 = e8;
    rep.rota_baxter = rb;
    rep.averaging = avg;
    return rep;
}

/// Flags from the operator identities: Lie iff skew Rota-Baxter,
/// associative iff R and R* are left averaging, commutative iff R is a
/// symmetric averaging operator.
inline ClassificationFlags flags_from_report(const IdentityReport& r) {
    ClassificationFlags flags;
    flags.is_skew = r.skew;
    flags.is_symmetric = r.symmetric;
    flags.is_lie = r.skew && r.rota_baxter;
    flags.is_associative = r.eq3 && r.eq6;
    flags.is_commutative = r.symmetric && r.averaging;
    return flags;
}

template <FieldScalar S>
ClassificationFlags classify_operator(const EndOperator<S>& R) {
    return flags_from_report(check_identities(R));
}

/// T - T*.
template <FieldScalar S>
EndOperator<S> averaging_difference(const EndOperator<S>& T) {
    return T - conjugate(T);
}

}  // namespace dalg
