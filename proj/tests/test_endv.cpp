#include "catch_amalgamated.hpp"
#include "dalg/examples.hpp"
#include "dalg/structure.hpp"
#include "support.hpp"

using namespace dalg;
using namespace testing_support;

namespace {

const RationalField Q;

// {{a,b}} = sum_{p,q} e_pq(a) ⊗ R(e_qp)(b), written out with the known dual
// basis of the matrix units.
template <FieldScalar S>
DoubleAlgebra<S> bracket_by_units(const EndOperator<S>& R) {
    const std::size_t n = R.n();
    const auto& f = R.field();
    auto table = DoubleAlgebra<S>::empty_table(f, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
            auto a = unit_vector<S>(f, n, j), b = unit_vector<S>(f, n, l);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    table[j * n + l] = table[j * n + l] +
                                       outer(matrix_unit<S>(f, n, p, q) * a, R(matrix_unit<S>(f, n, q, p)) * b);
        }
    return DoubleAlgebra<S>(f, n, std::move(table));
}

// <R(x), y> = <x, T(y)> on all pairs of matrix units.
template <FieldScalar S>
bool is_adjoint(const EndOperator<S>& R, const EndOperator<S>& T) {
    const auto units = matrix_units<S>(R.field(), R.n());
    for (const auto& x : units)
        for (const auto& y : units)
            if (!(trace_form(R(x), y) == trace_form(x, T(y)))) return false;
    return true;
}

template <FieldScalar S>
EndOperator<S> right_multiplication(const Matrix<S>& e) {
    return EndOperator<S>::from_function(e.field(), e.rows(), [&](const Matrix<S>& x) { return x * e; });
}

template <FieldScalar S>
EndOperator<S> left_multiplication(const Matrix<S>& e) {
    return EndOperator<S>::from_function(e.field(), e.rows(), [&](const Matrix<S>& x) { return e * x; });
}

}  // namespace

TEST_CASE("trace form examples", "[endv]") {
    auto e12 = matrix_unit<Rational>(Q, 2, 0, 1), e21 = matrix_unit<Rational>(Q, 2, 1, 0);
    CHECK(trace_form(e12, e21) == Q.one());
    CHECK(trace_form(e12, e12).is_zero());
    CHECK(trace_form(Matrix<Rational>::identity(Q, 3), Matrix<Rational>::identity(Q, 3)) == Rational(3));
    CHECK_THROWS_AS(trace_form(e12, Matrix<Rational>::identity(Q, 3)), dimension_mismatch);
}

TEST_CASE("trace form is symmetric and associative", "[endv][property]") {
    PrimeField F(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_matrix(F, 3, 3), y = random_matrix(F, 3, 3), z = random_matrix(F, 3, 3);
        CHECK(trace_form(x, y) == trace_form(y, x));
        CHECK(trace_form(x * y, z) == trace_form(x, y * z));
    }
}

TEST_CASE("dual basis", "[endv]") {
    auto units = matrix_units<Rational>(Q, 2);
    auto duals = dual_basis(units);
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) CHECK(duals[p * 2 + q] == matrix_unit<Rational>(Q, 2, q, p));
    CHECK_THROWS_AS(dual_basis(std::vector<Matrix<Rational>>(4, Matrix<Rational>::identity(Q, 2))), invalid_argument);

    PrimeField F(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Matrix<Zp>> basis;
        for (int i = 0; i < 4; ++i) basis.push_back(random_matrix(F, 2, 2));
        std::vector<Vector<Zp>> flat;
        for (const auto& b : basis) flat.push_back(vec(b));
        if (Subspace<Zp>::span(F, 4, flat).dim() < 4) {
            CHECK_THROWS_AS(dual_basis(basis), invalid_argument);
            continue;
        }
        auto d = dual_basis(basis);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(trace_form(basis[i], d[j]) == (i == j ? F.one() : F.zero()));
    }
}

TEST_CASE("conjugate is the trace-form adjoint", "[endv][property]") {
    PrimeField F(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto R = random_operator(F, 2);
        auto Rs = conjugate(R);
        CHECK(is_adjoint(R, Rs));
        CHECK(conjugate(Rs) == R);
    }
    for (int trial = 0; trial < 5; ++trial) {
        auto R = random_operator(Q, 2);
        CHECK(is_adjoint(R, conjugate(R)));
        CHECK(conjugate(conjugate(R)) == R);
    }
    auto e = random_matrix(Q, 3, 3);
    CHECK(conjugate(right_multiplication(e)) == left_multiplication(e));
    CHECK(conjugate(EndOperator<Rational>::identity(Q, 2)) == EndOperator<Rational>::identity(Q, 2));
}

TEST_CASE("bracket from an operator", "[endv]") {
    const Rational alpha(7, 3);
    auto V = bracket_from_operator(alpha * EndOperator<Rational>::identity(Q, 3));
    for (int trial = 0; trial < 5; ++trial) {
        auto u = random_vector(Q, 3), v = random_vector(Q, 3);
        CHECK(V.bracket(u, v) == alpha * outer(v, u));
    }
    CHECK(bracket_from_operator(EndOperator<Rational>::zero(Q, 2)).is_zero_bracket());
}

TEST_CASE("bracket from an operator against the unit expansion", "[endv][property]") {
    PrimeField F(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto R = random_operator(F, 2);
        CHECK(bracket_from_operator(R) == bracket_by_units(R));
    }
    for (int trial = 0; trial < 5; ++trial) {
        auto R = random_operator(Q, 2);
        CHECK(bracket_from_operator(R) == bracket_by_units(R));
    }
}

TEST_CASE("operator and bracket round trips", "[endv][property]") {
    for (std::size_t n : {2u, 3u}) {
        PrimeField F(5);
        for (int trial = 0; trial < 8; ++trial) {
            auto V = random_algebra(F, n);
            CHECK(bracket_from_operator(operator_from_bracket(V)) == V);
            auto R = random_operator(F, n);
            CHECK(operator_from_bracket(bracket_from_operator(R)) == R);
        }
        for (int trial = 0; trial < 3; ++trial) {
            auto V = random_algebra(Q, n);
            CHECK(bracket_from_operator(operator_from_bracket(V)) == V);
        }
    }
}

TEST_CASE("operator identities on examples", "[endv]") {
    auto L = operator_from_bracket(l2<Rational>(Q));
    auto ids = check_identities(L);
    CHECK(ids.skew);
    CHECK(ids.rota_baxter);
    CHECK(classify_operator(L).is_lie);

    auto e = random_matrix(Q, 2, 2);
    CHECK(check_identities(right_multiplication(e)).eq3);

    auto R = real_example_operator();
    auto r = check_identities(R);
    CHECK(r.symmetric);
    CHECK(r.averaging);
    CHECK(R * R == Rational(2) * R);
    CHECK(classify_operator(R) == classify_direct(real_example()));
    CHECK(bracket_from_operator(R) == real_example());

    auto T = gf2t_example_operator();
    auto t = check_identities(T);
    CHECK(t.symmetric);
    CHECK(t.averaging);
    CHECK((T * T).is_zero());
    CHECK(bracket_from_operator(T) == gf2t_example());
}

TEST_CASE("averaging difference", "[endv]") {
    CHECK(averaging_difference(real_example_operator()).is_zero());
    PrimeField F(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto D = averaging_difference(random_operator(F, 2));
        CHECK(conjugate(D) == -D);
    }
}

TEST_CASE("operator and direct classification agree", "[endv][property]") {
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        for (int trial = 0; trial < 60; ++trial) {
            auto R = random_operator(F, 2);
            CHECK(classify_operator(R) == classify_direct(bracket_from_operator(R)));
        }
    }
    for (const auto& V : {v2<Rational>(Q), l2<Rational>(Q), l2_dual<Rational>(Q), commutative_vc<Rational>(Q, 2),
                          p1_quotient<Rational>(Q, 2), zero_algebra<Rational>(Q, 2)})
        CHECK(classify_operator(operator_from_bracket(V)) == classify_direct(V));
}

TEST_CASE("commutators of associative algebras over GF(2) are Lie", "[endv][property]") {
    PrimeField F(2);
    std::size_t associative = 0;
    for (std::uint32_t code = 0; code < (1u << 16); ++code) {
        auto table = DoubleAlgebra<Zp>::empty_table(F, 2);
        for (std::size_t b = 0; b < 16; ++b)
            if (code >> b & 1u) table[b / 4]((b % 4) / 2, b % 2) = F.one();
        DoubleAlgebra<Zp> V(F, 2, table);
        if (!classify_direct(V).is_associative) continue;
        ++associative;
        CHECK(classify_direct(commutator_algebra(V)).is_lie);
    }
    CHECK(associative > 0);
}

TEST_CASE("one-dimensional skew Rota-Baxter operators", "[endv]") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField F(p);
        for (std::uint32_t r = 0; r < p; ++r) {
            Matrix<Zp> m(F, 1, 1);
            m(0, 0) = F.from_int(r);
            auto ids = check_identities(EndOperator<Zp>(1, m));
            CHECK((ids.skew && ids.rota_baxter) == (r == 0));
        }
    }
}

TEST_CASE("structure of averaging operators", "[endv][structure]") {
    auto R = real_example_operator();
    CHECK(general_properties(R).all());
    CHECK(averaging_type(R) == AveragingType::Split);
    CHECK(nondegenerate_case_holds(R));
    CHECK(full_sum_forces_injective(R));
    CHECK(is_ideal(real_example(), image_applied(R)));

    auto T = gf2t_example_operator();
    CHECK(general_properties(T).all());
    CHECK(averaging_type(T) == AveragingType::Nilpotent);
    CHECK(characteristic_divides_dim(T));

    CHECK(averaging_type(EndOperator<Rational>::zero(Q, 2)) == AveragingType::Zero);
    auto id = Rational(5) * EndOperator<Rational>::identity(Q, 2);
    CHECK(scalar_multiple_of_identity(id) == Rational(5));
    CHECK(!scalar_multiple_of_identity(real_example_operator()));
    CHECK(nondegenerate_case_holds(id));
    CHECK(kernel(id).is_zero());
    CHECK(image(id).is_full());
    CHECK(preimage_of_identity(id) == Rational(1, 5) * Matrix<Rational>::identity(Q, 2));
    CHECK(!preimage_of_identity(EndOperator<Rational>::zero(Q, 2)));
}

TEST_CASE("irreducible actions", "[endv][structure]") {
    PrimeField F(2);
    CHECK(acts_irreducibly(Subspace<Zp>::full(F, 4), 2));
    std::vector<Vector<Zp>> upper{vec(matrix_unit<Zp>(F, 2, 0, 0)), vec(matrix_unit<Zp>(F, 2, 0, 1)),
                                  vec(matrix_unit<Zp>(F, 2, 1, 1))};
    CHECK(!acts_irreducibly(Subspace<Zp>::span(F, 4, upper), 2));
    // The rotation-like x = [[0,1],[1,1]] has no eigenvector over GF(2).
    Matrix<Zp> x(F, 2, 2);
    x(0, 1) = x(1, 0) = x(1, 1) = F.one();
    CHECK(acts_irreducibly(Subspace<Zp>::span(F, 4, {vec(x)}), 2));
}
