#include <map>

#include "catch_amalgamated.hpp"
#include "dalg/examples.hpp"
#include "dalg/ideals.hpp"
#include "support.hpp"

using namespace dalg;
using namespace testing_support;

namespace {

const RationalField Q;

template <FieldScalar S>
Vector<S> e(const field_of<S>& f, std::size_t n, std::size_t i) {
    return unit_vector<S>(f, n, i);
}

// Extensions written with outer products and factor permutations only.
template <FieldScalar S>
Tensor3<S> ext_aL(const DoubleAlgebra<S>& V, const Vector<S>& a, const Vector<S>& b, const Vector<S>& c) {
    return outer(V.bracket(a, b), c);
}
template <FieldScalar S>
Tensor3<S> ext_aR(const DoubleAlgebra<S>& V, const Vector<S>& a, const Vector<S>& b, const Vector<S>& c) {
    return permute(outer(b, V.bracket(a, c)), Permutation::parse("(12)", 3));
}
template <FieldScalar S>
Tensor3<S> ext_bL(const DoubleAlgebra<S>& V, const Vector<S>& a, const Vector<S>& b, const Vector<S>& c) {
    return permute(outer(V.bracket(a, c), b), Permutation::parse("(23)", 3));
}
template <FieldScalar S>
Tensor3<S> ext_bR(const DoubleAlgebra<S>& V, const Vector<S>& a, const Vector<S>& b, const Vector<S>& c) {
    return outer(a, V.bracket(b, c));
}

// Linear extension of a pure-tensor formula over a Tensor2 slot.
template <FieldScalar S, class Pure>
Tensor3<S> over_slot(const DoubleAlgebra<S>& V, const Tensor2<S>& u, Pure pure) {
    const std::size_t n = V.dim();
    Tensor3<S> out(V.field(), n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            if (!u(k, l).is_zero()) out = out + u(k, l) * pure(e<S>(V.field(), n, k), e<S>(V.field(), n, l));
    return out;
}

// Classification straight from the definitions, using the oracle
// extensions above.
template <FieldScalar S>
ClassificationFlags oracle_flags(const DoubleAlgebra<S>& V) {
    const std::size_t n = V.dim();
    const auto& f = V.field();
    ClassificationFlags fl;
    fl.is_skew = fl.is_symmetric = true;
    bool jacobi = true, aL = true, aR = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto x = e<S>(f, n, i), y = e<S>(f, n, j);
            if (!(V.bracket(x, y) == -swap12(V.bracket(y, x)))) fl.is_skew = false;
            if (!(V.bracket(x, y) == swap12(V.bracket(y, x)))) fl.is_symmetric = false;
        }
    const auto s12 = Permutation::parse("(12)", 3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto a = e<S>(f, n, i), b = e<S>(f, n, j), c = e<S>(f, n, k);
                auto bc = V.bracket(b, c), ab = V.bracket(a, b), ac = V.bracket(a, c);
                auto inL = over_slot(V, bc, [&](auto x, auto y) { return ext_aL(V, a, x, y); });
                auto inR = over_slot(V, bc, [&](auto x, auto y) { return ext_aR(V, a, x, y); });
                auto outL = over_slot(V, ab, [&](auto x, auto y) { return ext_bL(V, x, y, c); });
                auto outR = over_slot(V, ab, [&](auto x, auto y) { return ext_bR(V, x, y, c); });
                auto tw = permute(over_slot(V, ac, [&](auto x, auto y) { return ext_aR(V, b, x, y); }), s12);
                if (!(inL == outL)) aL = false;
                if (!(inR == outR)) aR = false;
                if (!(inL - tw == outL)) jacobi = false;
            }
    fl.is_lie = fl.is_skew && jacobi;
    fl.is_associative = aL && aR;
    fl.is_commutative = fl.is_associative && fl.is_symmetric;
    return fl;
}

// (x^a - y^a)(x^b - y^b)/(x - y) by synthetic division, as a map
// (i, j) -> coefficient of x^i y^j.
std::map<std::pair<int, int>, long long> p1_by_division(int a, int b) {
    const int deg = a + b;
    std::vector<std::vector<long long>> num(deg + 1, std::vector<long long>(deg + 1, 0));
    num[a + b][0] += 1;
    num[a][b] -= 1;
    num[b][a] -= 1;
    num[0][a + b] += 1;
    // divide sum_i A_i(y) x^i by (x - y): B_{i-1} = A_i + y B_i
    std::vector<std::vector<long long>> q(deg + 1, std::vector<long long>(deg + 2, 0));
    std::vector<long long> carry(deg + 2, 0);
    for (int i = deg; i >= 1; --i) {
        std::vector<long long> cur(deg + 2, 0);
        for (int j = 0; j <= deg; ++j) cur[j] += num[i][j];
        for (int j = 0; j + 1 <= deg + 1; ++j) cur[j + 1] += carry[j];
        q[i - 1] = cur;
        carry = cur;
    }
    std::map<std::pair<int, int>, long long> out;
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; j <= deg + 1; ++j)
            if (q[i][j] != 0) out[{i, j}] = q[i][j];
    return out;
}

}  // namespace

TEST_CASE("bracket examples", "[algebra]") {
    auto vc = commutative_vc<Rational>(Q, 3);
    for (int trial = 0; trial < 10; ++trial) {
        auto u = random_vector(Q, 3), v = random_vector(Q, 3);
        CHECK(vc.bracket(u, v) == outer(u, v));
        CHECK(vc.bracket(Vector<Rational>(3, Q.zero()), v).is_zero());
    }
    auto V2 = v2<Rational>(Q);
    CHECK(V2.bracket(e<Rational>(Q, 2, 0), e<Rational>(Q, 2, 0)) == outer(e<Rational>(Q, 2, 0), e<Rational>(Q, 2, 1)));
    CHECK(V2.bracket(e<Rational>(Q, 2, 0), e<Rational>(Q, 2, 1)).is_zero());
    CHECK_THROWS_AS(V2.bracket(random_vector(Q, 3), random_vector(Q, 2)), dimension_mismatch);
}

TEST_CASE("extension examples", "[algebra]") {
    auto vc = commutative_vc<Rational>(Q, 2);
    auto e1 = e<Rational>(Q, 2, 0), e2 = e<Rational>(Q, 2, 1);
    CHECK(extend_vec_tensor_L(vc, e1, outer(e1, e2)) == outer(outer(e1, e1), e2));
    auto V2 = v2<Rational>(Q);
    CHECK(extend_tensor_vec_R(V2, outer(e2, e1), e1) == outer(outer(e2, e1), e2));
    auto z = zero_algebra<Rational>(Q, 2);
    auto u = outer(e1, e2) + outer(e2, e2);
    CHECK(extend_vec_tensor_L(z, e1, u).is_zero());
    CHECK(extend_vec_tensor_R(z, e1, u).is_zero());
    CHECK(extend_tensor_vec_L(z, u, e2).is_zero());
    CHECK(extend_tensor_vec_R(z, u, e2).is_zero());
}

TEST_CASE("extensions agree with their defining formulas", "[algebra][property]") {
    PrimeField F(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto V = random_algebra(F, 3);
        auto a = random_vector(F, 3), b = random_vector(F, 3), c = random_vector(F, 3);
        CHECK(extend_vec_tensor_L(V, a, outer(b, c)) == ext_aL(V, a, b, c));
        CHECK(extend_vec_tensor_R(V, a, outer(b, c)) == ext_aR(V, a, b, c));
        CHECK(extend_tensor_vec_L(V, outer(a, b), c) == ext_bL(V, a, b, c));
        CHECK(extend_tensor_vec_R(V, outer(a, b), c) == ext_bR(V, a, b, c));
    }
}

TEST_CASE("classification examples", "[algebra]") {
    CHECK(classify_direct(l2<Rational>(Q)).is_lie);
    auto f2 = classify_direct(v2<Rational>(Q));
    CHECK(f2.is_associative);
    CHECK(!f2.is_commutative);
    auto fz = classify_direct(zero_algebra<Rational>(Q, 3));
    CHECK((fz.is_skew && fz.is_symmetric && fz.is_lie && fz.is_associative && fz.is_commutative));
}

TEST_CASE("classify_direct agrees with the definition oracle", "[algebra][property]") {
    std::vector<DoubleAlgebra<Rational>> qs{
        v2<Rational>(Q), l2<Rational>(Q), l2_dual<Rational>(Q), commutative_vc<Rational>(Q, 2),
        real_example(), p1_quotient<Rational>(Q, 3), l2n<Rational>(Q, 1), zero_algebra<Rational>(Q, 2),
        commutator_algebra(v2<Rational>(Q)), dual(v2<Rational>(Q))};
    for (const auto& V : qs) CHECK(classify_direct(V) == oracle_flags(V));
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        for (int trial = 0; trial < 40; ++trial) {
            auto V = random_algebra(F, 2);
            CHECK(classify_direct(V) == oracle_flags(V));
        }
    }
    // Sparse random tables hit the identities more often.
    PrimeField F2(2);
    for (int trial = 0; trial < 200; ++trial) {
        auto table = DoubleAlgebra<Zp>::empty_table(F2, 2);
        for (int k = 0; k < 2; ++k) {
            auto& t = table[static_cast<std::size_t>(uniform(0, 3))];
            t(static_cast<std::size_t>(uniform(0, 1)), static_cast<std::size_t>(uniform(0, 1))) = F2.one();
        }
        DoubleAlgebra<Zp> V(F2, 2, table);
        CHECK(classify_direct(V) == oracle_flags(V));
    }
}

TEST_CASE("flag invariants", "[algebra][property]") {
    PrimeField F2(2);
    for (int trial = 0; trial < 300; ++trial) {
        auto table = DoubleAlgebra<Zp>::empty_table(F2, 2);
        for (int k = 0; k < 2; ++k) table[static_cast<std::size_t>(uniform(0, 3))](static_cast<std::size_t>(uniform(0, 1)), static_cast<std::size_t>(uniform(0, 1))) = F2.one();
        auto fl = classify_direct(DoubleAlgebra<Zp>(F2, 2, table));
        if (fl.is_commutative) CHECK((fl.is_associative && fl.is_symmetric));
        if (fl.is_lie) CHECK(fl.is_skew);
    }
}

TEST_CASE("commutator algebra", "[algebra]") {
    CHECK(commutator_algebra(v2<Rational>(Q)) == l2<Rational>(Q));
    CHECK(commutator_algebra(commutative_vc<Rational>(Q, 3)).is_zero_bracket());
    CHECK(commutator_algebra(zero_algebra<Rational>(Q, 2)).is_zero_bracket());
    CHECK(classify_direct(commutator_algebra(real_example())).is_lie);
    for (const auto& V : {v2<Rational>(Q), real_example(), commutative_vc<Rational>(Q, 2)})
        if (classify_direct(V).is_associative) CHECK(classify_direct(commutator_algebra(V)).is_lie);
}

TEST_CASE("opposite, dual and tensor product", "[algebra]") {
    CHECK(dual(l2<Rational>(Q)) == l2_dual<Rational>(Q));
    CHECK(classify_direct(l2_dual<Rational>(Q)).is_lie);
    auto u = random_vector(Q, 3), v = random_vector(Q, 3);
    CHECK(opposite(commutative_vc<Rational>(Q, 3)).bracket(u, v) == outer(v, u));
    CHECK(opposite(real_example()) == real_example());
    CHECK(tensor_product(l2<Rational>(Q), commutative_vc<Rational>(Q, 1)) == l2<Rational>(Q));
    CHECK(classify_direct(tensor_product(l2<Rational>(Q), commutative_vc<Rational>(Q, 2))).is_lie);
    CHECK(classify_direct(tensor_product(v2<Rational>(Q), commutative_vc<Rational>(Q, 2))).is_associative);
    CHECK(classify_direct(tensor_product(commutative_vc<Rational>(Q, 2), commutative_vc<Rational>(Q, 2))).is_commutative);
    CHECK(classify_direct(opposite(v2<Rational>(Q))).is_associative);
    CHECK(classify_direct(opposite(l2<Rational>(Q))).is_lie);
    CHECK(classify_direct(dual(real_example())).is_commutative);
    CHECK_THROWS_AS(tensor_product(v2<Zp>(PrimeField(2)), v2<Zp>(PrimeField(3))), field_mismatch);
}

TEST_CASE("opposite and dual are involutive", "[algebra][property]") {
    PrimeField F(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto V = random_algebra(F, static_cast<std::size_t>(uniform(1, 3)));
        CHECK(opposite(opposite(V)) == V);
        CHECK(dual(dual(V)) == V);
    }
}

TEST_CASE("tensor product matches its definition on pure tensors", "[algebra][property]") {
    PrimeField F(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto V = random_algebra(F, 2), U = random_algebra(F, 2);
        auto W = tensor_product(V, U);
        auto v1 = random_vector(F, 2), v2_ = random_vector(F, 2), u1 = random_vector(F, 2), u2 = random_vector(F, 2);
        auto kron = [&](const Vector<Zp>& v, const Vector<Zp>& u) {
            Vector<Zp> out(4, F.zero());
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t a = 0; a < 2; ++a) out[i * 2 + a] = v[i] * u[a];
            return out;
        };
        // ({{v1,v2}} ⊗ {{u1,u2}})^(23): (x⊗y) and (z⊗w) give (x⊗z)⊗(y⊗w)
        auto bv = V.bracket(v1, v2_), bu = U.bracket(u1, u2);
        Tensor2<Zp> expect(F, 4);
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t l = 0; l < 2; ++l)
                for (std::size_t c = 0; c < 2; ++c)
                    for (std::size_t d = 0; d < 2; ++d)
                        expect(k * 2 + c, l * 2 + d) = expect(k * 2 + c, l * 2 + d) + bv(k, l) * bu(c, d);
        CHECK(W.bracket(kron(v1, u1), kron(v2_, u2)) == expect);
    }
}

TEST_CASE("truncated polynomial algebra", "[algebra]") {
    for (std::size_t D = 1; D <= 5; ++D) {
        auto P = p1_quotient<Rational>(Q, D);
        for (std::size_t m = 0; m < D; ++m) CHECK(P.constants(0, m).is_zero());
        CHECK(classify_direct(P).is_lie);
    }
    auto P3 = p1_quotient<Rational>(Q, 3);
    Tensor2<Rational> expect(Q, 3);
    expect(2, 0) = Q.one();
    expect(0, 2) = -Q.one();
    CHECK(P3.constants(2, 1) == expect);
}

TEST_CASE("truncated polynomial algebra against polynomial division", "[algebra][property]") {
    const std::size_t D = 5;
    auto P = p1_quotient<Rational>(Q, D);
    for (int a = 0; a < static_cast<int>(D); ++a)
        for (int b = 0; b < static_cast<int>(D); ++b) {
            Tensor2<Rational> expect(Q, D);
            for (const auto& [ij, c] : p1_by_division(a, b))
                if (ij.first < static_cast<int>(D) && ij.second < static_cast<int>(D))
                    expect(static_cast<std::size_t>(ij.first), static_cast<std::size_t>(ij.second)) = Rational(c);
            CHECK(P.constants(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) == expect);
        }
}

TEST_CASE("high powers span an ideal of the truncation", "[algebra]") {
    for (std::size_t E = 2; E <= 6; ++E) {
        auto P = p1_quotient<Rational>(Q, E);
        for (std::size_t D = 1; D < E; ++D) {
            std::vector<Vector<Rational>> gens;
            for (std::size_t r = D; r < E; ++r) gens.push_back(e<Rational>(Q, E, r));
            CHECK(is_ideal(P, Subspace<Rational>::span(Q, E, gens)));
        }
    }
}

TEST_CASE("example constructors", "[algebra]") {
    Matrix<Rational> phi(Q, 2, 2);
    phi(0, 1) = Q.one();
    auto fl = classify_direct(phi_algebra(phi));
    CHECK(fl.is_associative);
    CHECK(fl.is_commutative);
    CHECK_THROWS_AS(phi_algebra(Matrix<Rational>::identity(Q, 2)), invalid_argument);

    auto Z = module_extension(AssociativeAlgebra<Rational>::ground_field(Q), {Matrix<Rational>::identity(Q, 1)});
    CHECK(Z == v2<Rational>(Q));

    // A = Q[x]/(x^2), Z spanned by right multiplications, which satisfy phi(xy) = x phi(y)
    AssociativeAlgebra<Rational> A(Q, 2, {{Q.one(), Q.zero()}, {Q.zero(), Q.one()}, {Q.zero(), Q.one()}, {Q.zero(), Q.zero()}});
    Matrix<Rational> id = Matrix<Rational>::identity(Q, 2), rx(Q, 2, 2);
    rx(1, 0) = Q.one();
    auto W = module_extension(A, {id, rx});
    auto fw = classify_direct(W);
    CHECK(fw.is_associative);
    CHECK(!fw.is_commutative);
    Matrix<Rational> bad(Q, 2, 2);
    bad(0, 1) = Q.one();
    CHECK_THROWS_AS(module_extension(A, {bad}), invalid_argument);
    CHECK_THROWS_AS(module_extension(A, {id, id}), invalid_argument);

    auto vc = commutative_vc<Rational>(Q, 2, Rational(3));
    CHECK(vc.bracket(e<Rational>(Q, 2, 0), e<Rational>(Q, 2, 1)) == Rational(3) * outer(e<Rational>(Q, 2, 0), e<Rational>(Q, 2, 1)));
    CHECK(classify_direct(l2n<Rational>(Q, 2)).is_lie);
}

TEST_CASE("displayed multiplication table of the real example", "[algebra]") {
    auto V = real_example();
    auto e1 = e<Rational>(Q, 2, 0), e2 = e<Rational>(Q, 2, 1);
    auto t11 = outer(e1, e1) - outer(e2, e2);
    CHECK(V.bracket(e1, e1) == t11);
    CHECK(V.bracket(e2, e2) == -t11);
    CHECK(V.bracket(e1, e2) == outer(e1, e2) + outer(e2, e1));
    CHECK(V.bracket(e2, e1) == outer(e1, e2) + outer(e2, e1));
}

TEST_CASE("opposite of a commutative algebra swaps the arguments", "[algebra]") {
    for (std::size_t n = 1; n <= 3; ++n) {
        auto vc = commutative_vc<Rational>(Q, n);
        auto op = opposite(vc);
        CHECK(classify_direct(op).is_commutative);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(op.constants(i, j) == vc.constants(j, i));
        // Equal to V_c itself only in dimension 1.
        CHECK((op == vc) == (n == 1));
    }
}
