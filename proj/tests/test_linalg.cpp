#include <set>

#include "catch_amalgamated.hpp"
#include "dalg/ideals.hpp"
#include "dalg/linalg/subspace.hpp"
#include "support.hpp"

using namespace dalg;
using namespace testing_support;

namespace {

Matrix<Rational> q_matrix(std::vector<std::vector<long long>> rows) {
    RationalField Q;
    Matrix<Rational> m(Q, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
    return m;
}

// Every vector of GF(p)^n, as digit lists.
std::vector<Vector<Zp>> all_vectors(const PrimeField& F, std::size_t n) {
    std::vector<Vector<Zp>> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= F.modulus();
    for (std::size_t code = 0; code < total; ++code) {
        Vector<Zp> v(n, F.zero());
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= F.modulus()) v[i] = F.from_int(static_cast<long long>(c % F.modulus()));
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("rref examples", "[linalg]") {
    RationalField Q;
    auto id = Matrix<Rational>::identity(Q, 2);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.rank == 2);
    auto z = rref(Matrix<Rational>(Q, 2, 2));
    CHECK(z.rank == 0);
    auto ones = rref(q_matrix({{1, 1}, {1, 1}}));
    CHECK(ones.rank == 1);
    CHECK(ones.reduced == q_matrix({{1, 1}, {0, 0}}));
}

TEST_CASE("kernel examples", "[linalg]") {
    RationalField Q;
    CHECK(kernel_basis(Matrix<Rational>::identity(Q, 3)).is_zero());
    CHECK(kernel_basis(Matrix<Rational>(Q, 3, 3)).is_full());
    auto k = kernel_basis(q_matrix({{1, 1}, {1, 1}}));
    CHECK(k == Subspace<Rational>::span(Q, 2, {Vector<Rational>{Rational(1), Rational(-1)}}));
}

TEST_CASE("subspace lattice examples", "[linalg]") {
    RationalField Q;
    auto e1 = unit_vector<Rational>(Q, 2, 0), e2 = unit_vector<Rational>(Q, 2, 1);
    auto X = Subspace<Rational>::span(Q, 2, {e1});
    auto Y = Subspace<Rational>::span(Q, 2, {e2});
    CHECK((X + Y).is_full());
    CHECK(X.intersect(X) == X);
    CHECK(X.intersect(Y).is_zero());
    auto W = Subspace<Rational>::span(Q, 2, {Vector<Rational>{Rational(1), Rational(1)}, e1});
    CHECK(W.contains(Y));
    CHECK_THROWS_AS(X + Subspace<Rational>::zero(Q, 3), dimension_mismatch);
}

TEST_CASE("cyclic closure examples", "[linalg]") {
    RationalField Q;
    auto e1 = unit_vector<Rational>(Q, 2, 0);
    auto id = Matrix<Rational>::identity(Q, 2);
    CHECK(cyclic_closure<Rational>(Q, 2, {e1}, {id}) == Subspace<Rational>::span(Q, 2, {e1}));
    Matrix<Rational> e21(Q, 2, 2);
    e21(1, 0) = Q.one();
    CHECK(cyclic_closure<Rational>(Q, 2, {e1}, {e21}).is_full());
    CHECK(cyclic_closure<Rational>(Q, 2, {e1}, {}).dim() == 1);
}

TEST_CASE("rank-nullity and kernel against enumeration over GF(3)", "[linalg][property]") {
    PrimeField F(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = static_cast<std::size_t>(uniform(1, 4)), c = static_cast<std::size_t>(uniform(1, 4));
        auto m = random_matrix(F, r, c);
        auto k = kernel_basis(m);
        CHECK(rank(m) + k.dim() == c);
        std::size_t members = 0;
        for (const auto& v : all_vectors(F, c)) {
            bool in_kernel = is_zero_vector<Zp>(m * v);
            CHECK(k.contains(v) == in_kernel);
            members += in_kernel;
        }
        std::size_t expect = 1;
        for (std::size_t i = 0; i < k.dim(); ++i) expect *= 3;
        CHECK(members == expect);
    }
}

TEST_CASE("sum and intersection against enumeration over GF(2)", "[linalg][property]") {
    PrimeField F(2);
    const std::size_t n = 4;
    for (int trial = 0; trial < 60; ++trial) {
        auto A = Subspace<Zp>::row_space(random_matrix(F, static_cast<std::size_t>(uniform(0, 3)), n));
        auto B = Subspace<Zp>::row_space(random_matrix(F, static_cast<std::size_t>(uniform(0, 3)), n));
        CHECK(A.dim() + B.dim() == (A + B).dim() + A.intersect(B).dim());
        auto I = A.intersect(B);
        for (const auto& v : all_vectors(F, n)) CHECK(I.contains(v) == (A.contains(v) && B.contains(v)));
        CHECK(A.intersect(B) == B.intersect(A));
        CHECK((A + B).contains(A));
    }
}

TEST_CASE("solve and inverse", "[linalg][property]") {
    RationalField Q;
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(Q, 3, 3);
        auto inv = inverse(m);
        if (rank(m) == 3) {
            REQUIRE(inv);
            CHECK(m * *inv == Matrix<Rational>::identity(Q, 3));
        } else {
            CHECK(!inv);
        }
        auto b = random_vector(Q, 3);
        auto x = solve(m, b);
        if (x) CHECK(m * *x == b);
        else CHECK(rank(m) < 3);
    }
}

TEST_CASE("cyclic closure is invariant and minimal", "[linalg][property]") {
    PrimeField F(2);
    const std::size_t n = 4;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Matrix<Zp>> ops;
        for (int i = 0; i < static_cast<int>(uniform(0, 2)); ++i) ops.push_back(random_matrix(F, n, n));
        auto seed = random_vector(F, n);
        auto C = cyclic_closure<Zp>(F, n, {seed}, ops);
        for (const auto& op : ops)
            for (const auto& b : C.basis_vectors()) CHECK(C.contains(op * b));
        CHECK(C.contains(seed));
        // minimal: every invariant subspace containing the seed contains C
        for (std::size_t d = 0; d <= n; ++d) {
            auto visit = [&](const Subspace<Zp>& W) {
                if (!W.contains(seed)) return true;
                bool invariant = true;
                for (const auto& op : ops)
                    for (const auto& w : W.basis_vectors())
                        if (!W.contains(op * w)) invariant = false;
                if (invariant) CHECK(W.contains(C));
                return true;
            };
            if (d == 0 || d == n) continue;
            enumerate_subspaces<Zp>(F, n, d, visit);
        }
    }
}

TEST_CASE("subspace enumeration visits each subspace once", "[linalg]") {
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t d = 0; d <= n; ++d) {
                std::set<std::string> seen;
                std::size_t visits = 0;
                enumerate_subspaces<Zp>(F, n, d, [&](const Subspace<Zp>& W) {
                    CHECK(W.dim() == d);
                    seen.insert(W.to_string());
                    ++visits;
                    return true;
                });
                CHECK(visits == seen.size());
                CHECK(static_cast<double>(visits) == subspace_count(p, n, d));
            }
    }
}
