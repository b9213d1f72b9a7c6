#include <array>

#include "catch_amalgamated.hpp"
#include "dalg/ideals.hpp"
#include "dalg/tensor.hpp"
#include "support.hpp"

using namespace dalg;
using namespace testing_support;

namespace {

const RationalField Q;

Vector<Rational> e(std::size_t n, std::size_t i) { return unit_vector<Rational>(Q, n, i); }

std::vector<Permutation> all_s3() {
    std::vector<Permutation> out;
    std::array<std::size_t, 3> p{0, 1, 2};
    do out.emplace_back(std::vector<std::size_t>(p.begin(), p.end()));
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST_CASE("permutation examples", "[tensor]") {
    CHECK(permute(outer(e(2, 0), e(2, 1)), Permutation::parse("(12)", 2)) == outer(e(2, 1), e(2, 0)));
    auto u = outer(outer(e(3, 0), e(3, 1)), e(3, 2));
    CHECK(permute(u, Permutation::parse("(23)", 3)) == outer(outer(e(3, 0), e(3, 2)), e(3, 1)));
    auto w = outer(e(2, 0), e(2, 1)) - outer(e(2, 1), e(2, 0));
    CHECK(swap12(w) == -w);
    CHECK_THROWS_AS(permute(w, Permutation::identity(3)), invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("(12", 2), parse_error);
}

TEST_CASE("cycle notation", "[tensor]") {
    auto s = Permutation::parse("(132)", 3);
    CHECK(s(0) == 2);
    CHECK(s(2) == 1);
    CHECK(s(1) == 0);
    CHECK(Permutation::parse("(12)(3)", 3) == Permutation({1, 0, 2}));
    CHECK(Permutation::parse("id", 3) == Permutation::identity(3));
}

TEST_CASE("permute moves factors of pure tensors", "[tensor][property]") {
    for (const auto& sigma : all_s3())
        for (int trial = 0; trial < 10; ++trial) {
            std::array<Vector<Rational>, 3> f{random_vector(Q, 2), random_vector(Q, 2), random_vector(Q, 2)};
            std::array<Vector<Rational>, 3> g;
            for (std::size_t i = 0; i < 3; ++i) g[sigma(i)] = f[i];
            CHECK(permute(outer(outer(f[0], f[1]), f[2]), sigma) == outer(outer(g[0], g[1]), g[2]));
        }
}

TEST_CASE("permute is a group action", "[tensor][property]") {
    PrimeField F(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Zp> c;
        for (int i = 0; i < 27; ++i) c.push_back(random_scalar(F));
        Tensor3<Zp> u(3, c);
        CHECK(permute(u, Permutation::identity(3)) == u);
        for (const auto& s : all_s3())
            for (const auto& t : all_s3()) CHECK(permute(permute(u, s), t) == permute(u, t.compose(s)));
    }
}

TEST_CASE("outer products and index maps", "[tensor]") {
    auto t = outer(e(3, 1), e(3, 2));
    CHECK(t.coords()[1 * 3 + 2] == Q.one());
    auto t3 = outer(e(3, 2), outer(e(3, 0), e(3, 1)));
    CHECK(t3.coords()[(2 * 3 + 0) * 3 + 1] == Q.one());
    CHECK(outer(t, e(3, 0)) == outer(e(3, 1), outer(e(3, 2), e(3, 0))));
}

TEST_CASE("sleeve examples", "[tensor]") {
    CHECK(sleeve(Subspace<Rational>::zero(Q, 2)).is_zero());
    CHECK(sleeve(Subspace<Rational>::full(Q, 2)).is_full());
    auto s = sleeve(Subspace<Rational>::span(Q, 2, {e(2, 0)}));
    CHECK(s.dim() == 3);
    CHECK(s.contains(outer(e(2, 0), e(2, 1)).coords()));
    CHECK(!s.contains(outer(e(2, 1), e(2, 1)).coords()));
}

TEST_CASE("sleeve dimension and monotonicity over GF(2)", "[tensor][property]") {
    PrimeField F(2);
    const std::size_t n = 3;
    std::vector<Subspace<Zp>> all;
    for (std::size_t d = 0; d <= n; ++d)
        enumerate_subspaces<Zp>(F, n, d, [&](const Subspace<Zp>& W) {
            all.push_back(W);
            return true;
        });
    for (const auto& I : all) {
        const std::size_t k = I.dim();
        CHECK(sleeve(I).dim() == 2 * k * n - k * k);
    }
    for (const auto& I : all)
        for (const auto& J : all)
            if (J.contains(I)) CHECK(sleeve(J).contains(sleeve(I)));
}
