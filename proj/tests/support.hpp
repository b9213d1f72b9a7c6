#pragma once

#include <random>

#include "dalg/algebra.hpp"
#include "dalg/endv.hpp"
#include "dalg/field/ratfunc.hpp"
#include "dalg/field/rational.hpp"
#include "dalg/field/zp.hpp"

namespace testing_support {

using namespace dalg;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240601);
    return g;
}

inline long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng()); }

inline Zp random_scalar(const PrimeField& f) { return f.from_int(uniform(0, f.modulus() - 1)); }

inline Rational random_scalar(const RationalField&) {
    long long num = uniform(-5, 5);
    return Rational(num, uniform(1, 4));
}

inline RatFunc random_scalar(const RationalFunctionField& f) {
    auto poly = [&](int max_deg) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(uniform(0, max_deg + 1)));
        for (auto& x : c) x = static_cast<std::uint32_t>(uniform(0, f.modulus() - 1));
        return FpPoly(f.modulus(), c);
    };
    FpPoly den = poly(2);
    if (den.is_zero()) den = FpPoly::constant(f.modulus(), 1);
    return RatFunc(poly(2), den);
}

template <class F>
auto random_nonzero(const F& f) {
    auto x = random_scalar(f);
    while (x.is_zero()) x = random_scalar(f);
    return x;
}

template <class F>
auto random_matrix(const F& f, std::size_t r, std::size_t c) {
    using S = decltype(f.zero());
    Matrix<S> m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f);
    return m;
}

template <class F>
auto random_vector(const F& f, std::size_t n) {
    using S = decltype(f.zero());
    Vector<S> v(n, f.zero());
    for (auto& x : v) x = random_scalar(f);
    return v;
}

template <class F>
auto random_operator(const F& f, std::size_t n) {
    using S = decltype(f.zero());
    return EndOperator<S>(n, random_matrix(f, n * n, n * n));
}

template <class F>
auto random_algebra(const F& f, std::size_t n) {
    using S = decltype(f.zero());
    auto table = DoubleAlgebra<S>::empty_table(f, n);
    for (auto& t : table)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) t(k, l) = random_scalar(f);
    return DoubleAlgebra<S>(f, n, std::move(table));
}

}  // namespace testing_support
