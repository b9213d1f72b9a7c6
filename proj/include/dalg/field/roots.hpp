#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dalg/error.hpp"
#include "dalg/field/fp_poly.hpp"
#include "dalg/field/ratfunc.hpp"
#include "dalg/field/rational.hpp"
#include "dalg/field/unipoly.hpp"
#include "dalg/field/zp.hpp"

namespace dalg {

struct RootOptions {
    /// Polynomials above this degree are refused.
    std::size_t max_degree = 16;
    /// Largest |integer| factored by trial division over Q.
    double max_integer = 1e12;
    /// Upper bound on candidate roots tested.
    std::size_t max_candidates = 1'000'000;
};

namespace detail {

template <FieldScalar S>
void check_root_preconditions(const UniPoly<S>& f, const RootOptions& opt) {
    if (f.is_zero()) throw invalid_argument("roots of the zero polynomial are undefined");
    if (f.degree() > static_cast<int>(opt.max_degree))
        throw cap_exceeded("root finding degree cap exceeded (degree " + std::to_string(f.degree()) + ")");
}

/// Number of leading zero coefficients, i.e. the multiplicity of 0 as a root.
template <class Coeffs>
std::size_t low_zero_count(const Coeffs& c) {
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    return k;
}

inline std::vector<mpz_class> positive_divisors(mpz_class a, const RootOptions& opt) {
    a = abs(a);
    if (a.get_d() > opt.max_integer) throw cap_exceeded("integer too large to factor: " + a.get_str());
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

template <FieldScalar S>
void add_if_root(const UniPoly<S>& f, const S& r, std::vector<S>& out) {
    if (!f.evaluate(r).is_zero()) return;
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
}

}  // namespace detail

/// Roots over GF(p) by trying every residue.
inline std::vector<Zp> roots_in_field(const UniPoly<Zp>& f, const RootOptions& opt = {}) {
    detail::check_root_preconditions(f, opt);
    const PrimeField& k = f.field();
    std::vector<Zp> out;
    for (std::uint64_t i = 0; i < k.order(); ++i) detail::add_if_root(f, k.element(i), out);
    return out;
}

/// Rational roots via the rational root theorem on the integer form of f.
inline std::vector<Rational> roots_in_field(const UniPoly<Rational>& f, const RootOptions& opt = {}) {
    detail::check_root_preconditions(f, opt);
    mpz_class lcm_den = 1;
    for (const auto& c : f.coeffs()) lcm_den = lcm(lcm_den, c.denominator());
    std::vector<mpz_class> ints;
    for (const auto& c : f.coeffs()) ints.push_back(mpz_class(c.value() * lcm_den));

    std::vector<Rational> out;
    std::size_t zeros = detail::low_zero_count(ints);
    if (zeros > 0) out.push_back(Rational(0));
    mpz_class trailing = ints[zeros], leading = ints.back();
    auto ps = detail::positive_divisors(trailing, opt);
    auto qs = detail::positive_divisors(leading, opt);
    if (2 * ps.size() * qs.size() > opt.max_candidates) throw cap_exceeded("too many rational root candidates");
    for (const auto& p : ps)
        for (const auto& q : qs)
            for (int sign : {1, -1}) detail::add_if_root(f, Rational(mpq_class(mpz_class(sign * p), q)), out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Roots over GF(p)(t): clear denominators into GF(p)[t][x], then test
/// c * d0 / d1 for units c, monic d0 | trailing coefficient, monic d1 |
/// leading coefficient.
inline std::vector<RatFunc> roots_in_field(const UniPoly<RatFunc>& f, const RootOptions& opt = {}) {
    detail::check_root_preconditions(f, opt);
    const std::uint32_t p = f.field().modulus();
    FpPoly lcm_den = FpPoly::constant(p, 1);
    for (const auto& c : f.coeffs()) {
        const FpPoly& d = c.denominator();
        lcm_den = (lcm_den * d).divmod(gcd(lcm_den, d)).first;
    }
    std::vector<FpPoly> polys;
    for (const auto& c : f.coeffs()) polys.push_back((c.numerator() * lcm_den).divmod(c.denominator()).first);

    std::vector<RatFunc> out;
    std::size_t zeros = 0;
    while (polys[zeros].is_zero()) ++zeros;
    if (zeros > 0) out.push_back(f.field().zero());
    auto d0s = monic_divisors(polys[zeros], opt.max_degree);
    auto d1s = monic_divisors(polys.back(), opt.max_degree);
    if (static_cast<double>(d0s.size()) * d1s.size() * (p - 1) > static_cast<double>(opt.max_candidates))
        throw cap_exceeded("too many GF(p)(t) root candidates");
    for (const auto& d0 : d0s)
        for (const auto& d1 : d1s)
            for (std::uint32_t c = 1; c < p; ++c) detail::add_if_root(f, RatFunc(d0.scaled(c), d1), out);
    return out;
}

}  // namespace dalg
