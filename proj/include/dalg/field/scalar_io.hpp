#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "dalg/error.hpp"
#include "dalg/field/ratfunc.hpp"
#include "dalg/field/rational.hpp"
#include "dalg/field/zp.hpp"

namespace dalg {

/// Run-time choice of base field, as named in files and on the command line.
using AnyField = std::variant<RationalField, PrimeField, RationalFunctionField>;

namespace detail {

inline std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

/// True if s[0] == '(' closes exactly at the last character.
inline bool wrapped_in_parens(std::string_view s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && i + 1 < s.size()) return false;
    }
    return true;
}

inline std::string_view unwrap(std::string_view s) {
    while (wrapped_in_parens(s)) s = s.substr(1, s.size() - 2);
    return s;
}

inline long long parse_int(std::string_view s) {
    if (s.empty()) throw parse_error("expected an integer");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw parse_error("expected digits in '" + std::string(s) + "'");
    long long v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("bad integer '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
        if (v > (1ll << 62)) throw parse_error("integer too large: '" + std::string(s) + "'");
    }
    return neg ? -v : v;
}

/// Polynomial in t with integer coefficients reduced mod p, spaces removed.
inline FpPoly parse_fp_poly(std::string_view s, std::uint32_t p) {
    s = unwrap(s);
    if (s.empty()) throw parse_error("empty polynomial");
    FpPoly acc(p);
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string_view term = s.substr(i, j - i);
        if (term.empty()) throw parse_error("empty term in polynomial '" + std::string(s) + "'");
        long long coef = 1;
        std::size_t degree = 0;
        auto tpos = term.find('t');
        if (tpos == std::string_view::npos) {
            coef = parse_int(term);
        } else {
            std::string_view c = term.substr(0, tpos);
            if (!c.empty() && c.back() == '*') c.remove_suffix(1);
            if (!c.empty()) coef = parse_int(c);
            std::string_view rest = term.substr(tpos + 1);
            degree = 1;
            if (!rest.empty()) {
                if (rest.front() != '^') throw parse_error("bad monomial '" + std::string(term) + "'");
                degree = static_cast<std::size_t>(parse_int(rest.substr(1)));
            }
        }
        long long c = (sign * coef) % static_cast<long long>(p);
        if (c < 0) c += p;
        acc = acc + FpPoly::monomial(p, static_cast<std::uint32_t>(c), degree);
        i = j;
    }
    return acc;
}

/// Index of the top-level '/' in s, or npos.
inline std::size_t top_level_slash(std::string_view s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == '/' && depth == 0) return i;
    }
    return std::string_view::npos;
}

}  // namespace detail

/// `Q`, `GF(p)`, or `GF(p)(t)`.
inline AnyField parse_field_tag(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    if (s == "Q") return RationalField{};
    if (s.rfind("GF(", 0) == 0) {
        auto close = s.find(')');
        if (close == std::string::npos) throw parse_error("bad field tag '" + s + "'");
        long long p = detail::parse_int(std::string_view(s).substr(3, close - 3));
        if (p <= 0 || !PrimeField::is_prime(static_cast<std::uint64_t>(p)))
            throw parse_error("field characteristic must be prime: '" + s + "'");
        std::string rest = s.substr(close + 1);
        if (rest.empty()) return PrimeField(static_cast<std::uint32_t>(p));
        if (rest == "(t)") return RationalFunctionField(static_cast<std::uint32_t>(p));
    }
    throw parse_error("unknown field tag '" + std::string(text) + "'");
}

inline std::string field_tag(const AnyField& f) {
    return std::visit([](const auto& x) { return x.tag(); }, f);
}

inline Rational parse_scalar(const RationalField&, std::string_view text) {
    std::string s = detail::strip_spaces(text);
    std::string_view v = detail::unwrap(s);
    auto slash = v.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(mpq_class(mpz_class(std::string(v))));
        mpz_class num(std::string(v.substr(0, slash)));
        mpz_class den(std::string(v.substr(slash + 1)));
        if (den == 0) throw division_by_zero();
        return Rational(mpq_class(num, den));
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational '" + std::string(text) + "'");
    }
}

inline Zp parse_scalar(const PrimeField& f, std::string_view text) {
    std::string s = detail::trim(text);
    auto pos = s.find("mod");
    if (pos == std::string::npos) return f.from_int(detail::parse_int(detail::unwrap(detail::strip_spaces(s))));
    long long a = detail::parse_int(detail::strip_spaces(s.substr(0, pos)));
    long long p = detail::parse_int(detail::strip_spaces(s.substr(pos + 3)));
    if (p != static_cast<long long>(f.modulus()))
        throw parse_error("scalar '" + s + "' is not in " + f.tag());
    return f.from_int(a);
}

inline RatFunc parse_scalar(const RationalFunctionField& f, std::string_view text) {
    std::string s = detail::strip_spaces(text);
    std::string_view v = detail::unwrap(s);
    auto slash = detail::top_level_slash(v);
    if (slash == std::string_view::npos) return RatFunc(detail::parse_fp_poly(v, f.modulus()));
    return RatFunc(detail::parse_fp_poly(v.substr(0, slash), f.modulus()),
                   detail::parse_fp_poly(v.substr(slash + 1), f.modulus()));
}

}  // namespace dalg
