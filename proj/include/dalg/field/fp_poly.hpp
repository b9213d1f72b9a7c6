#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dalg/error.hpp"

namespace dalg {

/// Dense polynomial in t over GF(p). Coefficients are stored low degree
/// first and trailing zeros are always trimmed, so the zero polynomial has
/// no coefficients at all.
class FpPoly {
public:
    explicit FpPoly(std::uint32_t p) : p_(p) {}
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= p_;
        trim();
    }

    static FpPoly constant(std::uint32_t p, long long k) {
        long long r = k % static_cast<long long>(p);
        if (r < 0) r += p;
        return FpPoly(p, {static_cast<std::uint32_t>(r)});
    }
    /// c * t^k
    static FpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t k) {
        std::vector<std::uint32_t> v(k + 1, 0);
        v[k] = c % p;
        return FpPoly(p, std::move(v));
    }

    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    FpPoly operator+(const FpPoly& o) const {
        check(o);
        std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (coeff(i) + o.coeff(i)) % p_;
        return FpPoly(p_, std::move(r));
    }
    FpPoly operator-() const {
        std::vector<std::uint32_t> r(c_);
        for (auto& x : r) x = x ? p_ - x : 0;
        return FpPoly(p_, std::move(r));
    }
    FpPoly operator-(const FpPoly& o) const { return *this + (-o); }
    FpPoly operator*(const FpPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return FpPoly(p_);
        std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p_;
        }
        std::vector<std::uint32_t> r(acc.begin(), acc.end());
        return FpPoly(p_, std::move(r));
    }
    FpPoly scaled(std::uint32_t k) const {
        std::vector<std::uint32_t> r(c_);
        for (auto& x : r) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * (k % p_) % p_);
        return FpPoly(p_, std::move(r));
    }

    /// Quotient and remainder; throws on division by zero.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const {
        check(d);
        if (d.is_zero()) throw division_by_zero();
        std::vector<std::uint32_t> rem(c_);
        if (degree() < d.degree()) return {FpPoly(p_), *this};
        std::vector<std::uint32_t> quot(c_.size() - d.c_.size() + 1, 0);
        std::uint32_t inv_lead = inverse_mod(d.lead(), p_);
        for (int i = static_cast<int>(rem.size()) - 1; i >= d.degree(); --i) {
            std::uint32_t coef = rem[i];
            if (!coef) continue;
            std::uint32_t q = static_cast<std::uint32_t>(static_cast<std::uint64_t>(coef) * inv_lead % p_);
            std::size_t shift = i - d.degree();
            quot[shift] = q;
            for (std::size_t j = 0; j < d.c_.size(); ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(q) * d.c_[j] % p_;
                rem[shift + j] = static_cast<std::uint32_t>((rem[shift + j] + p_ - sub) % p_);
            }
        }
        return {FpPoly(p_, std::move(quot)), FpPoly(p_, std::move(rem))};
    }

    FpPoly monic() const {
        if (is_zero()) return *this;
        return scaled(inverse_mod(lead(), p_));
    }

    std::uint32_t evaluate(std::uint32_t x) const {
        std::uint64_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
        return static_cast<std::uint32_t>(acc);
    }

    /// Monic gcd; gcd(0, 0) = 0.
    friend FpPoly gcd(FpPoly a, FpPoly b) {
        a.check(b);
        while (!b.is_zero()) {
            auto r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    /// Total order used for deterministic sorting only.
    bool operator<(const FpPoly& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
    }

    /// e.g. `t^2+2*t+1`; the zero polynomial prints as `0`.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            std::uint32_t c = c_[i];
            if (!c) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c);
                continue;
            }
            if (c != 1) out += std::to_string(c) + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

    static std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
        if (a % p == 0) throw division_by_zero();
        std::uint64_t result = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(result);
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const FpPoly& o) const {
        if (p_ != o.p_) throw field_mismatch();
    }

    std::uint32_t p_;
    std::vector<std::uint32_t> c_;
};

/// All monic polynomials of exact degree d over GF(p), in lexicographic
/// order of their lower coefficients.
inline std::vector<FpPoly> monic_polys_of_degree(std::uint32_t p, std::size_t d) {
    std::vector<FpPoly> out;
    std::vector<std::uint32_t> low(d, 0);
    while (true) {
        std::vector<std::uint32_t> c(low);
        c.push_back(1);
        out.emplace_back(p, std::move(c));
        std::size_t i = 0;
        while (i < d && ++low[i] == p) low[i++] = 0;
        if (i == d) break;
    }
    return out;
}

/// Factorization of a nonzero polynomial into monic irreducibles by trial
/// division (divisors up to half the degree), plus the leading constant.
/// Throws cap_exceeded above `max_degree`.
inline std::vector<std::pair<FpPoly, int>> factor_trial(const FpPoly& f, std::size_t max_degree = 16) {
    if (f.is_zero()) throw invalid_argument("cannot factor the zero polynomial");
    if (f.degree() > static_cast<int>(max_degree))
        throw cap_exceeded("GF(p)[t] factorization degree cap exceeded (degree " + std::to_string(f.degree()) + ")");
    std::vector<std::pair<FpPoly, int>> factors;
    FpPoly rest = f.monic();
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(std::max(rest.degree(), 0)); ++d) {
        for (const auto& cand : monic_polys_of_degree(f.modulus(), d)) {
            int mult = 0;
            while (rest.degree() >= static_cast<int>(d)) {
                auto [q, r] = rest.divmod(cand);
                if (!r.is_zero()) break;
                rest = q;
                ++mult;
            }
            if (mult) factors.emplace_back(cand, mult);
        }
    }
    if (rest.degree() > 0) factors.emplace_back(rest, 1);
    return factors;
}

/// Every monic divisor of a nonzero polynomial.
inline std::vector<FpPoly> monic_divisors(const FpPoly& f, std::size_t max_degree = 16) {
    std::vector<FpPoly> divs{FpPoly::constant(f.modulus(), 1)};
    for (const auto& [g, mult] : factor_trial(f, max_degree)) {
        std::vector<FpPoly> next;
        for (const auto& d : divs) {
            FpPoly power = FpPoly::constant(f.modulus(), 1);
            for (int e = 0; e <= mult; ++e) {
                next.push_back(d * power);
                power = power * g;
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace dalg
