#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "dalg/field/fp_poly.hpp"
#include "dalg/field/zp.hpp"

namespace dalg {

class RatFunc;

/// The rational function field GF(p)(t).
class RationalFunctionField {
public:
    using scalar_type = RatFunc;
    static constexpr bool is_finite = false;

    explicit RationalFunctionField(std::uint32_t p) : p_(PrimeField(p).modulus()) {}

    std::uint32_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }
    std::string tag() const { return "GF(" + std::to_string(p_) + ")(t)"; }

    RatFunc zero() const;
    RatFunc one() const;
    RatFunc from_int(long long k) const;
    /// The transcendental t.
    RatFunc t() const;

    friend bool operator==(const RationalFunctionField&, const RationalFunctionField&) = default;

private:
    std::uint32_t p_;
};

/// num/den with gcd(num, den) = 1 and den monic; zero is 0/1.
class RatFunc {
public:
    using field_type = RationalFunctionField;

    RatFunc(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    explicit RatFunc(FpPoly num) : num_(std::move(num)), den_(FpPoly::constant(num_.modulus(), 1)) {}

    const FpPoly& numerator() const { return num_; }
    const FpPoly& denominator() const { return den_; }
    std::uint32_t modulus() const { return num_.modulus(); }

    RationalFunctionField field() const { return RationalFunctionField(modulus()); }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const {
        check(o);
        if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_, canonical_tag{}); }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return RatFunc(FpPoly(modulus()));
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inverse() const {
        if (is_zero()) throw division_by_zero();
        return RatFunc(den_, num_);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// `(num)/(den)`, or just the numerator when den = 1.
    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

private:
    struct canonical_tag {};
    RatFunc(FpPoly num, FpPoly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void check(const RatFunc& o) const {
        if (modulus() != o.modulus()) throw field_mismatch();
    }
    void normalize() {
        if (num_.modulus() != den_.modulus()) throw field_mismatch();
        if (den_.is_zero()) throw division_by_zero();
        if (num_.is_zero()) {
            den_ = FpPoly::constant(modulus(), 1);
            return;
        }
        FpPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        std::uint32_t lead_inv = FpPoly::inverse_mod(den_.lead(), modulus());
        num_ = num_.scaled(lead_inv);
        den_ = den_.scaled(lead_inv);
    }

    FpPoly num_;
    FpPoly den_;
};

inline RatFunc RationalFunctionField::zero() const { return RatFunc(FpPoly(p_)); }
inline RatFunc RationalFunctionField::one() const { return RatFunc(FpPoly::constant(p_, 1)); }
inline RatFunc RationalFunctionField::from_int(long long k) const { return RatFunc(FpPoly::constant(p_, k)); }
inline RatFunc RationalFunctionField::t() const { return RatFunc(FpPoly::monomial(p_, 1, 1)); }

}  // namespace dalg
