#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "dalg/error.hpp"

namespace dalg {

class Zp;

/// GF(p) for a prime p < 2^31.
class PrimeField {
public:
    using scalar_type = Zp;
    static constexpr bool is_finite = true;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw invalid_argument("GF(p) requires a prime p, got " + std::to_string(p));
    }

    std::uint32_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }
    std::uint64_t order() const { return p_; }
    std::string tag() const { return "GF(" + std::to_string(p_) + ")"; }

    Zp zero() const;
    Zp one() const;
    Zp from_int(long long k) const;
    /// The i-th element in the canonical order 0, 1, ..., p-1.
    Zp element(std::uint64_t i) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return p < (1ull << 31);
    }

private:
    std::uint32_t p_;
};

class Zp {
public:
    using field_type = PrimeField;

    Zp(long long value, std::uint32_t p) : v_(reduce(value, p)), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }
    bool is_zero() const { return v_ == 0; }

    Zp operator+(const Zp& o) const {
        check(o);
        std::uint32_t s = v_ + o.v_;
        return raw(s >= p_ ? s - p_ : s);
    }
    Zp operator-(const Zp& o) const {
        check(o);
        return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_);
    }
    Zp operator*(const Zp& o) const {
        check(o);
        return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_));
    }
    Zp operator/(const Zp& o) const { return *this * o.inverse(); }
    Zp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
    Zp& operator+=(const Zp& o) { return *this = *this + o; }
    Zp& operator-=(const Zp& o) { return *this = *this - o; }
    Zp& operator*=(const Zp& o) { return *this = *this * o; }

    Zp inverse() const {
        if (v_ == 0) throw division_by_zero();
        // Fermat: v^(p-2)
        std::uint64_t result = 1, base = v_, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return raw(static_cast<std::uint32_t>(result));
    }

    bool operator==(const Zp& o) const { return v_ == o.v_ && p_ == o.p_; }

    /// Text form `a mod p`.
    std::string to_string() const { return std::to_string(v_) + " mod " + std::to_string(p_); }

    friend std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.to_string(); }

private:
    struct raw_tag {};
    Zp(std::uint32_t v, std::uint32_t p, raw_tag) : v_(v), p_(p) {}
    Zp raw(std::uint32_t v) const { return Zp(v, p_, raw_tag{}); }

    void check(const Zp& o) const {
        if (p_ != o.p_) throw field_mismatch();
    }
    static std::uint32_t reduce(long long value, std::uint32_t p) {
        long long r = value % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

inline Zp PrimeField::zero() const { return Zp(0, p_); }
inline Zp PrimeField::one() const { return Zp(1, p_); }
inline Zp PrimeField::from_int(long long k) const { return Zp(k, p_); }
inline Zp PrimeField::element(std::uint64_t i) const { return Zp(static_cast<long long>(i % p_), p_); }

}  // namespace dalg
