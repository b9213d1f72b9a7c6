#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "dalg/error.hpp"

namespace dalg {

class Rational;

/// The field Q of rational numbers.
class RationalField {
public:
    using scalar_type = Rational;
    static constexpr bool is_finite = false;

    std::uint64_t characteristic() const { return 0; }
    std::string tag() const { return "Q"; }

    Rational zero() const;
    Rational one() const;
    Rational from_int(long long k) const;

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    using field_type = RationalField;

    Rational() = default;
    Rational(long long num) : q_(static_cast<long>(num)) {}
    Rational(long long num, long long den) {
        if (den == 0) throw division_by_zero();
        q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    RationalField field() const { return {}; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw division_by_zero();
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero();
        return Rational(mpq_class(1 / q_));
    }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    /// Text form `a/b` or `a`.
    std::string to_string() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

inline Rational RationalField::zero() const { return Rational(0); }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::from_int(long long k) const { return Rational(k); }

}  // namespace dalg
