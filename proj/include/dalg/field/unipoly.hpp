#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dalg/error.hpp"
#include "dalg/field/concepts.hpp"

namespace dalg {

/// Univariate polynomial with coefficients in a field, low degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
template <FieldScalar S>
class UniPoly {
public:
    using field_type = field_of<S>;

    explicit UniPoly(field_type field) : field_(std::move(field)) {}
    UniPoly(field_type field, std::vector<S> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        for (const auto& x : c_)
            if (!(x.field() == field_)) throw field_mismatch();
        trim();
    }

    static UniPoly constant(const field_type& f, S c) { return UniPoly(f, {std::move(c)}); }
    /// The formal variable itself.
    static UniPoly variable(const field_type& f) { return UniPoly(f, {f.zero(), f.one()}); }

    const field_type& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    S leading() const { return c_.empty() ? field_.zero() : c_.back(); }

    S evaluate(const S& x) const {
        S acc = field_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly operator+(const UniPoly& o) const {
        check(o);
        std::vector<S> r;
        for (std::size_t i = 0; i < std::max(c_.size(), o.c_.size()); ++i) r.push_back(coeff(i) + o.coeff(i));
        return UniPoly(field_, std::move(r));
    }
    UniPoly operator-() const {
        std::vector<S> r;
        for (const auto& x : c_) r.push_back(-x);
        return UniPoly(field_, std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
    UniPoly operator*(const UniPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return UniPoly(field_);
        std::vector<S> r(c_.size() + o.c_.size() - 1, field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return UniPoly(field_, std::move(r));
    }
    UniPoly operator*(const S& k) const {
        std::vector<S> r;
        for (const auto& x : c_) r.push_back(x * k);
        return UniPoly(field_, std::move(r));
    }

    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        check(d);
        if (d.is_zero()) throw division_by_zero();
        if (degree() < d.degree()) return {UniPoly(field_), *this};
        std::vector<S> rem(c_);
        std::vector<S> quot(c_.size() - d.c_.size() + 1, field_.zero());
        S inv_lead = d.leading().inverse();
        for (int i = degree(); i >= d.degree(); --i) {
            if (rem[i].is_zero()) continue;
            S q = rem[i] * inv_lead;
            std::size_t shift = i - d.degree();
            quot[shift] = q;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] = rem[shift + j] - q * d.c_[j];
        }
        return {UniPoly(field_, std::move(quot)), UniPoly(field_, std::move(rem))};
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    bool operator==(const UniPoly& o) const { return field_ == o.field_ && c_ == o.c_; }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[i].to_string() + ")";
            if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void check(const UniPoly& o) const {
        if (!(field_ == o.field_)) throw field_mismatch();
    }

    field_type field_;
    std::vector<S> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <FieldScalar S>
UniPoly<S> poly_gcd(UniPoly<S> f, UniPoly<S> g) {
    if (!(f.field() == g.field())) throw field_mismatch();
    while (!g.is_zero()) {
        auto r = f.divmod(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

}  // namespace dalg
