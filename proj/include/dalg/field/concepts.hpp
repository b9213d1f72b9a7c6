#pragma once

#include <concepts>
#include <cstdint>
#include <string>

namespace dalg {

/// Descriptor of a base field: produces constants and names itself.
template <class F>
concept FieldDescriptor = std::equality_comparable<F> && requires(const F& f, long long k) {
    typename F::scalar_type;
    { f.zero() } -> std::same_as<typename F::scalar_type>;
    { f.one() } -> std::same_as<typename F::scalar_type>;
    { f.from_int(k) } -> std::same_as<typename F::scalar_type>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.tag() } -> std::convertible_to<std::string>;
    { F::is_finite } -> std::convertible_to<bool>;
};

/// An exact element of a field. Every value knows its field, so mixing
/// elements of different fields is detected at run time.
template <class S>
concept FieldScalar = std::equality_comparable<S> && requires(const S& a, const S& b) {
    typename S::field_type;
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { a / b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a.inverse() } -> std::same_as<S>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.field() } -> std::convertible_to<typename S::field_type>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

/// Fields with finitely many elements can be enumerated.
template <class F>
concept FiniteFieldDescriptor = FieldDescriptor<F> && F::is_finite && requires(const F& f, std::uint64_t i) {
    { f.order() } -> std::convertible_to<std::uint64_t>;
    { f.element(i) } -> std::same_as<typename F::scalar_type>;
};

template <FieldScalar S>
using field_of = typename S::field_type;

}  // namespace dalg
