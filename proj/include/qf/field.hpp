#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qf/error.hpp"

namespace qf {

enum class FieldKind { Rationals, PrimeField, ExtensionField, RationalFunctionField };

/// Metadata describing which exact field is in play.
struct FieldDescriptor {
  FieldKind kind;
  std::uint64_t characteristic = 0;
  bool perfect = true;
  std::uint64_t p = 0;  // prime for finite fields, 0 otherwise
  int degree = 1;       // extension degree k
  /// Monic reduction polynomial, little-endian, size degree+1 (extension fields only).
  std::vector<std::uint64_t> modulus;

  bool operator==(const FieldDescriptor&) const = default;
};

/// A field object: creates, parses and renders its elements. Elements carry
/// enough context to do arithmetic through ordinary operators.
template <class F>
concept Field = requires(const F& f, const typename F::Element& a, std::string_view text) {
  typename F::Element;
  { f.descriptor() } -> std::convertible_to<FieldDescriptor>;
  { f.name() } -> std::convertible_to<std::string>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.is_perfect() } -> std::convertible_to<bool>;
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Element>;
  { f.parse(text) } -> std::same_as<typename F::Element>;
  { f.render(a) } -> std::convertible_to<std::string>;
  { f.try_sqrt(a) } -> std::same_as<std::optional<typename F::Element>>;
  { a + a } -> std::same_as<typename F::Element>;
  { a - a } -> std::same_as<typename F::Element>;
  { a * a } -> std::same_as<typename F::Element>;
  { a / a } -> std::same_as<typename F::Element>;
  { -a } -> std::same_as<typename F::Element>;
  { a == a } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inv() } -> std::same_as<typename F::Element>;
};

/// Finite fields additionally expose a canonical element order.
template <class F>
concept FiniteField = Field<F> && requires(const F& f, const typename F::Element& a) {
  { f.order() } -> std::convertible_to<std::uint64_t>;
  { f.element_at(std::uint64_t{}) } -> std::same_as<typename F::Element>;
  { f.index_of(a) } -> std::convertible_to<std::uint64_t>;
};

template <class F>
using ElementOf = typename F::Element;

/// a^exp by repeated squaring.
template <class E>
E pow(E base, std::uint64_t exp, E one) {
  E result = std::move(one);
  while (exp != 0) {
    if (exp & 1) result = result * base;
    exp >>= 1;
    if (exp != 0) base = base * base;
  }
  return result;
}

/// Square root, or NotASquare carrying the rendered element.
template <Field F>
ElementOf<F> sqrt(const F& field, const ElementOf<F>& a) {
  if (auto root = field.try_sqrt(a)) return *std::move(root);
  throw NotASquare(field.render(a));
}

template <Field F>
bool is_square(const F& field, const ElementOf<F>& a) {
  return field.try_sqrt(a).has_value();
}

/// a^characteristic. Throws CharZero over the rationals.
template <Field F>
ElementOf<F> frobenius(const F& field, const ElementOf<F>& a) {
  const std::uint64_t c = field.characteristic();
  if (c == 0) throw CharZero();
  if (c == 2) return a * a;
  return pow(a, c, field.one());
}

}  // namespace qf
