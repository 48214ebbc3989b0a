#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qf/field.hpp"
#include "qf/gf2_poly.hpp"

namespace qf {

/// Element of F2(X): num/den with gcd(num, den) = 1 and den != 0.
/// Zero is 0/1. Every nonzero GF(2) polynomial is monic, so the form is unique.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Gf2Poly::one()) {}
  explicit RationalFunction(Gf2Poly num) : num_(std::move(num)), den_(Gf2Poly::one()) {}
  RationalFunction(Gf2Poly num, Gf2Poly den);

  const Gf2Poly& num() const { return num_; }
  const Gf2Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  RationalFunction inv() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + b;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inv();
  }
  friend RationalFunction operator-(const RationalFunction& a) { return a; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Gf2Poly num_;
  Gf2Poly den_;
};

/// The rational function field GF(2)(x): characteristic 2, not perfect.
class RationalFunctionField {
 public:
  using Element = RationalFunction;

  FieldDescriptor descriptor() const {
    return {FieldKind::RationalFunctionField, 2, false, 2, 1, {}};
  }
  std::string name() const { return "F2(X)"; }
  std::uint64_t characteristic() const { return 2; }
  bool is_perfect() const { return false; }

  RationalFunction zero() const { return {}; }
  RationalFunction one() const { return RationalFunction(Gf2Poly::one()); }
  RationalFunction from_int(std::int64_t n) const { return n % 2 == 0 ? zero() : one(); }
  /// The indeterminate x.
  RationalFunction x() const { return RationalFunction(Gf2Poly::monomial(1)); }

  /// Grammar: `poly` or `(poly)/(poly)` in `x`.
  RationalFunction parse(std::string_view text) const;
  std::string render(const RationalFunction& a) const;

  /// Succeeds iff numerator and denominator both lie in GF(2)[x^2].
  std::optional<RationalFunction> try_sqrt(const RationalFunction& a) const;

  bool operator==(const RationalFunctionField&) const = default;
};

}  // namespace qf
