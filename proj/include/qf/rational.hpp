#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qf/field.hpp"

namespace qf {

/// Exact rational number, always a reduced fraction with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  explicit Rational(std::int64_t n) : num_(static_cast<long>(n)), den_(1) {}
  Rational(mpz_class num, mpz_class den);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  Rational inv() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  struct Reduced {};
  Rational(mpz_class num, mpz_class den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  mpz_class num_;
  mpz_class den_;
};

class RationalField {
 public:
  using Element = Rational;

  FieldDescriptor descriptor() const { return {FieldKind::Rationals, 0, true, 0, 1, {}}; }
  std::string name() const { return "Q"; }
  std::uint64_t characteristic() const { return 0; }
  bool is_perfect() const { return true; }

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const { return Rational(n); }

  /// Grammar: `[-]digits[/digits]`, whitespace ignored.
  Rational parse(std::string_view text) const;
  std::string render(const Rational& a) const { return a.to_string(); }

  /// Succeeds iff numerator and denominator are perfect squares.
  std::optional<Rational> try_sqrt(const Rational& a) const;

  bool operator==(const RationalField&) const = default;
};

}  // namespace qf
