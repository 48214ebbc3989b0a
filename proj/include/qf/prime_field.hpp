#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qf/field.hpp"

namespace qf {

/// Residue in [0, p).
class PrimeElement {
 public:
  PrimeElement(std::uint64_t value, std::uint64_t p) : value_(value % p), p_(p) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }
  PrimeElement inv() const;

  friend PrimeElement operator+(const PrimeElement& a, const PrimeElement& b);
  friend PrimeElement operator-(const PrimeElement& a, const PrimeElement& b);
  friend PrimeElement operator*(const PrimeElement& a, const PrimeElement& b);
  friend PrimeElement operator/(const PrimeElement& a, const PrimeElement& b) {
    return a * b.inv();
  }
  friend PrimeElement operator-(const PrimeElement& a) {
    return PrimeElement(a.value_ == 0 ? 0 : a.p_ - a.value_, a.p_);
  }
  friend bool operator==(const PrimeElement&, const PrimeElement&) = default;

 private:
  std::uint64_t value_;
  std::uint64_t p_;
};

/// GF(p) for a 64-bit prime p.
class PrimeField {
 public:
  using Element = PrimeElement;

  /// Throws InvalidField unless p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  FieldDescriptor descriptor() const { return {FieldKind::PrimeField, p_, true, p_, 1, {}}; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::uint64_t characteristic() const { return p_; }
  bool is_perfect() const { return true; }
  std::uint64_t order() const { return p_; }

  PrimeElement zero() const { return {0, p_}; }
  PrimeElement one() const { return {1, p_}; }
  PrimeElement from_int(std::int64_t n) const;
  PrimeElement element_at(std::uint64_t index) const { return {index, p_}; }
  std::uint64_t index_of(const PrimeElement& a) const { return a.value(); }

  /// Grammar: `[-]digits`; reduced mod p.
  PrimeElement parse(std::string_view text) const;
  std::string render(const PrimeElement& a) const { return std::to_string(a.value()); }

  std::optional<PrimeElement> try_sqrt(const PrimeElement& a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

}  // namespace qf
