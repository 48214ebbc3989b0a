#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qf/field.hpp"

namespace qf {

/// Shared, immutable description of GF(p^k) = GF(p)[t] / (modulus).
struct ExtensionContext {
  std::uint64_t p;
  int degree;
  std::vector<std::uint64_t> modulus;  // monic, little-endian, size degree + 1

  bool operator==(const ExtensionContext&) const = default;
};

/// Element of GF(p^k): a polynomial in t of degree < k, stored as exactly k coefficients.
class ExtElement {
 public:
  ExtElement(std::shared_ptr<const ExtensionContext> ctx, std::vector<std::uint64_t> coeffs);

  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  const ExtensionContext& context() const { return *ctx_; }
  bool is_zero() const;
  ExtElement inv() const;

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator/(const ExtElement& a, const ExtElement& b) { return a * b.inv(); }
  friend ExtElement operator-(const ExtElement& a);
  friend bool operator==(const ExtElement& a, const ExtElement& b);

 private:
  std::shared_ptr<const ExtensionContext> ctx_;
  std::vector<std::uint64_t> coeffs_;
};

/// GF(p^k), k >= 2. Moduli are validated for p <= 97 and k <= 8.
class ExtensionField {
 public:
  using Element = ExtElement;

  static constexpr std::uint64_t kMaxValidatedPrime = 97;
  static constexpr int kMaxValidatedDegree = 8;

  /// Uses the built-in default modulus for q in {4, 8, 9, 16, 25, 27, 32}.
  ExtensionField(std::uint64_t p, int degree);
  /// `modulus` is little-endian; it must be monic, of the given degree and irreducible.
  ExtensionField(std::uint64_t p, int degree, std::vector<std::uint64_t> modulus);

  /// The default modulus for GF(p^k), if one is built in.
  static std::optional<std::vector<std::uint64_t>> default_modulus(std::uint64_t p, int degree);

  std::uint64_t prime() const { return ctx_->p; }
  int degree() const { return ctx_->degree; }
  const std::vector<std::uint64_t>& modulus() const { return ctx_->modulus; }

  FieldDescriptor descriptor() const;
  std::string name() const;
  std::uint64_t characteristic() const { return ctx_->p; }
  bool is_perfect() const { return true; }
  std::uint64_t order() const { return order_; }

  ExtElement zero() const;
  ExtElement one() const;
  ExtElement from_int(std::int64_t n) const;
  /// The generator t (the class of the indeterminate).
  ExtElement generator() const;
  ExtElement from_coeffs(std::vector<std::uint64_t> coeffs) const;

  /// Canonical order: index = sum of c_i p^i.
  ExtElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const ExtElement& a) const;

  /// Grammar: polynomial in `t`, e.g. `t^3+2*t+1`; bare integers allowed.
  ExtElement parse(std::string_view text) const;
  std::string render(const ExtElement& a) const;

  /// Total in characteristic 2 (a^(2^(k-1))); quadratic-residue search otherwise.
  std::optional<ExtElement> try_sqrt(const ExtElement& a) const;

  bool operator==(const ExtensionField& other) const { return *ctx_ == *other.ctx_; }

 private:
  std::shared_ptr<const ExtensionContext> ctx_;
  std::uint64_t order_;
};

}  // namespace qf
