#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qf {

/// Polynomial over GF(2), bit i of the packed words is the coefficient of x^i.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  /// Builds from little-endian 0/1 coefficients (other values are reduced mod 2).
  static Gf2Poly from_coeffs(const std::vector<std::uint64_t>& coeffs);
  static Gf2Poly monomial(int exponent);
  static Gf2Poly one() { return monomial(0); }

  int degree() const;  // -1 for zero
  bool is_zero() const { return words_.empty(); }
  bool coeff(int i) const;
  std::vector<std::uint64_t> coeffs() const;

  /// True iff only even exponents occur, i.e. the polynomial lies in GF(2)[x^2].
  bool is_even() const;
  /// For f = sum c_i x^(2i), returns sum c_i x^i. Requires is_even().
  Gf2Poly halve_exponents() const;

  friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& divisor) const;
  static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

 private:
  void set_coeff(int i);
  void trim();

  std::vector<std::uint64_t> words_;
};

}  // namespace qf
