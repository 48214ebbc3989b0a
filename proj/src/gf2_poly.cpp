#include "qf/gf2_poly.hpp"

#include <algorithm>
#include <bit>

#include "qf/error.hpp"

namespace qf {

Gf2Poly Gf2Poly::from_coeffs(const std::vector<std::uint64_t>& coeffs) {
  Gf2Poly f;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] & 1) f.set_coeff(static_cast<int>(i));
  }
  return f;
}

Gf2Poly Gf2Poly::monomial(int exponent) {
  Gf2Poly f;
  f.set_coeff(exponent);
  return f;
}

int Gf2Poly::degree() const {
  if (words_.empty()) return -1;
  return static_cast<int>(words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
}

bool Gf2Poly::coeff(int i) const {
  const auto w = static_cast<std::size_t>(i / 64);
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1) != 0;
}

std::vector<std::uint64_t> Gf2Poly::coeffs() const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(degree() + 1));
  for (int i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(i)] = coeff(i) ? 1 : 0;
  return out;
}

bool Gf2Poly::is_even() const {
  constexpr std::uint64_t kOddBits = 0xAAAAAAAAAAAAAAAAull;
  return std::none_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w & kOddBits; });
}

Gf2Poly Gf2Poly::halve_exponents() const {
  ensure(is_even(), "halve_exponents requires even exponents only");
  Gf2Poly out;
  for (int i = 0; i <= degree(); i += 2) {
    if (coeff(i)) out.set_coeff(i / 2);
  }
  return out;
}

void Gf2Poly::set_coeff(int i) {
  const auto w = static_cast<std::size_t>(i / 64);
  if (words_.size() <= w) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (i % 64);
}

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out;
  out.words_.resize(std::max(a.words_.size(), b.words_.size()), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) out.words_[i] ^= a.words_[i];
  for (std::size_t i = 0; i < b.words_.size(); ++i) out.words_[i] ^= b.words_[i];
  out.trim();
  return out;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (int i = 0; i <= a.degree(); ++i) {
    if (!a.coeff(i)) continue;
    // out ^= b << i
    const std::size_t word_shift = static_cast<std::size_t>(i / 64);
    const int bit_shift = i % 64;
    for (std::size_t j = 0; j < b.words_.size(); ++j) {
      out.words_[j + word_shift] ^= b.words_[j] << bit_shift;
      if (bit_shift != 0) out.words_[j + word_shift + 1] ^= b.words_[j] >> (64 - bit_shift);
    }
  }
  out.trim();
  return out;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  Gf2Poly quot;
  Gf2Poly rem = *this;
  const int d = divisor.degree();
  while (rem.degree() >= d) {
    const int shift = rem.degree() - d;
    quot.set_coeff(shift);
    rem = rem + divisor * monomial(shift);
  }
  return {quot, rem};
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace qf
