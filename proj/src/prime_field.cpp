#include "qf/prime_field.hpp"

#include <cctype>

#include "qf/error.hpp"
#include "qf/integer.hpp"
#include "text_util.hpp"
#include "tonelli_shanks.hpp"

namespace qf {

namespace {

void check_same(const PrimeElement& a, const PrimeElement& b) {
  if (a.modulus() != b.modulus()) throw FieldMismatch();
}

}  // namespace

PrimeElement PrimeElement::inv() const {
  if (value_ == 0) throw DivisionByZero();
  // p is prime, so a^(p-2) is the inverse.
  return PrimeElement(pow_mod(value_, p_ - 2, p_), p_);
}

PrimeElement operator+(const PrimeElement& a, const PrimeElement& b) {
  check_same(a, b);
  const std::uint64_t p = a.p_;
  const std::uint64_t gap = p - b.value_;
  return PrimeElement(a.value_ >= gap ? a.value_ - gap : a.value_ + b.value_, p);
}

PrimeElement operator-(const PrimeElement& a, const PrimeElement& b) {
  check_same(a, b);
  return PrimeElement(a.value_ >= b.value_ ? a.value_ - b.value_ : a.p_ - (b.value_ - a.value_),
                      a.p_);
}

PrimeElement operator*(const PrimeElement& a, const PrimeElement& b) {
  check_same(a, b);
  return PrimeElement(mul_mod(a.value_, b.value_, a.p_), a.p_);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
}

PrimeElement PrimeField::from_int(std::int64_t n) const {
  if (n >= 0) return {static_cast<std::uint64_t>(n), p_};
  const std::uint64_t magnitude = static_cast<std::uint64_t>(-(n + 1)) + 1;
  return -PrimeElement(magnitude, p_);
}

PrimeElement PrimeField::parse(std::string_view text) const {
  const std::string s = detail::strip_whitespace(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && s[pos] == '-') {
    negative = true;
    ++pos;
  }
  const std::size_t start = pos;
  std::uint64_t value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = static_cast<std::uint64_t>((static_cast<u128>(value) * 10 + (s[pos] - '0')) % p_);
    ++pos;
  }
  if (pos == start) throw ParseError("expected digits", pos);
  if (pos != s.size()) throw ParseError("unexpected character", pos);
  PrimeElement e(value, p_);
  return negative ? -e : e;
}

std::optional<PrimeElement> PrimeField::try_sqrt(const PrimeElement& a) const {
  if (p_ == 2) return a;
  return detail::tonelli_shanks(*this, a);
}

}  // namespace qf
