#include "qf/rational.hpp"

#include <cctype>

#include "qf/error.hpp"
#include "text_util.hpp"

namespace qf {

Rational::Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DivisionByZero();
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (num_ < 0) return Rational(-den_, -num_, Reduced{});
  return Rational(den_, num_, Reduced{});
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational(a.num_ + b.num_, 1, Rational::Reduced{});
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational(a.num_ - b.num_, 1, Rational::Reduced{});
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, Rational::Reduced{}); }

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational RationalField::parse(std::string_view text) const {
  const std::string s = detail::strip_whitespace(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && s[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto read_digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError(std::string("expected ") + what, pos);
    return mpz_class(s.substr(start, pos - start), 10);
  };
  mpz_class num = read_digits("digits");
  mpz_class den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = read_digits("denominator digits");
    if (den == 0) throw ParseError("zero denominator", pos - 1);
  }
  if (pos != s.size()) throw ParseError("unexpected character", pos);
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

std::optional<Rational> RationalField::try_sqrt(const Rational& a) const {
  if (a.num() < 0) return std::nullopt;
  if (mpz_perfect_square_p(a.num().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(a.den().get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), a.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), a.den().get_mpz_t());
  return Rational(std::move(n), std::move(d));
}

}  // namespace qf
