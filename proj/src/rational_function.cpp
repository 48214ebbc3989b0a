#include "qf/rational_function.hpp"

#include "qf/error.hpp"
#include "text_util.hpp"

namespace qf {

namespace {

Gf2Poly exact_quotient(const Gf2Poly& f, const Gf2Poly& g) {
  auto [q, r] = f.divmod(g);
  ensure(r.is_zero(), "inexact polynomial division");
  return q;
}

}  // namespace

RationalFunction::RationalFunction(Gf2Poly num, Gf2Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = Gf2Poly::one();
    return;
  }
  const Gf2Poly g = Gf2Poly::gcd(num, den);
  if (g == Gf2Poly::one()) {
    num_ = std::move(num);
    den_ = std::move(den);
  } else {
    num_ = exact_quotient(num, g);
    den_ = exact_quotient(den, g);
  }
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw DivisionByZero();
  RationalFunction out;
  out.num_ = den_;
  out.den_ = num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunctionField::parse(std::string_view text) const {
  const std::string s = detail::strip_whitespace(text);
  auto poly_at = [&](std::size_t begin, std::size_t end) {
    return Gf2Poly::from_coeffs(
        detail::parse_poly(std::string_view(s).substr(begin, end - begin), 'x', 2, begin));
  };
  if (s.empty() || s.front() != '(') return RationalFunction(poly_at(0, s.size()));

  const std::size_t close_num = s.find(')');
  if (close_num == std::string::npos) throw ParseError("missing ')'", s.size());
  Gf2Poly num = poly_at(1, close_num);
  if (close_num + 1 == s.size()) return RationalFunction(std::move(num));
  if (s.compare(close_num + 1, 2, "/(") != 0) throw ParseError("expected '/('", close_num + 1);
  const std::size_t open_den = close_num + 3;
  const std::size_t close_den = s.find(')', open_den);
  if (close_den == std::string::npos) throw ParseError("missing ')'", s.size());
  if (close_den + 1 != s.size()) throw ParseError("unexpected character", close_den + 1);
  Gf2Poly den = poly_at(open_den, close_den);
  if (den.is_zero()) throw ParseError("zero denominator", open_den);
  return RationalFunction(std::move(num), std::move(den));
}

std::string RationalFunctionField::render(const RationalFunction& a) const {
  const std::string num = detail::render_poly(a.num().coeffs(), 'x');
  if (a.den() == Gf2Poly::one()) return num;
  return "(" + num + ")/(" + detail::render_poly(a.den().coeffs(), 'x') + ")";
}

std::optional<RationalFunction> RationalFunctionField::try_sqrt(const RationalFunction& a) const {
  // In GF(2)[x], f^2 = f(x^2); a reduced fraction is a square iff both parts are.
  if (!a.num().is_even() || !a.den().is_even()) return std::nullopt;
  return RationalFunction(a.num().halve_exponents(), a.den().halve_exponents());
}

}  // namespace qf
