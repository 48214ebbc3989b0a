#include "qf/universality.hpp"

#include <cctype>

#include "qf/error.hpp"
#include "text_util.hpp"

namespace qf {

std::string to_string(Universality status) {
  switch (status) {
    case Universality::Universal:
      return "Universal";
    case Universality::NotUniversal:
      return "NotUniversal";
    case Universality::Undecided:
      return "Undecided";
  }
  return "?";
}

IntCoeffForm parse_int_form(std::string_view text) {
  const std::string s = detail::strip_whitespace(text);
  IntCoeffForm form;
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected an integer", pos);
    std::string token = s.substr(start, pos - start);
    if (token.front() == '+') token.erase(0, 1);
    form.coeffs.emplace_back(token, 10);
    if (pos == s.size()) break;
    if (s[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return form;
}

bool lee_universal_over_m2z(const IntCoeffForm& form) {
  const auto& a = form.coeffs;
  const std::size_t m = a.size();

  std::size_t not_multiple_of_four = 0;
  for (const auto& c : a) {
    if (mpz_divisible_ui_p(c.get_mpz_t(), 4) == 0) ++not_multiple_of_four;
  }
  if (not_multiple_of_four < 3) return false;

  // prefix[i] = gcd(a_0..a_{i-1}), suffix[i] = gcd(a_i..a_{m-1}); gcd of nothing is 0.
  std::vector<mpz_class> prefix(m + 1, 0), suffix(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    mpz_gcd(prefix[i + 1].get_mpz_t(), prefix[i].get_mpz_t(), a[i].get_mpz_t());
  }
  for (std::size_t i = m; i-- > 0;) {
    mpz_gcd(suffix[i].get_mpz_t(), suffix[i + 1].get_mpz_t(), a[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), prefix[i].get_mpz_t(), suffix[i + 1].get_mpz_t());
    if (g != 1) return false;
  }
  return true;
}

bool f2x_necessary_condition(const Mat2<RationalFunction>& target) {
  return is_square(RationalFunctionField{}, target.e11 + target.e22);
}

std::pair<DiagonalForm<RationalFunctionField>, Mat2<RationalFunction>> f2x_counterexample() {
  const RationalFunctionField f;
  DiagonalForm<RationalFunctionField> form(f, {f.one(), f.one()});
  Mat2<RationalFunction> target{f.x(), f.zero(), f.zero(), f.zero()};
  return {std::move(form), std::move(target)};
}

}  // namespace qf
