#include "text_util.hpp"

#include <cctype>

#include "qf/error.hpp"
#include "qf/integer.hpp"

namespace qf::detail {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 16;

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::uint64_t> parse_poly(std::string_view s, char var, std::uint64_t p,
                                      std::size_t offset) {
  std::vector<std::uint64_t> coeffs;
  std::size_t pos = 0;
  if (s.empty()) throw ParseError("empty polynomial", offset);

  // Reads an unsigned decimal reduced mod `mod` (mod == 0 means no reduction, capped).
  auto read_number = [&](std::uint64_t mod) {
    std::uint64_t value = 0;
    const std::size_t start = pos;
    while (pos < s.size() && is_digit(s[pos])) {
      const std::uint64_t digit = static_cast<std::uint64_t>(s[pos] - '0');
      if (mod != 0) {
        value = static_cast<std::uint64_t>((static_cast<u128>(value) * 10 + digit) % mod);
      } else {
        value = value * 10 + digit;
        if (value > kMaxExponent) throw ParseError("exponent too large", offset + start);
      }
      ++pos;
    }
    if (start == pos) throw ParseError("expected digits", offset + pos);
    return value;
  };

  bool first = true;
  while (pos < s.size() || first) {
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", offset + pos);
    }
    first = false;
    if (pos >= s.size()) throw ParseError("expected term", offset + pos);

    std::uint64_t coeff = 1 % p;
    std::uint64_t exponent = 0;
    bool has_coeff = false;
    if (is_digit(s[pos])) {
      coeff = read_number(p);
      has_coeff = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != var) {
          throw ParseError(std::string("expected '") + var + "'", offset + pos);
        }
      }
    }
    if (pos < s.size() && s[pos] == var) {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exponent = read_number(0);
      }
    } else if (!has_coeff) {
      throw ParseError(std::string("expected digits or '") + var + "'", offset + pos);
    }
    if (negative) coeff = (p - coeff) % p;
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] = (coeffs[exponent] + coeff) % p;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::string render_poly(std::span<const std::uint64_t> coeffs, char var) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::uint64_t c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) {
      out += std::to_string(c);
      out += '*';
    }
    out += var;
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace qf::detail
