#include "qf/any_field.hpp"

#include <cctype>
#include <charconv>

#include "qf/error.hpp"
#include "qf/integer.hpp"
#include "text_util.hpp"

namespace qf {

namespace {

std::uint64_t read_u64(const std::string& s, std::size_t& pos) {
  std::uint64_t value = 0;
  const char* begin = s.data() + pos;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) throw ParseError("expected a number", pos);
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

AnyField parse_field_spec(std::string_view spec) {
  const std::string s = detail::strip_whitespace(spec);
  const std::string u = upper(s);
  if (u == "Q") return RationalField{};
  if (u == "F2(X)") return RationalFunctionField{};
  if (u.rfind("GF(", 0) != 0) {
    throw ParseError("expected Q, GF(p), GF(p^k) or F2(X)", 0);
  }

  std::size_t pos = 3;
  std::uint64_t base = read_u64(s, pos);
  int degree = 1;
  bool explicit_power = false;
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    const std::uint64_t k = read_u64(s, pos);
    if (k < 1 || k > 64) throw InvalidField("unsupported extension degree");
    degree = static_cast<int>(k);
    explicit_power = true;
  }
  if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')'", pos);
  ++pos;

  std::optional<std::vector<std::uint64_t>> modulus;
  if (pos < s.size()) {
    static constexpr std::string_view kModulusKey = ";modulus=";
    if (s.compare(pos, kModulusKey.size(), kModulusKey) != 0) {
      throw ParseError("expected ';modulus='", pos);
    }
    pos += kModulusKey.size();
    modulus = std::vector<std::uint64_t>{};  // filled once p is known
  }

  std::uint64_t p = base;
  if (!explicit_power) {
    auto pk = prime_power(base);
    if (!pk) throw InvalidField("GF(" + std::to_string(base) + "): not a prime power");
    p = pk->first;
    degree = pk->second;
  } else if (!is_prime(base)) {
    throw InvalidField(std::to_string(base) + " is not prime");
  }

  if (degree == 1) {
    if (modulus) throw InvalidField("a prime field takes no modulus");
    return PrimeField(p);
  }
  if (modulus) {
    const std::size_t start = pos;
    return ExtensionField(p, degree,
                          detail::parse_poly(std::string_view(s).substr(start), 't', p, start));
  }
  return ExtensionField(p, degree);
}

}  // namespace qf
