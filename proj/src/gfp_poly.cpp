#include "qf/gfp_poly.hpp"

#include <algorithm>

#include "qf/error.hpp"
#include "qf/integer.hpp"

namespace qf::gfp_poly {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t gap = p - b;
  return a >= gap ? a - gap : a + b;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : p - (b - a);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DivisionByZero();
  return qf::pow_mod(a, p - 2, p);
}

}  // namespace

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = add_mod(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0, p);
  }
  trim(out);
  return out;
}

Poly sub(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = sub_mod(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0, p);
  }
  trim(out);
  return out;
}

Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(f[i], g[j], p), p);
    }
  }
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p) {
  if (g.empty()) throw DivisionByZero();
  Poly rem = f;
  trim(rem);
  if (rem.size() < g.size()) return {Poly{}, rem};
  Poly quot(rem.size() - g.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  for (std::size_t i = rem.size(); i-- >= g.size();) {
    const std::uint64_t c = mul_mod(rem[i], lead_inv, p);
    if (c == 0) continue;
    const std::size_t shift = i + 1 - g.size();
    quot[shift] = c;
    for (std::size_t j = 0; j < g.size(); ++j) {
      rem[shift + j] = sub_mod(rem[shift + j], mul_mod(c, g[j], p), p);
    }
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

Poly mod(const Poly& f, const Poly& g, std::uint64_t p) { return divmod(f, g, p).second; }

Poly gcd(Poly f, Poly g, std::uint64_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (f.empty()) return f;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  for (auto& c : f) c = mul_mod(c, lead_inv, p);
  return f;
}

Poly pow_mod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p) {
  Poly result = mod(Poly{1}, m, p);
  base = mod(base, m, p);
  while (exp != 0) {
    if (exp & 1) result = mod(mul(result, base, p), m, p);
    exp >>= 1;
    if (exp != 0) base = mod(mul(base, base, p), m, p);
  }
  return result;
}

bool is_irreducible(const Poly& f_in, std::uint64_t p) {
  Poly f = f_in;
  trim(f);
  const int k = degree(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const Poly x{0, 1};
  Poly h = mod(x, f, p);  // x^(p^i) mod f
  for (int i = 1; i <= k / 2; ++i) {
    h = pow_mod(h, p, f, p);
    const Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) != 0) return false;
  }
  return true;
}

}  // namespace qf::gfp_poly
