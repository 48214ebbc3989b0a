#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qf::gfp_poly {

/// Dense polynomial over GF(p), little-endian, trimmed (no trailing zeros; zero is empty).
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly add(const Poly& f, const Poly& g, std::uint64_t p);
Poly sub(const Poly& f, const Poly& g, std::uint64_t p);
Poly mul(const Poly& f, const Poly& g, std::uint64_t p);

/// Quotient and remainder; g must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p);
Poly mod(const Poly& f, const Poly& g, std::uint64_t p);

/// Monic gcd (zero if both are zero).
Poly gcd(Poly f, Poly g, std::uint64_t p);

/// base^exp mod m.
Poly pow_mod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p);

/// Irreducibility test (Ben-Or): f of degree k is irreducible over GF(p) iff
/// gcd(x^(p^i) - x, f) = 1 for every 1 <= i <= k/2.
bool is_irreducible(const Poly& f, std::uint64_t p);

}  // namespace qf::gfp_poly
