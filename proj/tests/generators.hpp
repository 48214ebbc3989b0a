#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qf/any_field.hpp"
#include "qf/mat2.hpp"

namespace qf::testing {

using Rng = std::mt19937_64;

/// Numerator and denominator magnitudes are bounded by `bound`.
inline Rational random_element(const RationalField&, Rng& rng, std::int64_t bound = 1000000) {
  std::uniform_int_distribution<std::int64_t> num(-bound, bound);
  std::uniform_int_distribution<std::int64_t> den(1, bound);
  return Rational(mpz_class(static_cast<long>(num(rng))), mpz_class(static_cast<long>(den(rng))));
}

inline PrimeElement random_element(const PrimeField& f, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
  return f.element_at(dist(rng));
}

inline ExtElement random_element(const ExtensionField& f, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
  return f.element_at(dist(rng));
}

inline Gf2Poly random_gf2_poly(Rng& rng, int max_degree) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(max_degree + 1));
  for (auto& c : coeffs) c = static_cast<std::uint64_t>(bit(rng));
  return Gf2Poly::from_coeffs(coeffs);
}

inline RationalFunction random_element(const RationalFunctionField&, Rng& rng) {
  Gf2Poly den;
  while (den.is_zero()) den = random_gf2_poly(rng, 4);
  return RationalFunction(random_gf2_poly(rng, 5), den);
}

inline RationalFunction random_nonzero(const RationalFunctionField& f, Rng& rng) {
  RationalFunction a;
  while (a.is_zero()) a = random_element(f, rng);
  return a;
}

template <class F>
ElementOf<F> random_nonzero(const F& f, Rng& rng) {
  auto a = random_element(f, rng);
  while (a.is_zero()) a = random_element(f, rng);
  return a;
}

template <class F>
Mat2<ElementOf<F>> random_matrix(const F& f, Rng& rng) {
  return {random_element(f, rng), random_element(f, rng), random_element(f, rng),
          random_element(f, rng)};
}

}  // namespace qf::testing
