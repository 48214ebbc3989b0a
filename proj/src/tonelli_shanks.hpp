#pragma once

#include <cstdint>
#include <optional>

#include "qf/field.hpp"

namespace qf::detail {

/// Square root in a finite field of odd order. Of the two roots, returns the one
/// with the smaller canonical index.
template <class F>
std::optional<typename F::Element> tonelli_shanks(const F& field, const typename F::Element& a) {
  using E = typename F::Element;
  if (a.is_zero()) return a;
  const std::uint64_t q = field.order();
  const E one = field.one();
  const E minus_one = -one;
  if (!(pow(a, (q - 1) / 2, one) == one)) return std::nullopt;

  std::uint64_t t = q - 1;
  int s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  std::optional<E> non_residue;
  for (std::uint64_t i = 2; i < q; ++i) {
    E z = field.element_at(i);
    if (pow(z, (q - 1) / 2, one) == minus_one) {
      non_residue = z;
      break;
    }
  }
  E c = pow(*non_residue, t, one);
  E x = pow(a, (t + 1) / 2, one);
  E b = pow(a, t, one);
  int m = s;
  while (!(b == one)) {
    int i = 0;
    E probe = b;
    while (!(probe == one)) {
      probe = probe * probe;
      ++i;
    }
    E tmp = c;
    for (int j = 0; j < m - i - 1; ++j) tmp = tmp * tmp;
    x = x * tmp;
    c = tmp * tmp;
    b = b * c;
    m = i;
  }
  E other = -x;
  return field.index_of(other) < field.index_of(x) ? other : x;
}

}  // namespace qf::detail
