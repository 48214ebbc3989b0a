#include "qf/integer.hpp"

namespace qf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven witness set below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Largest r with r^k <= n.
std::uint64_t integer_root(std::uint64_t n, int k) {
  if (k == 1) return n;
  auto power_at_most = [n, k](std::uint64_t r) {
    u128 acc = 1;
    for (int i = 0; i < k; ++i) {
      acc *= r;
      if (acc > n) return false;
    }
    return true;
  };
  std::uint64_t lo = 1, hi = std::uint64_t{1} << (64 / k + 1);
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (power_at_most(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  for (int k = 1; k < 64; ++k) {
    std::uint64_t r = integer_root(n, k);
    if (r < 2) break;
    u128 acc = 1;
    for (int i = 0; i < k; ++i) acc *= r;
    if (acc == n && is_prime(r)) return std::pair{r, k};
  }
  return std::nullopt;
}

}  // namespace qf
