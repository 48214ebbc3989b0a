#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qf/error.hpp"
#include "qf/field.hpp"
#include "qf/mat2.hpp"

namespace qf {

/// Largest field order for which square sets are enumerated.
inline constexpr std::uint64_t kMaxOracleOrder = 16;
/// Largest field order for the all-targets sweep.
inline constexpr std::uint64_t kMaxSweepOrder = 5;

/// Row-major base-q encoding of a matrix from the canonical indices of its entries.
/// Ascending codes enumerate matrices in lexicographic entry order.
template <FiniteField F>
std::uint32_t encode_matrix(const F& f, const Mat2<ElementOf<F>>& m) {
  const std::uint64_t q = f.order();
  return static_cast<std::uint32_t>(
      ((f.index_of(m.e11) * q + f.index_of(m.e12)) * q + f.index_of(m.e21)) * q +
      f.index_of(m.e22));
}

template <FiniteField F>
Mat2<ElementOf<F>> decode_matrix(const F& f, std::uint32_t code) {
  const std::uint64_t q = f.order();
  const std::uint64_t i22 = code % q;
  code = static_cast<std::uint32_t>(code / q);
  const std::uint64_t i21 = code % q;
  code = static_cast<std::uint32_t>(code / q);
  const std::uint64_t i12 = code % q;
  const std::uint64_t i11 = code / q;
  return {f.element_at(i11), f.element_at(i12), f.element_at(i21), f.element_at(i22)};
}

namespace detail {

template <class F>
void require_oracle_field(const F& f, std::uint64_t limit) {
  if constexpr (!FiniteField<F>) {
    throw InfiniteField();
  } else if (f.order() > limit) {
    throw FieldTooLarge("field order " + std::to_string(f.order()) + " exceeds oracle limit " +
                        std::to_string(limit));
  }
}

// Squares by the entry formula rather than through mat_square, so the oracle does
// not share the code path it checks.
template <class E>
Mat2<E> scaled_square_by_entries(const E& c, const Mat2<E>& m) {
  const E& x = m.e11;
  const E& y = m.e12;
  const E& z = m.e21;
  const E& w = m.e22;
  return {c * (x * x + y * z), c * (y * x + y * w), c * (z * x + z * w), c * (y * z + w * w)};
}

}  // namespace detail

/// The image {coeff * X^2 : X in M_2(F_q)}, built by enumerating all q^4 matrices.
template <FiniteField F>
class SquareSet {
 public:
  using Element = ElementOf<F>;
  static constexpr std::int32_t kAbsent = -1;

  SquareSet(F field, Element coeff) : field_(std::move(field)), coeff_(std::move(coeff)) {
    const std::uint64_t q = field_.order();
    const std::uint32_t total = static_cast<std::uint32_t>(q * q * q * q);
    first_root_.assign(total, kAbsent);
    for (std::uint32_t code = 0; code < total; ++code) {
      const auto square =
          detail::scaled_square_by_entries(coeff_, decode_matrix(field_, code));
      const auto value = encode_matrix(field_, square);
      if (first_root_[value] == kAbsent) {
        first_root_[value] = static_cast<std::int32_t>(code);
        members_.push_back(value);
      }
    }
    std::sort(members_.begin(), members_.end());
  }

  const F& field() const { return field_; }
  const Element& coeff() const { return coeff_; }
  /// Canonical encodings of the members, ascending.
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const Mat2<Element>& m) const { return contains_code(encode_matrix(field_, m)); }
  bool contains_code(std::uint32_t code) const { return first_root_[code] != kAbsent; }

  /// The lexicographically first X with coeff * X^2 = m.
  std::optional<Mat2<Element>> root(const Mat2<Element>& m) const {
    const std::int32_t code = first_root_[encode_matrix(field_, m)];
    if (code == kAbsent) return std::nullopt;
    return decode_matrix(field_, static_cast<std::uint32_t>(code));
  }

 private:
  F field_;
  Element coeff_;
  std::vector<std::int32_t> first_root_;
  std::vector<std::uint32_t> members_;
};

/// Throws InfiniteField or FieldTooLarge (q > 16).
template <Field F>
auto build_square_set(const F& f, const ElementOf<F>& coeff) {
  detail::require_oracle_field(f, kMaxOracleOrder);
  if constexpr (FiniteField<F>) return SquareSet<F>(f, coeff);
}

/// Meet in the middle: scans X1 in lexicographic order and looks the residual
/// A - a1 X1^2 up in the square set of a2. Returns the first witness pair.
template <FiniteField F>
std::optional<std::pair<Mat2<ElementOf<F>>, Mat2<ElementOf<F>>>> representable_two_term(
    const SquareSet<F>& second, const ElementOf<F>& a1, const Mat2<ElementOf<F>>& A) {
  const F& f = second.field();
  const std::uint64_t q = f.order();
  const auto total = static_cast<std::uint32_t>(q * q * q * q);
  for (std::uint32_t code = 0; code < total; ++code) {
    const Mat2<ElementOf<F>> x1 = decode_matrix(f, code);
    const auto residual = A - detail::scaled_square_by_entries(a1, x1);
    if (auto x2 = second.root(residual)) return std::pair{x1, *std::move(x2)};
  }
  return std::nullopt;
}

template <Field F>
std::optional<std::pair<Mat2<ElementOf<F>>, Mat2<ElementOf<F>>>> representable_two_term(
    const F& f, const ElementOf<F>& a1, const ElementOf<F>& a2, const Mat2<ElementOf<F>>& A) {
  detail::require_oracle_field(f, kMaxOracleOrder);
  if constexpr (FiniteField<F>) {
    return representable_two_term(SquareSet<F>(f, a2), a1, A);
  } else {
    return std::nullopt;
  }
}

template <class E>
struct SweepResult {
  bool all_representable = false;
  std::size_t targets = 0;
  std::size_t representable = 0;
  /// First unrepresentable target in lexicographic entry order.
  std::optional<Mat2<E>> counterexample;
};

/// Decides by exhaustion whether a1 X1^2 + a2 X2^2 represents every 2x2 matrix.
/// The representable set is the sumset of the two square sets. Requires q <= 5.
template <Field F>
SweepResult<ElementOf<F>> check_universal_exhaustive(const F& f, const ElementOf<F>& a1,
                                                     const ElementOf<F>& a2) {
  detail::require_oracle_field(f, kMaxSweepOrder);
  SweepResult<ElementOf<F>> result;
  if constexpr (FiniteField<F>) {
    const SquareSet<F> first(f, a1);
    const SquareSet<F> second(f, a2);
    const std::uint64_t q = f.order();
    const auto total = static_cast<std::uint32_t>(q * q * q * q);
    std::vector<bool> hit(total, false);
    std::vector<Mat2<ElementOf<F>>> second_members;
    second_members.reserve(second.size());
    for (auto code : second.members()) second_members.push_back(decode_matrix(f, code));
    for (auto code : first.members()) {
      const auto m1 = decode_matrix(f, code);
      for (const auto& m2 : second_members) hit[encode_matrix(f, m1 + m2)] = true;
    }
    result.targets = total;
    for (std::uint32_t code = 0; code < total; ++code) {
      if (hit[code]) {
        ++result.representable;
      } else if (!result.counterexample) {
        result.counterexample = decode_matrix(f, code);
      }
    }
    result.all_representable = result.representable == result.targets;
  }
  return result;
}

}  // namespace qf
