#pragma once

#include <string>
#include <string_view>

#include "qf/field.hpp"

namespace qf {

/// 2x2 matrix over an exact field, row-major [[e11, e12], [e21, e22]].
template <class E>
struct Mat2 {
  E e11, e12, e21, e22;

  bool operator==(const Mat2&) const = default;
};

template <Field F>
Mat2<ElementOf<F>> zero_matrix(const F& f) {
  return {f.zero(), f.zero(), f.zero(), f.zero()};
}

template <Field F>
Mat2<ElementOf<F>> identity_matrix(const F& f) {
  return {f.one(), f.zero(), f.zero(), f.one()};
}

template <Field F>
Mat2<ElementOf<F>> scalar_matrix(const F& f, const ElementOf<F>& c) {
  return {c, f.zero(), f.zero(), c};
}

template <class E>
bool is_zero(const Mat2<E>& m) {
  return m.e11.is_zero() && m.e12.is_zero() && m.e21.is_zero() && m.e22.is_zero();
}

template <class E>
Mat2<E> operator+(const Mat2<E>& a, const Mat2<E>& b) {
  return {a.e11 + b.e11, a.e12 + b.e12, a.e21 + b.e21, a.e22 + b.e22};
}

template <class E>
Mat2<E> operator-(const Mat2<E>& a, const Mat2<E>& b) {
  return {a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
}

template <class E>
Mat2<E> operator-(const Mat2<E>& a) {
  return {-a.e11, -a.e12, -a.e21, -a.e22};
}

template <class E>
Mat2<E> operator*(const Mat2<E>& a, const Mat2<E>& b) {
  return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
          a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
}

template <class E>
Mat2<E> operator*(const E& c, const Mat2<E>& m) {
  return {c * m.e11, c * m.e12, c * m.e21, c * m.e22};
}

/// X^2 = [[x^2 + yz, y(x + w)], [z(x + w), yz + w^2]].
template <class E>
Mat2<E> mat_square(const Mat2<E>& m) {
  const E yz = m.e12 * m.e21;
  const E trace = m.e11 + m.e22;
  return {m.e11 * m.e11 + yz, m.e12 * trace, m.e21 * trace, yz + m.e22 * m.e22};
}

template <class E>
E trace(const Mat2<E>& m) {
  return m.e11 + m.e22;
}

template <class E>
E det(const Mat2<E>& m) {
  return m.e11 * m.e22 - m.e12 * m.e21;
}

template <class E>
Mat2<E> transpose(const Mat2<E>& m) {
  return {m.e11, m.e21, m.e12, m.e22};
}

/// Renders as `[[e11,e12],[e21,e22]]`, the same grammar parse_matrix accepts.
template <Field F>
std::string render_matrix(const F& f, const Mat2<ElementOf<F>>& m) {
  return "[[" + f.render(m.e11) + "," + f.render(m.e12) + "],[" + f.render(m.e21) + "," +
         f.render(m.e22) + "]]";
}

namespace detail {

/// Splits `[[a,b],[c,d]]` into its four entry strings and their offsets.
struct MatrixTokens {
  std::string entries[4];
  std::size_t offsets[4];
};
MatrixTokens split_matrix(std::string_view text);

}  // namespace detail

/// Parses `[[e,e],[e,e]]` with entries in the field's element grammar.
template <Field F>
Mat2<ElementOf<F>> parse_matrix(const F& f, std::string_view text) {
  const detail::MatrixTokens tokens = detail::split_matrix(text);
  auto entry = [&](int i) -> ElementOf<F> {
    try {
      return f.parse(tokens.entries[i]);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (matrix entry " + std::to_string(i + 1) + ")",
                       tokens.offsets[i] + e.position());
    }
  };
  return {entry(0), entry(1), entry(2), entry(3)};
}

}  // namespace qf
