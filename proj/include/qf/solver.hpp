#pragma once

#include <utility>
#include <vector>

#include "qf/diagonal_form.hpp"
#include "qf/error.hpp"
#include "qf/field.hpp"
#include "qf/mat2.hpp"

namespace qf {

template <class E>
using MatrixPair = std::pair<Mat2<E>, Mat2<E>>;

/// Solves a1 X1^2 + a2 X2^2 = A when the characteristic is not 2.
///
/// X2 is fixed to [[0, y2], [1, 0]]. X1 is chosen so that x1 + w1 is 2 (when
/// p = s, with x1 = w1 = 1) or 1 (when p != s, with x1 - w1 = (p - s)/a1); the
/// off-diagonal entries of X1 then follow linearly and y2 absorbs what is left
/// of the diagonal.
template <Field F>
MatrixPair<ElementOf<F>> decompose_pair_odd_char(const F& f, const ElementOf<F>& a1,
                                                 const ElementOf<F>& a2,
                                                 const Mat2<ElementOf<F>>& A) {
  using E = ElementOf<F>;
  if (f.characteristic() == 2) {
    throw WrongCharacteristic("odd-characteristic solver called in characteristic 2");
  }
  if (a1.is_zero() || a2.is_zero()) throw ZeroCoefficient();

  const E& p = A.e11;
  const E& q = A.e12;
  const E& r = A.e21;
  const E& s = A.e22;
  const E zero = f.zero();
  const E one = f.one();
  const E two = one + one;

  E x1 = one;
  E w1 = one;
  if (!(p == s)) {
    const E diff = p - s;
    x1 = (diff + a1) / (two * a1);
    w1 = (a1 - diff) / (two * a1);
  }
  const E trace1 = x1 + w1;
  ensure(!trace1.is_zero(), "x1 + w1 must be nonzero");
  const E y1 = q / (a1 * trace1);
  const E z1 = r / (a1 * trace1);
  const E y2 = (s - a1 * y1 * z1 - a1 * w1 * w1) / a2;

  return {Mat2<E>{x1, y1, z1, w1}, Mat2<E>{zero, y2, one, zero}};
}

namespace detail {

// p = s and q != 0 in characteristic 2. X1 = [[x1, y1], [z1, 0]] with
// a1 x1^2 = a2, X2 = [[0, 0], [z2, 1]]; c = p + a2 is the value a1 y1 z1 must take.
template <Field F>
MatrixPair<ElementOf<F>> char2_equal_diagonal(const F& f, const ElementOf<F>& a1,
                                              const ElementOf<F>& a2,
                                              const Mat2<ElementOf<F>>& A) {
  using E = ElementOf<F>;
  const E& p = A.e11;
  const E& q = A.e12;
  const E& r = A.e21;
  const E zero = f.zero();

  const E x1 = sqrt(f, a2 / a1);
  const E c = p + a2;
  const E divisor = a1 * x1;
  ensure(!divisor.is_zero(), "a1 * x1 must be nonzero");
  const E y1 = q / divisor;
  const E z1 = c * x1 / q;
  const E z2 = r / a2 + c / q;
  return {Mat2<E>{x1, y1, z1, zero}, Mat2<E>{zero, zero, z2, f.one()}};
}

}  // namespace detail

/// Solves a1 X1^2 + a2 X2^2 = A in characteristic 2. Square roots are taken in the
/// field; over a non-perfect field they may fail, which surfaces as NotASquare.
template <Field F>
MatrixPair<ElementOf<F>> decompose_pair_char2(const F& f, const ElementOf<F>& a1,
                                              const ElementOf<F>& a2,
                                              const Mat2<ElementOf<F>>& A) {
  using E = ElementOf<F>;
  if (f.characteristic() != 2) {
    throw WrongCharacteristic("characteristic-2 solver called in characteristic " +
                              std::to_string(f.characteristic()));
  }
  if (a1.is_zero() || a2.is_zero()) throw ZeroCoefficient();

  const E& p = A.e11;
  const E& q = A.e12;
  const E& r = A.e21;
  const E& s = A.e22;
  const E zero = f.zero();

  if (!(p == s)) {
    // a1 x1^2 = p + s, w1 = x2 = w2 = 0, X2 = [[0, y2], [1, 0]].
    const E x1 = sqrt(f, (p + s) / a1);
    const E divisor = a1 * x1;
    ensure(!divisor.is_zero(), "a1 * x1 must be nonzero");
    const E y1 = q / divisor;
    const E z1 = r / divisor;
    const E y2 = (s + a1 * y1 * z1) / a2;
    return {Mat2<E>{x1, y1, z1, zero}, Mat2<E>{zero, y2, f.one(), zero}};
  }
  if (q.is_zero() && r.is_zero()) {
    return {scalar_matrix(f, sqrt(f, p / a1)), zero_matrix(f)};
  }
  if (!q.is_zero()) return detail::char2_equal_diagonal(f, a1, a2, A);

  auto [t1, t2] = detail::char2_equal_diagonal(f, a1, a2, transpose(A));
  return {transpose(t1), transpose(t2)};
}

/// A verified solution of sum a_i X_i^2 = target.
template <Field F>
class Decomposition {
 public:
  using Element = ElementOf<F>;

  /// Throws InternalError unless the matrices evaluate exactly to the target.
  Decomposition(DiagonalForm<F> form, Mat2<Element> target, std::vector<Mat2<Element>> matrices)
      : form_(std::move(form)), target_(std::move(target)), matrices_(std::move(matrices)) {
    ensure(evaluate_form(form_, std::span<const Mat2<Element>>(matrices_)) == target_,
           "decomposition does not evaluate to its target");
  }

  const DiagonalForm<F>& form() const { return form_; }
  const Mat2<Element>& target() const { return target_; }
  const std::vector<Mat2<Element>>& matrices() const { return matrices_; }

 private:
  DiagonalForm<F> form_;
  Mat2<Element> target_;
  std::vector<Mat2<Element>> matrices_;
};

/// The nilpotent matrix [[0, 1], [0, 0]], which no single term a X^2 represents.
template <Field F>
Mat2<ElementOf<F>> nilpotent_witness(const F& f) {
  return {f.zero(), f.one(), f.zero(), f.zero()};
}

/// Solves sum a_i X_i^2 = A using the two lowest-index nonzero coefficients; every
/// other slot gets the zero matrix. Forms with fewer than two nonzero coefficients
/// are refused with NotUniversalForm.
template <Field F>
Decomposition<F> decompose(const DiagonalForm<F>& form, const Mat2<ElementOf<F>>& A) {
  const F& f = form.field();
  const auto nonzero = form.nonzero_indices();
  if (nonzero.size() < 2) throw NotUniversalForm(render_matrix(f, nilpotent_witness(f)));

  const std::size_t i = nonzero[0];
  const std::size_t j = nonzero[1];
  const auto& a1 = form.coeffs()[i];
  const auto& a2 = form.coeffs()[j];
  auto [x1, x2] = f.characteristic() == 2 ? decompose_pair_char2(f, a1, a2, A)
                                          : decompose_pair_odd_char(f, a1, a2, A);

  std::vector<Mat2<ElementOf<F>>> matrices(form.arity(), zero_matrix(f));
  matrices[i] = std::move(x1);
  matrices[j] = std::move(x2);
  return Decomposition<F>(form, A, std::move(matrices));
}

}  // namespace qf
