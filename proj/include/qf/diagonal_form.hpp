#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qf/error.hpp"
#include "qf/field.hpp"
#include "qf/mat2.hpp"

namespace qf {

/// The diagonal quadratic form a_1 X_1^2 + ... + a_m X_m^2 over a field, m >= 1.
/// Zero coefficients are kept; they matter to the universality criterion.
template <Field F>
class DiagonalForm {
 public:
  using Element = ElementOf<F>;

  DiagonalForm(F field, std::vector<Element> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("a diagonal form needs at least one coefficient");
  }

  const F& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  std::size_t arity() const { return coeffs_.size(); }

  /// Positions of nonzero coefficients, ascending.
  std::vector<std::size_t> nonzero_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) out.push_back(i);
    }
    return out;
  }

 private:
  F field_;
  std::vector<Element> coeffs_;
};

/// Sum of a_i X_i^2. Throws ArityMismatch unless |xs| equals the form's arity.
template <Field F>
Mat2<ElementOf<F>> evaluate_form(const DiagonalForm<F>& form,
                                 std::span<const Mat2<ElementOf<F>>> xs) {
  if (xs.size() != form.arity()) throw ArityMismatch(form.arity(), xs.size());
  Mat2<ElementOf<F>> sum = zero_matrix(form.field());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sum = sum + form.coeffs()[i] * mat_square(xs[i]);
  }
  return sum;
}

/// Comma-separated coefficients in the field's element grammar.
template <Field F>
DiagonalForm<F> parse_form(const F& field, std::string_view text) {
  std::vector<ElementOf<F>> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    try {
      coeffs.push_back(field.parse(piece));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (coefficient " +
                           std::to_string(coeffs.size() + 1) + ")",
                       start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DiagonalForm<F>(field, std::move(coeffs));
}

template <Field F>
std::string render_form(const DiagonalForm<F>& form) {
  std::string out;
  for (std::size_t i = 0; i < form.arity(); ++i) {
    if (i != 0) out += ',';
    out += form.field().render(form.coeffs()[i]);
  }
  return out;
}

}  // namespace qf
