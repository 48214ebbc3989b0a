#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qf/diagonal_form.hpp"
#include "qf/field.hpp"
#include "qf/mat2.hpp"
#include "qf/oracle.hpp"
#include "qf/rational_function.hpp"
#include "qf/solver.hpp"

namespace qf {

enum class Universality { Universal, NotUniversal, Undecided };

std::string to_string(Universality status);

template <class E>
struct UniversalityVerdict {
  Universality status;
  /// Present whenever status is NotUniversal.
  std::optional<Mat2<E>> witness;
  /// Machine-readable tag.
  std::string reason;
};

namespace reason {
inline constexpr const char* kTwoNonzero = "two-nonzero-coefficients";
inline constexpr const char* kFewerThanTwo = "fewer-than-two-nonzero-coefficients";
inline constexpr const char* kNonPerfect = "non-perfect-field";
}  // namespace reason

/// Over a perfect field the form is universal over M_2(F) exactly when at least two
/// coefficients are nonzero. Over a non-perfect field a form with two nonzero
/// coefficients is reported Undecided.
template <Field F>
UniversalityVerdict<ElementOf<F>> is_universal_over_m2(const DiagonalForm<F>& form) {
  const F& f = form.field();
  if (form.nonzero_indices().size() < 2) {
    return {Universality::NotUniversal, nilpotent_witness(f), reason::kFewerThanTwo};
  }
  if (!f.is_perfect()) return {Universality::Undecided, std::nullopt, reason::kNonPerfect};
  return {Universality::Universal, std::nullopt, reason::kTwoNonzero};
}

/// Diagonal form with integer coefficients, for universality over M_2(Z).
struct IntCoeffForm {
  std::vector<mpz_class> coeffs;
};

/// Parses comma-separated integers.
IntCoeffForm parse_int_form(std::string_view text);

/// Universal over M_2(Z) iff no prime divides at least m-1 of the coefficients and at
/// least three coefficients are not multiples of 4. The first condition is checked as
/// gcd(all coefficients but a_i) = 1 for every i.
bool lee_universal_over_m2z(const IntCoeffForm& form);

template <class E>
struct SingleTermWitness {
  Mat2<E> target;
  std::vector<std::string> explanation;
  /// Set for finite fields of order <= 5: whether exhaustive search confirmed that no X
  /// satisfies a X^2 = target.
  std::optional<bool> oracle_confirmed;
};

/// The matrix [[0, 1], [0, 0]] that a X^2 never equals, with the argument why.
template <Field F>
SingleTermWitness<ElementOf<F>> single_term_witness(const F& f, const ElementOf<F>& a) {
  SingleTermWitness<ElementOf<F>> out{nilpotent_witness(f), {}, std::nullopt};
  if (a.is_zero()) {
    out.explanation.push_back("a = 0, so a X^2 = 0 for every X and the target is nonzero");
  } else {
    out.explanation = {
        "write X = [[x, y], [z, w]]; a X^2 = [[0, 1], [0, 0]] reads",
        "  a(x^2 + yz) = 0, a y(x + w) = 1, a z(x + w) = 0, a(yz + w^2) = 0",
        "a y(x + w) = 1 gives x + w != 0, so a z(x + w) = 0 forces z = 0",
        "with z = 0 the diagonal equations give a x^2 = 0 and a w^2 = 0, so x = w = 0",
        "then a y(x + w) = 0, contradicting a y(x + w) = 1",
    };
  }
  if constexpr (FiniteField<F>) {
    if (f.order() <= kMaxSweepOrder) {
      const SquareSet<F> squares(f, a);
      out.oracle_confirmed = !squares.contains(out.target);
      out.explanation.push_back(
          std::string("exhaustive search over all ") + std::to_string(f.order() * f.order() *
                                                                      f.order() * f.order()) +
          " matrices: " + (*out.oracle_confirmed ? "no X found" : "a solution X was found"));
    }
  }
  return out;
}

/// For X1^2 + X2^2 = A over F2(X): a solution forces (x1 + x2 + w1 + w2)^2 = p + s.
/// Returns false only when p + s is not a square, which proves A unrepresentable.
bool f2x_necessary_condition(const Mat2<RationalFunction>& target);

/// X1^2 + X2^2 over F2(X) together with [[x, 0], [0, 0]], which it does not represent.
std::pair<DiagonalForm<RationalFunctionField>, Mat2<RationalFunction>> f2x_counterexample();

}  // namespace qf
