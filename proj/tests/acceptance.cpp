// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "qf/any_field.hpp"
#include "qf/oracle.hpp"
#include "qf/solver.hpp"
#include "qf/universality.hpp"

namespace {

using namespace qf;
using Clock = std::chrono::steady_clock;
using testing::random_element;
using testing::random_matrix;
using testing::random_nonzero;
using testing::Rng;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << why;
    ok = false;
  }
};

#define CHECK(cond, why) \
  do {                   \
    if (!(cond)) {       \
      out.fail(why);     \
      return;            \
    }                    \
  } while (0)

// ---- 1 ----------------------------------------------------------------------

void golden_example(Outcome& out) {
  const auto start = Clock::now();
  const RationalField q;
  const DiagonalForm<RationalField> form(q, {q.from_int(2), q.from_int(1)});
  const auto target = parse_matrix(q, "[[1/5,2],[0,-1]]");
  const auto d = decompose(form, target);
  const double elapsed = seconds_since(start);

  const auto& x1 = d.matrices()[0];
  const auto& x2 = d.matrices()[1];
  CHECK(x1.e11 == q.parse("4/5") && x1.e22 == q.parse("1/5"), "x1, w1");
  CHECK(x1.e12 == q.one() && x1.e21.is_zero(), "y1, z1");
  CHECK(x2.e11.is_zero() && x2.e22.is_zero() && x2.e21 == q.one(), "x2, w2, z2");
  CHECK(x2.e12 == q.parse("-27/25"), "y2");
  CHECK(evaluate_form(form, std::span<const Mat2<Rational>>(d.matrices())) == target,
        "evaluate_form");
  out.detail << "runtime " << elapsed * 1e3 << " ms";
  CHECK(elapsed < 0.010, " exceeds 10 ms");
}

// ---- 2 ----------------------------------------------------------------------

template <class F>
int round_trips(const F& f, std::uint64_t seed, int count) {
  Rng rng(seed);
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const DiagonalForm<F> form(f, {random_nonzero(f, rng), random_nonzero(f, rng)});
    const auto target = random_matrix(f, rng);
    try {
      const auto d = decompose(form, target);
      if (!(evaluate_form(form, std::span<const Mat2<ElementOf<F>>>(d.matrices())) == target)) {
        ++failures;
      }
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return failures;
}

void round_trip_soundness(Outcome& out) {
  const auto start = Clock::now();
  int failures = 0;
  failures += round_trips(RationalField{}, 101, 1000);
  failures += round_trips(PrimeField(5), 102, 1000);
  failures += round_trips(PrimeField(7), 103, 1000);
  failures += round_trips(ExtensionField(2, 3), 104, 1000);
  failures += round_trips(ExtensionField(3, 2), 105, 1000);
  const double elapsed = seconds_since(start);
  out.detail << "5000 instances, " << failures << " failures, runtime " << elapsed << " s";
  CHECK(failures == 0, "");
  CHECK(elapsed < 5.0, " exceeds 5 s");
}

// ---- 3 ----------------------------------------------------------------------

template <FiniteField F>
bool pair_universal_both_ways(const F& f, const ElementOf<F>& a1, const ElementOf<F>& a2) {
  if (!check_universal_exhaustive(f, a1, a2).all_representable) return false;
  const DiagonalForm<F> form(f, {a1, a2});
  const std::uint64_t q = f.order();
  for (std::uint32_t code = 0; code < q * q * q * q; ++code) {
    const auto target = decode_matrix(f, code);
    try {
      const auto d = decompose(form, target);
      if (!(evaluate_form(form, std::span<const Mat2<ElementOf<F>>>(d.matrices())) == target)) {
        return false;
      }
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

template <FiniteField F>
bool two_term_universality_for(const F& f, Outcome& out, std::uint64_t seed) {
  const auto start = Clock::now();
  const std::uint64_t q = f.order();
  std::size_t pairs = 0;
  bool ok = true;
  if (q <= 3) {
    for (std::uint64_t i = 1; i < q; ++i) {
      for (std::uint64_t j = 1; j < q; ++j) {
        ok = ok && pair_universal_both_ways(f, f.element_at(i), f.element_at(j));
        ++pairs;
      }
    }
  } else {
    Rng rng(seed);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, q - 1);
    for (int n = 0; n < 10; ++n) {
      const auto a1 = f.element_at(nonzero(rng));
      const auto a2 = f.element_at(nonzero(rng));
      ok = ok && pair_universal_both_ways(f, a1, a2);
      ++pairs;
    }
  }
  const double elapsed = seconds_since(start);
  if (out.detail.tellp() > 0) out.detail << "; ";
  out.detail << f.name() << ": " << pairs << " pairs " << elapsed << " s";
  return ok && elapsed < 10.0;
}

void two_term_universality(Outcome& out) {
  bool ok = two_term_universality_for(PrimeField(2), out, 0);
  ok = two_term_universality_for(PrimeField(3), out, 0) && ok;
  ok = two_term_universality_for(ExtensionField(2, 2), out, 301) && ok;
  ok = two_term_universality_for(PrimeField(5), out, 302) && ok;
  CHECK(ok, "");
}

// ---- 4 ----------------------------------------------------------------------

template <FiniteField F>
bool single_terms_miss_nilpotent(const F& f) {
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    const auto a = f.element_at(i);
    if (SquareSet<F>(f, a).contains(nilpotent_witness(f))) return false;
    const auto w = single_term_witness(f, a);
    if (!w.oracle_confirmed || !*w.oracle_confirmed) return false;
  }
  return true;
}

void single_term_non_universality(Outcome& out) {
  const auto start = Clock::now();
  bool ok = single_terms_miss_nilpotent(PrimeField(2));
  ok = single_terms_miss_nilpotent(PrimeField(3)) && ok;
  ok = single_terms_miss_nilpotent(ExtensionField(2, 2)) && ok;
  ok = single_terms_miss_nilpotent(PrimeField(5)) && ok;
  const double elapsed = seconds_since(start);
  out.detail << "runtime " << elapsed << " s";
  CHECK(ok, " nilpotent matrix found in a single-term image");
  CHECK(elapsed < 5.0, " exceeds 5 s");
}

// ---- 5 ----------------------------------------------------------------------

template <class F>
bool sqrt_exhaustive(const F& f) {
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const auto a = f.element_at(i);
    const auto root = f.try_sqrt(a);
    if (!root || !(*root * *root == a)) return false;
    if (!(sqrt(f, a * a) == a)) return false;
  }
  return true;
}

void perfect_square_roots(Outcome& out) {
  bool ok = sqrt_exhaustive(PrimeField(2));
  for (std::uint32_t k = 2; k <= 4; ++k) ok = sqrt_exhaustive(ExtensionField(2, k)) && ok;
  out.detail << "GF(2), GF(4), GF(8), GF(16)";
  CHECK(ok, ": sqrt failed");
}

// ---- 6 ----------------------------------------------------------------------

void non_perfect_counterexample(Outcome& out) {
  const RationalFunctionField f;
  CHECK(!is_square(f, f.x()), "x reported as a square");
  const DiagonalForm<RationalFunctionField> form(f, {f.one(), f.one()});
  const auto target = parse_matrix(f, "[[x,0],[0,0]]");
  bool not_a_square = false;
  try {
    decompose(form, target);
  } catch (const NotASquare& e) {
    not_a_square = e.element() == "x";
  }
  CHECK(not_a_square, "decompose did not raise NotASquare(x)");
  CHECK(!f2x_necessary_condition(target), "necessary condition holds");
  out.detail << "x is not a square; solver refuses; necessary condition fails";
}

// ---- 7 ----------------------------------------------------------------------

void lee_table(Outcome& out) {
  const std::pair<const char*, bool> table[] = {
      {"1,1,1", true}, {"1,1", false}, {"2,2,3", false}, {"1,2,3", true}, {"4,4,4,1,1", false}};
  for (const auto& [text, expected] : table) {
    CHECK(lee_universal_over_m2z(parse_int_form(text)) == expected, std::string("row ") + text);
  }
  Rng rng(700);
  std::uniform_int_distribution<int> length(1, 6);
  std::uniform_int_distribution<long> value(-30, 30);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 100; ++i) {
    IntCoeffForm form;
    for (int n = length(rng); n > 0; --n) form.coeffs.emplace_back(value(rng));
    const bool base = lee_universal_over_m2z(form);
    std::shuffle(form.coeffs.begin(), form.coeffs.end(), rng);
    for (auto& c : form.coeffs) {
      if (flip(rng)) c = -c;
    }
    CHECK(lee_universal_over_m2z(form) == base, "permutation/sign invariance");
  }
  out.detail << "5 rows, 100 random lists";
}

// ---- 8 ----------------------------------------------------------------------

template <class F>
std::size_t property_violations(const F& f, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t bad = 0;
  for (int i = 0; i < 500; ++i) {
    const auto a = random_element(f, rng);
    const auto b = random_element(f, rng);
    const auto c = random_element(f, rng);
    bad += !(a + b == b + a) + !(a * b == b * a) + !((a + b) + c == a + (b + c)) +
           !((a * b) * c == a * (b * c)) + !(a * (b + c) == a * b + a * c) +
           !(a + f.zero() == a) + !(a * f.one() == a) + !(a + (-a) == f.zero());
    if (!a.is_zero()) bad += !(a * a.inv() == f.one());
  }
  for (int i = 0; i < 500; ++i) {
    const auto x = random_matrix(f, rng);
    bad += !(mat_square(x) == trace(x) * x - det(x) * identity_matrix(f));
    bad += !(mat_square(transpose(x)) == transpose(mat_square(x)));
  }
  return bad;
}

void property_suites(Outcome& out) {
  std::size_t bad = property_violations(RationalField{}, 801);
  bad += property_violations(PrimeField(1000003), 802);
  bad += property_violations(ExtensionField(2, 4), 803);
  bad += property_violations(ExtensionField(3, 3), 804);
  bad += property_violations(RationalFunctionField{}, 805);
  out.detail << "5 fields, " << bad << " violations";
  CHECK(bad == 0, "");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"golden example over Q", golden_example},
      {"round-trip soundness", round_trip_soundness},
      {"two nonzero terms are universal (solver and oracle)", two_term_universality},
      {"single terms miss [[0,1],[0,0]]", single_term_non_universality},
      {"square roots over GF(2^k)", perfect_square_roots},
      {"F2(X) counterexample", non_perfect_counterexample},
      {"Lee criterion table", lee_table},
      {"field and matrix property suites", property_suites},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome outcome;
    try {
      check(outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    if (!outcome.ok) ++failures;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name
              << " [" << outcome.detail.str() << "]\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
