#include <gtest/gtest.h>

#include "generators.hpp"
#include "qf/any_field.hpp"
#include "qf/oracle.hpp"
#include "qf/solver.hpp"

namespace qf {
namespace {

using testing::Rng;

TEST(Encoding, RoundTripAndOrder) {
  const PrimeField f(3);
  for (std::uint32_t code = 0; code < 81; ++code) {
    ASSERT_EQ(encode_matrix(f, decode_matrix(f, code)), code);
  }
  EXPECT_EQ(encode_matrix(f, parse_matrix(f, "[[0,0],[0,1]]")), 1u);
  EXPECT_EQ(encode_matrix(f, parse_matrix(f, "[[1,0],[0,0]]")), 27u);
}

TEST(SquareSet, Gf2) {
  const PrimeField f(2);
  const auto squares = build_square_set(f, f.one());
  // Squares of the sixteen matrices over GF(2) take ten distinct values.
  EXPECT_EQ(squares.size(), 10u);
  EXPECT_TRUE(squares.contains(zero_matrix(f)));
  EXPECT_TRUE(squares.contains(identity_matrix(f)));
  EXPECT_FALSE(squares.contains(nilpotent_witness(f)));
  const auto root = squares.root(parse_matrix(f, "[[0,1],[1,1]]"));
  ASSERT_TRUE(root);
  EXPECT_EQ(mat_square(*root), parse_matrix(f, "[[0,1],[1,1]]"));
}

TEST(SquareSet, ZeroCoefficient) {
  const PrimeField f(3);
  const auto squares = build_square_set(f, f.zero());
  EXPECT_EQ(squares.size(), 1u);
  EXPECT_EQ(squares.members().front(), 0u);
}

TEST(SquareSet, Limits) {
  EXPECT_THROW(build_square_set(ExtensionField(2, 5), ExtensionField(2, 5).one()), FieldTooLarge);
  EXPECT_THROW(build_square_set(RationalField{}, Rational(1)), InfiniteField);
  EXPECT_NO_THROW(build_square_set(ExtensionField(2, 4), ExtensionField(2, 4).one()));
  EXPECT_THROW(check_universal_exhaustive(PrimeField(7), PrimeField(7).one(), PrimeField(7).one()),
               FieldTooLarge);
}

TEST(SquareSet, NilpotentNeverASingleTermValue) {
  for (const auto& spec : {"GF(2)", "GF(3)", "GF(4)", "GF(5)"}) {
    std::visit(
        [&](const auto& f) {
          if constexpr (FiniteField<std::decay_t<decltype(f)>>) {
            for (std::uint64_t i = 1; i < f.order(); ++i) {
              EXPECT_FALSE(build_square_set(f, f.element_at(i)).contains(nilpotent_witness(f)))
                  << spec << " a=" << f.render(f.element_at(i));
            }
          }
        },
        parse_field_spec(spec));
  }
}

TEST(TwoTerm, Examples) {
  const PrimeField f(3);
  const auto target = parse_matrix(f, "[[1,2],[0,1]]");
  const auto pair = representable_two_term(f, f.one(), f.from_int(2), target);
  ASSERT_TRUE(pair);
  EXPECT_EQ(mat_square(pair->first) + f.from_int(2) * mat_square(pair->second), target);
  EXPECT_FALSE(representable_two_term(f, f.one(), f.zero(), nilpotent_witness(f)));
  EXPECT_THROW(representable_two_term(RationalField{}, Rational(1), Rational(1),
                                      zero_matrix(RationalField{})),
               InfiniteField);
}

TEST(TwoTerm, FirstWitnessIsLexicographic) {
  const PrimeField f(2);
  const auto pair = representable_two_term(f, f.one(), f.one(), zero_matrix(f));
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->first, zero_matrix(f));
  EXPECT_EQ(pair->second, zero_matrix(f));
}

TEST(Sweep, Examples) {
  const PrimeField f2(2);
  const auto full = check_universal_exhaustive(f2, f2.one(), f2.one());
  EXPECT_TRUE(full.all_representable);
  EXPECT_EQ(full.targets, 16u);
  EXPECT_FALSE(full.counterexample);

  const auto single = check_universal_exhaustive(f2, f2.one(), f2.zero());
  EXPECT_FALSE(single.all_representable);
  EXPECT_EQ(single.representable, 10u);
  ASSERT_TRUE(single.counterexample);
  EXPECT_FALSE(build_square_set(f2, f2.one()).contains(*single.counterexample));

  const PrimeField f5(5);
  const auto r = check_universal_exhaustive(f5, f5.from_int(2), f5.from_int(3));
  EXPECT_TRUE(r.all_representable);
  EXPECT_EQ(r.targets, 625u);
}

TEST(Sweep, Deterministic) {
  const ExtensionField f(2, 2);
  const auto a = check_universal_exhaustive(f, f.generator(), f.zero());
  const auto b = check_universal_exhaustive(f, f.generator(), f.zero());
  EXPECT_EQ(a.representable, b.representable);
  EXPECT_EQ(a.counterexample, b.counterexample);
}

// The sumset sweep and the per-target meet-in-the-middle search answer the same
// question two ways.
TEST(Sweep, AgreesWithPerTargetSearch) {
  const PrimeField f(3);
  for (std::uint64_t i = 0; i < 3; ++i) {
    for (std::uint64_t j = 0; j < 3; ++j) {
      const auto a1 = f.element_at(i);
      const auto a2 = f.element_at(j);
      const auto sweep = check_universal_exhaustive(f, a1, a2);
      const SquareSet<PrimeField> second(f, a2);
      std::size_t count = 0;
      for (std::uint32_t code = 0; code < 81; ++code) {
        if (representable_two_term(second, a1, decode_matrix(f, code))) ++count;
      }
      ASSERT_EQ(count, sweep.representable) << "a1=" << i << " a2=" << j;
    }
  }
}

TEST(SolverOracle, AgreeOnRandomTargets) {
  const ExtensionField f(2, 3);
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto a1 = testing::random_nonzero(f, rng);
    const auto a2 = testing::random_nonzero(f, rng);
    const auto target = testing::random_matrix(f, rng);
    ASSERT_TRUE(representable_two_term(f, a1, a2, target));
    const DiagonalForm<ExtensionField> form(f, {a1, a2});
    ASSERT_NO_THROW(decompose(form, target));
  }
}

}  // namespace
}  // namespace qf
