#include <gtest/gtest.h>

#include "hypersect/error.hpp"
#include "hypersect/lefschetz.hpp"
#include "hypersect/parse.hpp"

#include "oracles.hpp"

using namespace hypersect;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F10007 = FieldSpec::prime(10007);

LinearForm form(const char* text, FieldSpec field = Q) {
  return LinearForm(parse_polynomial(text, field, 5));
}
}  // namespace

TEST(MultiplicationMap, FermatAtX0) {
  const JacobianRingModel jr(fermat_form(Q, 5, 3));
  const MultiplicationMap m = multiplication_map(jr, form("x0"), 2);
  EXPECT_EQ(m.source_basis.size(), 10u);
  EXPECT_EQ(m.target_basis.size(), 10u);
  EXPECT_EQ(m.rank, 6u);
  ASSERT_EQ(m.kernel_forms.size(), 4u);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_EQ(m.kernel_forms[j], parse_polynomial(("x0*x" + std::to_string(j + 1)).c_str(), Q, 5));
  }
}

TEST(MultiplicationMap, FermatAtSumMatchesInclusionOracle) {
  const JacobianRingModel jr(fermat_form(Q, 5, 3));
  const MultiplicationMap m = multiplication_map(jr, form("x0 + x1 + x2 + x3 + x4"), 2);
  const std::size_t expected = oracle::naive_rank(oracle::subset_inclusion_matrix(Q, 5, 2));
  EXPECT_EQ(expected, 10u);
  EXPECT_EQ(m.rank, expected);
  EXPECT_TRUE(m.injective());
}

TEST(MultiplicationMap, ColumnsAreImagesOfStandardMonomials) {
  const Polynomial f = random_homogeneous(4, 3, F10007, 5);
  const JacobianRingModel jr(f);
  const LinearForm l = random_linear_form(4, F10007, 6);
  const MultiplicationMap m = multiplication_map(jr, l, 1);
  for (std::size_t c = 0; c < m.source_basis.size(); ++c) {
    const Polynomial image =
        l.polynomial() * Polynomial::monomial(F10007, m.source_basis[c], Scalar(F10007, 1));
    EXPECT_EQ(m.matrix.column(c), jr.reduce_mod_ideal(image, 2));
  }
  for (const Polynomial& k : m.kernel_forms) EXPECT_TRUE(jr.in_ideal(l.polynomial() * k, 2));
}

TEST(MultiplicationMap, Errors) {
  const JacobianRingModel jr(fermat_form(Q, 5, 3));
  EXPECT_THROW(multiplication_map(jr, form("x0", F2), 2), FieldMismatch);
  EXPECT_THROW(multiplication_map(jr, LinearForm::variable(Q, 4, 0), 2), DimensionMismatch);
  EXPECT_THROW(multiplication_map(jr, form("x0"), -1), PreconditionViolation);
}

TEST(WlpSearch, FermatFindsWitnessDeterministically) {
  const JacobianRingModel jr(fermat_form(Q, 5, 3));
  const WlpWitness a = wlp_search(jr, 2, 20, 1);
  const WlpWitness b = wlp_search(jr, 2, 20, 1);
  ASSERT_EQ(a.outcome, WlpOutcome::WitnessFound);
  ASSERT_TRUE(a.form.has_value());
  EXPECT_EQ(*a.form, *b.form);
  EXPECT_EQ(a.trials, b.trials);
  EXPECT_TRUE(wlp_injective(jr, *a.form, 2).injective);
  EXPECT_THROW(wlp_search(jr, 2, 0, 1), PreconditionViolation);
}

TEST(WlpSearch, AllTrialsFailOverF2) {
  const JacobianRingModel jr(fermat_form(F2, 5, 3));
  const WlpWitness w = wlp_search(jr, 2, 10, 4);
  EXPECT_EQ(w.outcome, WlpOutcome::AllTrialsFailed);
  EXPECT_FALSE(w.form.has_value());
  EXPECT_EQ(w.trials, 10u);
}

TEST(WlpExhaustive, NoInjectiveFormOverF2) {
  const JacobianRingModel jr(fermat_form(F2, 5, 3));
  const WlpWitness w = wlp_exhaustive(jr, 2);
  EXPECT_EQ(w.outcome, WlpOutcome::ExhaustedAllForms);
  EXPECT_EQ(w.trials, 31u);
  ASSERT_EQ(w.failures.size(), 31u);
  for (const auto& [l, dim] : w.failures) EXPECT_GE(dim, 1u);
}

TEST(WlpExhaustive, FindsWitnessOverF7) {
  const JacobianRingModel jr(fermat_form(FieldSpec::prime(7), 5, 3));
  const WlpWitness w = wlp_exhaustive(jr, 2);
  ASSERT_EQ(w.outcome, WlpOutcome::WitnessFound);
  EXPECT_TRUE(wlp_injective(jr, *w.form, 2).injective);
}

TEST(WlpExhaustive, Refusals) {
  EXPECT_THROW(wlp_exhaustive(JacobianRingModel(fermat_form(Q, 5, 3)), 2), ResourceRefusal);
  EXPECT_THROW(wlp_exhaustive(JacobianRingModel(fermat_form(F10007, 5, 3)), 2), ResourceRefusal);
}

TEST(Char2Fermat, AllChecksPass) {
  const Char2FermatReport r = char2_fermat_demo();
  EXPECT_TRUE(r.product_nonzero);
  EXPECT_TRUE(r.product_times_l_zero);
  EXPECT_EQ(r.squares_span_dimension, 5u);
  EXPECT_TRUE(r.squares_span_ideal);
  EXPECT_TRUE(r.square_zero);
  EXPECT_TRUE(r.passed());
}
