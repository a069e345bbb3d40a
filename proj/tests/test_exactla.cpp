#include <gtest/gtest.h>

#include "hypersect/error.hpp"
#include "hypersect/field.hpp"
#include "hypersect/matrix.hpp"

#include "oracles.hpp"

using namespace hypersect;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime(7);

Vector vec(FieldSpec field, std::initializer_list<long long> values) {
  Vector v;
  for (long long x : values) v.emplace_back(field, x);
  return v;
}

ExactMatrix mat(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vector> r;
  for (auto row : rows) r.push_back(vec(field, row));
  return ExactMatrix::from_rows(field, r);
}

}  // namespace

TEST(FieldSpec, ParsesAndNames) {
  EXPECT_TRUE(FieldSpec::parse("Q").is_rational());
  EXPECT_EQ(FieldSpec::parse("F7").characteristic(), 7u);
  EXPECT_EQ(FieldSpec::parse("F10007").name(), "F10007");
  EXPECT_EQ(FieldSpec::rationals().name(), "Q");
  EXPECT_EQ(FieldSpec::parse("F2147483647").characteristic(), 2147483647u);
}

TEST(FieldSpec, RejectsNonPrimes) {
  EXPECT_THROW(FieldSpec::parse("F4"), PreconditionViolation);
  EXPECT_THROW(FieldSpec::parse("F1"), PreconditionViolation);
  EXPECT_THROW(FieldSpec::parse("F0"), PreconditionViolation);
  EXPECT_THROW(FieldSpec::parse("R"), PreconditionViolation);
  EXPECT_THROW(FieldSpec::parse("F"), PreconditionViolation);
  EXPECT_THROW(FieldSpec::parse("F4294967311"), PreconditionViolation);
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Scalar three(F7, 3);
  const Scalar five(F7, 5);
  EXPECT_TRUE((three * five).is_one());
  EXPECT_EQ(three.inverse(), five);
  EXPECT_EQ(Scalar(F7, -1), Scalar(F7, 6));
  EXPECT_EQ(Scalar(F7, 14), Scalar(F7));
  EXPECT_EQ(three / five, Scalar(F7, 2));  // 3 * 3
  EXPECT_EQ((three - five).residue(), 5u);
  EXPECT_EQ(Scalar(F7, mpq_class(1, 2)), Scalar(F7, 4));
}

TEST(Scalar, RationalArithmetic) {
  const Scalar a(Q, mpq_class(1, 3));
  const Scalar b(Q, mpq_class(1, 6));
  EXPECT_EQ(a + b, Scalar(Q, mpq_class(1, 2)));
  EXPECT_EQ((a * b).to_string(), "1/18");
  EXPECT_EQ((-a).to_string(), "-1/3");
  EXPECT_EQ(Scalar(Q, mpq_class(4, 2)).to_string(), "2");
}

TEST(Scalar, Errors) {
  EXPECT_THROW(Scalar(Q, 1) / Scalar(Q), DivisionByZero);
  EXPECT_THROW(Scalar(F7).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(Q, 1) + Scalar(F7, 1), FieldMismatch);
  EXPECT_THROW(Scalar(F7, mpq_class(1, 7)), PreconditionViolation);
}

TEST(ExactMatrix, RrefOverQ) {
  const ExactMatrix m = mat(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const RrefResult r = rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.reduced.row(0), vec(Q, {1, 0, 1}));
  EXPECT_EQ(r.reduced.row(1), vec(Q, {0, 1, 1}));
  EXPECT_TRUE(is_zero(r.reduced.row(2)));
}

TEST(ExactMatrix, KernelBasis) {
  const ExactMatrix m = mat(F7, {{1, 2, 3, 4}, {2, 4, 6, 1}});
  const auto kernel = kernel_basis(m);
  EXPECT_EQ(kernel.size(), 4 - rank(m));
  for (const Vector& v : kernel) EXPECT_TRUE(is_zero(m.apply(v)));
}

// Rank 2 over Q although the rows agree modulo the certificate prime, so the
// modular shortcut must fall back to exact elimination.
TEST(ExactMatrix, RankSurvivesModularCollision) {
  const ExactMatrix m = mat(Q, {{1, 1}, {1, 1 + 2147483647LL}});
  EXPECT_EQ(rank(m), 2u);
  const ExactMatrix tall = mat(Q, {{1, 1}, {1, 1 + 2147483647LL}, {2, 2}});
  EXPECT_EQ(rank(tall), 2u);
  EXPECT_EQ(rref(tall).rank, 2u);
}

TEST(ExactMatrix, SolveAndInverse) {
  const ExactMatrix a = mat(Q, {{2, 1}, {1, 3}});
  const auto x = solve(a, vec(Q, {3, 5}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a.apply(*x), vec(Q, {3, 5}));
  const auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, ExactMatrix::identity(Q, 2));

  const ExactMatrix singular = mat(Q, {{1, 2}, {2, 4}});
  EXPECT_FALSE(inverse(singular).has_value());
  EXPECT_FALSE(solve(singular, vec(Q, {1, 0})).has_value());
  EXPECT_TRUE(solve(singular, vec(Q, {1, 2})).has_value());
}

TEST(ExactMatrix, DimensionChecks) {
  ExactMatrix a(Q, 2, 3);
  const ExactMatrix b(Q, 2, 3);
  EXPECT_THROW(a * b, DimensionMismatch);
  EXPECT_THROW(a.apply(vec(Q, {1, 2})), DimensionMismatch);
  EXPECT_THROW(a.set(0, 0, Scalar(F7, 1)), FieldMismatch);
}

TEST(ExactMatrix, TransposeAndProduct) {
  const ExactMatrix a = mat(F7, {{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ((a * a.transpose()).at(0, 0), Scalar(F7, 14));
}

TEST(Subspace, MembershipAndQuotient) {
  const Subspace s = Subspace::row_space(mat(Q, {{1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_TRUE(s.contains(vec(Q, {1, 2, 1})));
  EXPECT_FALSE(s.contains(vec(Q, {0, 0, 1})));
  EXPECT_EQ(s.free_columns(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(s.quotient_coordinates(vec(Q, {1, 2, 1})), vec(Q, {0}));
  EXPECT_EQ(s.quotient_coordinates(vec(Q, {0, 0, 1})).size(), 1u);
  EXPECT_FALSE(is_zero(s.quotient_coordinates(vec(Q, {0, 0, 1}))));
}

TEST(Subspace, InSpanCoordinates) {
  const RrefResult basis = rref(mat(F7, {{1, 0, 2}, {0, 1, 3}}));
  const auto coords = in_span(vec(F7, {2, 3, 13}), basis.reduced);
  ASSERT_TRUE(coords.has_value());
  EXPECT_EQ((*coords)[0], Scalar(F7, 2));
  EXPECT_EQ((*coords)[1], Scalar(F7, 3));
  EXPECT_FALSE(in_span(vec(F7, {0, 0, 1}), basis.reduced).has_value());
}

TEST(Oracle, NaiveRankMatchesLibraryOnSmallCases) {
  const ExactMatrix m = mat(Q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  std::vector<std::vector<Scalar>> rows{m.row(0), m.row(1), m.row(2)};
  EXPECT_EQ(oracle::naive_rank(rows), 2u);
  EXPECT_EQ(rank(m), 2u);
}
