#include <gtest/gtest.h>

#include <random>

#include "hypersect/parse.hpp"

#include "property_checks.hpp"

using namespace hypersect;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const std::vector<FieldSpec> kFields{Q, FieldSpec::prime(2), FieldSpec::prime(3),
                                     FieldSpec::prime(10007)};
}  // namespace

TEST(Properties, RankNullityAndRrefIdempotence) {
  for (const FieldSpec field : kFields) {
    for (std::uint64_t i = 0; i < 25; ++i) {
      const std::size_t rows = 1 + derive_seed(i, 10) % 9;
      const std::size_t cols = 1 + derive_seed(i, 11) % 9;
      const std::size_t inner = 1 + derive_seed(i, 12) % 9;
      const ExactMatrix m = props::random_matrix(field, rows, cols, inner, derive_seed(i, 13));
      EXPECT_EQ(props::check_rank_nullity(m), "") << field.name() << " sample " << i;
    }
  }
}

TEST(Properties, PrimeFieldRankMatchesNaiveOracle) {
  const FieldSpec f = FieldSpec::prime(10007);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t inner = 5 + i % 6;  // ranks 5..10
    const ExactMatrix m = props::random_matrix(f, 10, 10, inner, derive_seed(77, i));
    EXPECT_EQ(rank(m), oracle::naive_rank(props::rows_of(m))) << "sample " << i;
  }
}

TEST(Properties, ParseFormatRoundTrip) {
  for (const FieldSpec field : kFields) {
    for (std::uint64_t i = 0; i < 25; ++i) {
      const std::size_t nv = 1 + i % 5;
      const int d = static_cast<int>(i % 4);
      Polynomial f = random_homogeneous(nv, d, field, derive_seed(i, 1));
      if (field.is_rational()) {
        f = Scalar(Q, mpq_class(1, 7)) * f + random_homogeneous(nv, d + 1, field, i);
      }
      EXPECT_EQ(parse_polynomial(f.to_string(), field, nv), f) << f.to_string();
    }
  }
}

TEST(Properties, EulerIdentity) {
  for (const FieldSpec field : kFields) {
    EXPECT_EQ(props::check_euler_identity(field, 100, 5), "") << field.name();
  }
}

TEST(Properties, ProductRule) {
  for (const FieldSpec field : kFields) {
    for (std::uint64_t i = 0; i < 10; ++i) {
      const Polynomial f = random_homogeneous(4, 2, field, derive_seed(i, 2));
      const Polynomial g = random_homogeneous(4, 3, field, derive_seed(i, 3));
      for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(partial_derivative(f * g, k),
                  partial_derivative(f, k) * g + f * partial_derivative(g, k));
      }
    }
  }
}

TEST(Properties, ChainRuleForLinearSubstitution) {
  // ∂_k(F∘A) = Σ_j A(j,k) (∂_j F)∘A
  for (const FieldSpec field : {Q, FieldSpec::prime(10007)}) {
    const std::size_t nv = 4;
    const Polynomial f = random_homogeneous(nv, 3, field, 9);
    const ExactMatrix a = random_invertible_matrix(nv, field, 10);
    const Polynomial g = change_of_coordinates(f, a);
    for (std::size_t k = 0; k < nv; ++k) {
      Polynomial rhs(field, nv);
      for (std::size_t j = 0; j < nv; ++j) {
        rhs += a.at(j, k) * change_of_coordinates(partial_derivative(f, j), a);
      }
      EXPECT_EQ(partial_derivative(g, k), rhs);
    }
  }
}

TEST(Properties, GorensteinSymmetry) {
  EXPECT_EQ(props::check_gorenstein(fermat_form(Q, 5, 3)), "");
  for (const FieldSpec field : {Q, FieldSpec::prime(10007)}) {
    for (auto [nv, d] : {std::pair<std::size_t, int>{3, 3}, {3, 4}, {4, 3}, {5, 3}}) {
      const Polynomial f = sample_smooth_form(nv, d, field, 40 + nv).form;
      EXPECT_EQ(props::check_gorenstein(f), "") << f.to_string();
    }
  }
}

TEST(Properties, CoordinateChangeEquivariance) {
  const FieldSpec f = FieldSpec::prime(10007);
  for (std::uint64_t i = 0; i < 6; ++i) {
    const Polynomial form = sample_smooth_form(5, 3, f, derive_seed(500, i)).form;
    const LinearForm l = props::hyperplane_with_smooth_section(form, derive_seed(501, i));
    const ExactMatrix a = random_invertible_matrix(5, f, derive_seed(502, i));
    EXPECT_EQ(props::check_equivariance(form, l, a), "") << "sample " << i;
  }
  // A coordinate change of the Fermat cubic moves the nontrivial kernel along.
  const Polynomial fermat = fermat_form(Q, 5, 3);
  const ExactMatrix a = random_invertible_matrix(5, Q, 3);
  EXPECT_EQ(props::check_equivariance(fermat, LinearForm::variable(Q, 5, 0), a), "");
}
