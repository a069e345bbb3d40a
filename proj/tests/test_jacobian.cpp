#include <gtest/gtest.h>

#include <thread>

#include "hypersect/error.hpp"
#include "hypersect/jacobian.hpp"
#include "hypersect/parse.hpp"

#include "oracles.hpp"

using namespace hypersect;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F10007 = FieldSpec::prime(10007);

std::vector<std::size_t> hilbert(const JacobianRingModel& jr, int top) {
  std::vector<std::size_t> h;
  for (int k = 0; k <= top; ++k) h.push_back(jr.hilbert_value(k));
  return h;
}
}  // namespace

TEST(JacobianRing, FermatCubicThreefold) {
  const JacobianRingModel jr(fermat_form(Q, 5, 3));
  EXPECT_EQ(hilbert(jr, 6), (std::vector<std::size_t>{1, 5, 10, 10, 5, 1, 0}));
  EXPECT_EQ(jr.ideal_dimension(2), 5u);
  EXPECT_EQ(jr.ideal_dimension(3), 25u);
}

TEST(JacobianRing, FermatMatchesGeneratingFunction) {
  for (auto [nv, d] : {std::pair<std::size_t, int>{3, 3}, {3, 4}, {4, 3}, {4, 4}, {3, 5}, {6, 3}}) {
    const auto expected = oracle::complete_intersection_series(nv, d);
    const JacobianRingModel jr(fermat_form(Q, nv, d));
    for (std::size_t k = 0; k < expected.size(); ++k) {
      EXPECT_EQ(jr.hilbert_value(static_cast<int>(k)), static_cast<std::size_t>(expected[k]))
          << "nv=" << nv << " d=" << d << " k=" << k;
    }
  }
}

TEST(JacobianRing, FermatOverF2) {
  // The partials are the squares x_i^2, so the ring is squarefree monomials.
  const JacobianRingModel jr(fermat_form(F2, 5, 3));
  EXPECT_EQ(hilbert(jr, 3), (std::vector<std::size_t>{1, 5, 10, 10}));
  for (const Monomial& m : jr.coset_basis(2)) {
    for (int e : m.exponents()) EXPECT_LE(e, 1);
  }
}

TEST(JacobianRing, ReductionAndMembership) {
  const JacobianRingModel jr(fermat_form(Q, 5, 3));
  const Polynomial x0 = Polynomial::variable(Q, 5, 0);
  const Polynomial x1 = Polynomial::variable(Q, 5, 1);
  EXPECT_TRUE(jr.in_ideal(x0 * x0, 2));
  EXPECT_FALSE(jr.in_ideal(x0 * x1, 2));
  EXPECT_TRUE(jr.in_ideal(Polynomial(Q, 5), 2));
  const Vector coords = jr.reduce_mod_ideal(x0 * x1 + Scalar(Q, 7) * x1 * x1, 2);
  EXPECT_EQ(jr.representative(coords, 2), x0 * x1);
  EXPECT_THROW(jr.reduce_mod_ideal(x0, 2), PreconditionViolation);
  EXPECT_THROW(jr.reduce_mod_ideal(Polynomial::variable(F3, 5, 0), 1), FieldMismatch);
}

TEST(JacobianRing, CachedPiecesAgree) {
  const Polynomial f = random_homogeneous(4, 3, F10007, 11);
  const JacobianRingModel a(f);
  const JacobianRingModel b(f);
  const std::size_t value = a.hilbert_value(3);
  EXPECT_EQ(b.ideal_piece(3)->standard_monomials.size(), value);
  EXPECT_EQ(a.ideal_piece(3)->standard_monomials.size(), value);
}

TEST(JacobianRing, SharedAcrossThreads) {
  const JacobianRingModel jr(random_homogeneous(5, 3, F10007, 3));
  std::vector<std::size_t> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = jr.ideal_piece(3)->span.dimension(); });
  }
  for (auto& t : threads) t.join();
  for (std::size_t s : seen) EXPECT_EQ(s, seen.front());
}

TEST(JacobianRing, Preconditions) {
  EXPECT_THROW(JacobianRingModel(Polynomial(Q, 3)), PreconditionViolation);
  EXPECT_THROW(JacobianRingModel(parse_polynomial("x0^2 + x1", Q, 3)), PreconditionViolation);
  EXPECT_THROW(JacobianRingModel(parse_polynomial("x0 + x1", Q, 3)), PreconditionViolation);
}

TEST(Smoothness, Verdicts) {
  const auto fermat = smoothness_check(fermat_form(Q, 5, 3));
  EXPECT_EQ(fermat.status, SmoothnessStatus::Smooth);
  EXPECT_EQ(fermat.method, SmoothnessMethod::ArtinianSocle);
  EXPECT_EQ(fermat.degree, 6);

  const Polynomial cone = parse_polynomial("x1^3 + x2^3 + x3^3 + x4^3", Q, 5);
  EXPECT_EQ(smoothness_check(cone).status, SmoothnessStatus::Singular);

  // Over F3 the Fermat cubic is (x0 + ... + x4)^3.
  const auto f3 = smoothness_check(fermat_form(F3, 5, 3));
  EXPECT_EQ(f3.status, SmoothnessStatus::Singular);
  EXPECT_EQ(f3.method, SmoothnessMethod::ExtendedIdealSweep);

  EXPECT_TRUE(smoothness_check(fermat_form(F2, 5, 3)).is_smooth());
  EXPECT_EQ(smoothness_check(parse_polynomial("x0*x1*x2", Q, 3)).status,
            SmoothnessStatus::Singular);
}

TEST(Smoothness, SweepProvesSmoothnessWhenCharDividesDegree) {
  // Klein cubic threefold; its discriminant is a power of 11.
  const Polynomial klein = parse_polynomial(
      "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0", F3, 5);
  const auto v = smoothness_check(klein);
  EXPECT_EQ(v.status, SmoothnessStatus::Smooth);
  EXPECT_EQ(v.method, SmoothnessMethod::ExtendedIdealSweep);
  // The conic x0*x1 + x2^2 over F2 is smooth although 2 divides its degree.
  EXPECT_TRUE(smoothness_check(parse_polynomial("x0*x1 + x2^2", F2, 3)).is_smooth());
  // x0^2 over F2 is a double line.
  EXPECT_EQ(smoothness_check(parse_polynomial("x0^2", F2, 3)).status, SmoothnessStatus::Singular);
}

TEST(Smoothness, BudgetExhaustion) {
  const auto v = smoothness_check(fermat_form(F3, 5, 3), 2);
  EXPECT_EQ(v.status, SmoothnessStatus::Unknown);
}

TEST(Smoothness, MacaulayBound) {
  EXPECT_EQ(macaulay_bound(3, 2), 4u);  // 3 = C(3,2)
  EXPECT_EQ(macaulay_bound(1, 5), 1u);
  EXPECT_EQ(macaulay_bound(0, 5), 0u);
  EXPECT_EQ(macaulay_bound(5, 1), 15u);  // 5 = C(5,1), bound C(6,2)
  EXPECT_EQ(socle_degree(4, 3), 5);
  EXPECT_EQ(socle_degree(3, 5), 12);
}

TEST(Smoothness, SampleSmoothForm) {
  const SmoothSample a = sample_smooth_form(5, 3, F10007, 99);
  const SmoothSample b = sample_smooth_form(5, 3, F10007, 99);
  EXPECT_EQ(a.form, b.form);
  EXPECT_EQ(a.seed, b.seed);
  EXPECT_TRUE(smoothness_check(a.form).is_smooth());
}
