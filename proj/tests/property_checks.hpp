#pragma once

// Property checks shared by the unit suite and the acceptance runner. Each
// returns an empty string on success and a description of the first
// violation otherwise.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypersect/jacobian.hpp"
#include "hypersect/lefschetz.hpp"
#include "hypersect/matrix.hpp"
#include "hypersect/parse.hpp"
#include "hypersect/polynomial.hpp"
#include "hypersect/random.hpp"
#include "hypersect/sectionmap.hpp"
#include "hypersect/transform.hpp"

#include "oracles.hpp"

namespace props {

using namespace hypersect;

/// rows x cols matrix of rank at most `inner`, built as a product of random
/// factors so that rank deficiency actually occurs.
inline ExactMatrix random_matrix(FieldSpec field, std::size_t rows, std::size_t cols,
                                 std::size_t inner, std::uint64_t seed) {
  const Polynomial left = random_homogeneous(rows * inner, 1, field, derive_seed(seed, 0));
  const Polynomial right = random_homogeneous(inner * cols, 1, field, derive_seed(seed, 1));
  ExactMatrix a(field, rows, inner);
  ExactMatrix b(field, inner, cols);
  for (std::size_t i = 0; i < rows * inner; ++i) {
    a.set(i / inner, i % inner,
          left.coefficient(Monomial::variable(rows * inner, i)));
  }
  for (std::size_t i = 0; i < inner * cols; ++i) {
    b.set(i / cols, i % cols, right.coefficient(Monomial::variable(inner * cols, i)));
  }
  return a * b;
}

inline std::vector<std::vector<Scalar>> rows_of(const ExactMatrix& m) {
  std::vector<std::vector<Scalar>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

/// rank + nullity = cols, kernel vectors are killed and independent, RREF is
/// idempotent, and the rank agrees with the naive oracle.
inline std::string check_rank_nullity(const ExactMatrix& m) {
  const std::size_t r = rank(m);
  const std::vector<Vector> kernel = kernel_basis(m);
  if (r + kernel.size() != m.cols()) return "rank + nullity != cols";
  for (const Vector& v : kernel) {
    if (!is_zero(m.apply(v))) return "kernel vector not annihilated";
  }
  if (!kernel.empty() &&
      rank(ExactMatrix::from_rows(m.field(), kernel, m.cols())) != kernel.size()) {
    return "kernel basis dependent";
  }
  const RrefResult once = rref(m);
  const RrefResult twice = rref(once.reduced);
  if (!(once.reduced == twice.reduced) || once.rank != r) return "rref not idempotent";
  if (oracle::naive_rank(rows_of(m)) != r) return "rank disagrees with naive elimination";
  return {};
}

inline std::string check_euler_identity(FieldSpec field, std::size_t count,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t nv = 2 + rng() % 4;
    const int d = 1 + static_cast<int>(rng() % 5);
    const Polynomial f = random_homogeneous(nv, d, field, rng());
    if (!euler_check(f)) return "Euler identity fails for " + f.to_string();
  }
  return {};
}

/// For smooth F: h(k) = h(σ-k), h(σ) = 1 and h(σ+1) = 0.
inline std::string check_gorenstein(const Polynomial& f) {
  const JacobianRingModel jr(f);
  const int sigma = socle_degree(static_cast<int>(jr.num_vars()) - 1, jr.degree());
  if (jr.hilbert_value(sigma) != 1) return "socle is not one-dimensional";
  if (jr.hilbert_value(sigma + 1) != 0) return "not Artinian past the socle degree";
  for (int k = 0; k <= sigma / 2; ++k) {
    if (jr.hilbert_value(k) != jr.hilbert_value(sigma - k)) {
      return "h(" + std::to_string(k) + ") != h(" + std::to_string(sigma - k) + ")";
    }
  }
  return {};
}

/// Kernel dimensions of ×L and of φ do not change under (F, L) ↦ (F∘A, L∘A),
/// nor does the Hilbert function up to degree d.
inline std::string check_equivariance(const Polynomial& f, const LinearForm& l,
                                      const ExactMatrix& a) {
  const Polynomial g = change_of_coordinates(f, a);
  const LinearForm la = change_of_coordinates(l, a);
  const int d = *f.degree();
  const JacobianRingModel jf(f);
  const JacobianRingModel jg(g);
  for (int k = 0; k <= d; ++k) {
    if (jf.hilbert_value(k) != jg.hilbert_value(k)) return "Hilbert function changed";
  }
  if (wlp_injective(jf, l, d - 1).kernel_dimension() !=
      wlp_injective(jg, la, d - 1).kernel_dimension()) {
    return "wlp kernel dimension changed";
  }
  if (tangent_kernel(f, l).dimension() != tangent_kernel(g, la).dimension()) {
    return "tangent kernel dimension changed";
  }
  return {};
}

/// A hyperplane with smooth section for F, drawn from seeds derive_seed(seed, t).
inline LinearForm hyperplane_with_smooth_section(const Polynomial& f, std::uint64_t seed) {
  for (std::uint64_t t = 0;; ++t) {
    LinearForm l = random_linear_form(f.num_vars(), f.field(), derive_seed(seed, t));
    if (!dual_membership(f, l)) return l;
  }
}

}  // namespace props
