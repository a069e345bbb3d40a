#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hypersect/matrix.hpp"
#include "hypersect/monomial.hpp"
#include "hypersect/polynomial.hpp"

namespace hypersect {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seed of the index-th trial or sample under a master seed. Independent of
/// execution order.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::uint64_t index) noexcept {
  return mix64(mix64(master) ^ (index * 0xd1b54a32d192ed03ull + 1));
}

/// Over Q coefficients are uniform integers in [-rational_bound,
/// rational_bound]; over F_p they are uniform residues.
struct CoefficientPolicy {
  std::int64_t rational_bound = 9;
};

namespace detail {
inline Scalar random_scalar(std::mt19937_64& rng, FieldSpec field,
                            const CoefficientPolicy& policy) {
  if (field.is_rational()) {
    std::uniform_int_distribution<std::int64_t> dist(-policy.rational_bound,
                                                     policy.rational_bound);
    return Scalar(field, static_cast<long long>(dist(rng)));
  }
  std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
  return Scalar::residue(field, dist(rng));
}
}  // namespace detail

/// Random homogeneous form of degree d; every monomial of R_d gets an
/// independent coefficient. Deterministic in `seed`; an all-zero draw is
/// redrawn from the same stream, so the result is never zero.
inline Polynomial random_homogeneous(std::size_t num_vars, int d,
                                     FieldSpec field, std::uint64_t seed,
                                     const CoefficientPolicy& policy = {}) {
  std::mt19937_64 rng(seed);
  const std::vector<Monomial> monomials = monomials_of_degree(num_vars, d);
  while (true) {
    Polynomial p(field, num_vars);
    for (const Monomial& m : monomials) {
      p.add_term(m, detail::random_scalar(rng, field, policy));
    }
    if (!p.is_zero()) return p;
  }
}

inline LinearForm random_linear_form(std::size_t num_vars, FieldSpec field,
                                     std::uint64_t seed,
                                     const CoefficientPolicy& policy = {}) {
  return LinearForm(random_homogeneous(num_vars, 1, field, seed, policy));
}

/// Random invertible n×n matrix (rejection sampling).
inline ExactMatrix random_invertible_matrix(std::size_t n, FieldSpec field,
                                            std::uint64_t seed,
                                            const CoefficientPolicy& policy = {}) {
  std::mt19937_64 rng(seed);
  while (true) {
    ExactMatrix a(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        a.set(r, c, detail::random_scalar(rng, field, policy));
      }
    }
    if (rank(a) == n) return a;
  }
}

}  // namespace hypersect
