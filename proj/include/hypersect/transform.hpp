#pragma once

#include <cstddef>
#include <vector>

#include "hypersect/error.hpp"
#include "hypersect/matrix.hpp"
#include "hypersect/polynomial.hpp"

namespace hypersect {

/// F(images_0, ..., images_n): replaces each X_j by the polynomial images[j].
/// All images must live in one common ring.
inline Polynomial substitute(const Polynomial& f,
                             const std::vector<Polynomial>& images) {
  if (images.size() != f.num_vars()) {
    throw DimensionMismatch("substitution needs one image per variable");
  }
  if (images.empty()) throw DimensionMismatch("empty substitution");
  const std::size_t target_vars = images.front().num_vars();
  const FieldSpec field = f.field();

  // Powers of each image, computed on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t j, int e) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(field, target_vars, Scalar(field, 1)));
    }
    while (static_cast<int>(cache.size()) <= e) {
      cache.push_back(cache.back() * images[j]);
    }
    return cache[static_cast<std::size_t>(e)];
  };

  Polynomial out(field, target_vars);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(field, target_vars, c);
    for (std::size_t j = 0; j < m.num_vars(); ++j) {
      if (m[j] > 0) term *= power(j, m[j]);
    }
    out += term;
  }
  return out;
}

/// F∘A, i.e. the substitution X_j ↦ Σ_k A(j,k) X_k. A must be invertible.
inline Polynomial change_of_coordinates(const Polynomial& f,
                                        const ExactMatrix& a) {
  const std::size_t n = f.num_vars();
  if (a.rows() != n || a.cols() != n) {
    throw DimensionMismatch("coordinate change must be " + std::to_string(n) +
                            "x" + std::to_string(n));
  }
  if (a.field() != f.field()) throw FieldMismatch();
  if (!inverse(a)) throw PreconditionViolation("coordinate change is singular");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial img(f.field(), n);
    for (std::size_t k = 0; k < n; ++k) {
      img.add_term(Monomial::variable(n, k), a.at(j, k));
    }
    images.push_back(std::move(img));
  }
  return substitute(f, images);
}

inline LinearForm change_of_coordinates(const LinearForm& l,
                                        const ExactMatrix& a) {
  return LinearForm(change_of_coordinates(l.polynomial(), a));
}

/// An invertible A with L∘A = X_0. With p the pivot of L, A is the inverse of
/// the matrix whose first row holds the coefficients of L and whose remaining
/// rows are the unit vectors e_k, k ≠ p, in increasing order. Under this
/// choice the variables X_1..X_n of F∘A restricted to X_0 = 0 are exactly the
/// surviving variables of restrict_to_hyperplane(F, L), in order.
inline ExactMatrix coordinates_sending_to_x0(const LinearForm& l) {
  const std::size_t n = l.num_vars();
  const FieldSpec field = l.field();
  const std::size_t p = l.pivot_index();
  ExactMatrix b(field, n, n);
  for (std::size_t k = 0; k < n; ++k) b.set(0, k, l.coefficient(k));
  std::size_t row = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p) continue;
    b.set(row++, k, Scalar(field, 1));
  }
  auto a = inverse(b);
  if (!a) throw PreconditionViolation("linear form is zero");
  return *a;
}

/// F restricted to L = 0: the pivot variable of L (smallest index with a
/// nonzero coefficient) is eliminated and the remaining variables are
/// renumbered 0..n-1 in order.
inline Polynomial restrict_to_hyperplane(const Polynomial& f,
                                         const LinearForm& l) {
  if (l.num_vars() != f.num_vars()) {
    throw DimensionMismatch("hyperplane and form live in different rings");
  }
  if (l.field() != f.field()) throw FieldMismatch();
  const std::size_t n = f.num_vars();
  if (n < 2) throw PreconditionViolation("cannot restrict a form in one variable");
  const FieldSpec field = f.field();
  const std::size_t p = l.pivot_index();
  const Scalar minus_inv = -l.coefficient(p).inverse();

  std::vector<Polynomial> images;
  images.reserve(n);
  Polynomial pivot_image(field, n - 1);
  std::size_t slot = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == p) {
      images.emplace_back(field, n - 1);
      continue;
    }
    images.push_back(Polynomial::variable(field, n - 1, slot));
    pivot_image.add_term(Monomial::variable(n - 1, slot),
                         minus_inv * l.coefficient(j));
    ++slot;
  }
  images[p] = std::move(pivot_image);
  return substitute(f, images);
}

}  // namespace hypersect
