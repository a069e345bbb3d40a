#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hypersect/error.hpp"
#include "hypersect/matrix.hpp"
#include "hypersect/monomial.hpp"
#include "hypersect/polynomial.hpp"
#include "hypersect/random.hpp"

namespace hypersect {

/// Rows m·g for every generator g with deg g ≤ k and every monomial m of
/// degree k - deg g, written in the monomial basis of R_k.
inline ExactMatrix macaulay_matrix(const std::vector<Polynomial>& generators,
                                   const MonomialBasis& target, FieldSpec field) {
  const int k = target.degree();
  std::size_t row_count = 0;
  for (const Polynomial& g : generators) {
    if (g.is_zero() || *g.degree() > k) continue;
    row_count += count_monomials(target.num_vars(), k - *g.degree());
  }
  ExactMatrix m(field, row_count, target.size());
  std::size_t row = 0;
  for (const Polynomial& g : generators) {
    if (g.is_zero() || *g.degree() > k) continue;
    for (const Monomial& mult : monomials_of_degree(target.num_vars(), k - *g.degree())) {
      for (const auto& [mono, c] : g.terms()) {
        m.set(row, target.index_of(mult * mono), c);
      }
      ++row;
    }
  }
  return m;
}

/// Degree-k data of J = (F'_0, ..., F'_n): an RREF basis of J_k in the
/// monomial coordinates of R_k, and the standard monomials whose classes form
/// a basis of the quotient.
struct IdealPiece {
  int degree;
  MonomialBasis monomials;
  Subspace span;
  std::vector<std::size_t> standard_columns;
  std::vector<Monomial> standard_monomials;
};

/// The Jacobian ring R/J of a homogeneous form F, computed degree by degree.
/// Copies share one cache; each degree is computed once and then published
/// immutably, so a model may be read from several threads.
class JacobianRingModel {
 public:
  explicit JacobianRingModel(Polynomial f) : form_(std::move(f)) {
    if (form_.is_zero()) throw PreconditionViolation("form is zero");
    if (!form_.is_homogeneous()) {
      throw PreconditionViolation("form is not homogeneous: " + form_.to_string());
    }
    if (*form_.degree() < 2) {
      throw PreconditionViolation("form must have degree >= 2");
    }
    partials_ = gradient(form_);
  }

  const Polynomial& form() const noexcept { return form_; }
  const std::vector<Polynomial>& partials() const noexcept { return partials_; }
  FieldSpec field() const noexcept { return form_.field(); }
  std::size_t num_vars() const noexcept { return form_.num_vars(); }
  int degree() const { return *form_.degree(); }

  std::shared_ptr<const IdealPiece> ideal_piece(int k) const {
    if (k < 0) throw PreconditionViolation("negative degree");
    {
      std::lock_guard lock(cache_->mutex);
      if (auto it = cache_->pieces.find(k); it != cache_->pieces.end()) {
        return it->second;
      }
    }
    MonomialBasis basis(num_vars(), k);
    Subspace span = Subspace::row_space(macaulay_matrix(partials_, basis, field()));
    std::vector<std::size_t> free = span.free_columns();
    std::vector<Monomial> standard;
    standard.reserve(free.size());
    for (std::size_t c : free) standard.push_back(basis[c]);
    auto piece = std::make_shared<const IdealPiece>(
        IdealPiece{k, std::move(basis), std::move(span), std::move(free),
                   std::move(standard)});
    std::lock_guard lock(cache_->mutex);
    return cache_->pieces.try_emplace(k, std::move(piece)).first->second;
  }

  /// dim of the degree-k piece of R/J.
  std::size_t hilbert_value(int k) const {
    if (k < 0) throw PreconditionViolation("negative degree");
    {
      std::lock_guard lock(cache_->mutex);
      if (auto it = cache_->pieces.find(k); it != cache_->pieces.end()) {
        return it->second->standard_columns.size();
      }
      if (auto it = cache_->quotient_dims.find(k);
          it != cache_->quotient_dims.end()) {
        return it->second;
      }
    }
    const MonomialBasis basis(num_vars(), k);
    const std::size_t value =
        basis.size() - rank(macaulay_matrix(partials_, basis, field()));
    std::lock_guard lock(cache_->mutex);
    return cache_->quotient_dims.try_emplace(k, value).first->second;
  }

  std::size_t ideal_dimension(int k) const {
    return count_monomials(num_vars(), k) - hilbert_value(k);
  }

  std::vector<Monomial> coset_basis(int k) const {
    return ideal_piece(k)->standard_monomials;
  }

  /// Normal form of [G] in the coset basis of degree k; zero iff G ∈ J_k.
  Vector reduce_mod_ideal(const Polynomial& g, int k) const {
    if (g.field() != field()) throw FieldMismatch();
    if (g.num_vars() != num_vars()) {
      throw DimensionMismatch("polynomial lives in a different ring");
    }
    const auto piece = ideal_piece(k);
    if (!g.is_zero() && g.degree() != k) {
      throw PreconditionViolation("expected a form of degree " +
                                  std::to_string(k) + ", got " + g.to_string());
    }
    return piece->span.quotient_coordinates(g.coordinates(piece->monomials));
  }

  bool in_ideal(const Polynomial& g, int k) const {
    return is_zero(reduce_mod_ideal(g, k));
  }

  /// The polynomial Σ c_i m_i over the standard monomials of degree k.
  Polynomial representative(const Vector& coset_coords, int k) const {
    const auto piece = ideal_piece(k);
    if (coset_coords.size() != piece->standard_monomials.size()) {
      throw DimensionMismatch("coset coordinates have wrong length");
    }
    Polynomial p(field(), num_vars());
    for (std::size_t i = 0; i < coset_coords.size(); ++i) {
      p.add_term(piece->standard_monomials[i], coset_coords[i]);
    }
    return p;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const IdealPiece>> pieces;
    std::map<int, std::size_t> quotient_dims;
  };

  Polynomial form_;
  std::vector<Polynomial> partials_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Top nonzero degree (n+1)(d-2) of the Jacobian ring of a smooth form of
/// degree d in n+1 variables.
constexpr int socle_degree(int n, int d) {
  if (n < 1 || d < 2) throw PreconditionViolation("socle_degree needs n >= 1, d >= 2");
  return (n + 1) * (d - 2);
}

/// h^<k>: Macaulay's bound on the next value of a Hilbert function.
inline std::uint64_t macaulay_bound(std::uint64_t h, int k) {
  if (h == 0) return 0;
  auto binom = [](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    if (b > a) return 0;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return static_cast<std::uint64_t>(r);
  };
  std::uint64_t result = 0;
  std::uint64_t rest = h;
  for (int i = k; i >= 1 && rest > 0; --i) {
    std::uint64_t a = static_cast<std::uint64_t>(i);
    while (binom(a + 1, static_cast<std::uint64_t>(i)) <= rest) ++a;
    rest -= binom(a, static_cast<std::uint64_t>(i));
    result += binom(a + 1, static_cast<std::uint64_t>(i) + 1);
  }
  return result;
}

enum class SmoothnessStatus { Smooth, Singular, Unknown };
enum class SmoothnessMethod { ArtinianSocle, ExtendedIdealSweep };

inline const char* to_string(SmoothnessStatus s) {
  switch (s) {
    case SmoothnessStatus::Smooth: return "Smooth";
    case SmoothnessStatus::Singular: return "Singular";
    case SmoothnessStatus::Unknown: return "Unknown";
  }
  return "?";
}
inline const char* to_string(SmoothnessMethod m) {
  return m == SmoothnessMethod::ArtinianSocle ? "ArtinianSocle"
                                              : "ExtendedIdealSweep";
}

struct SmoothnessVerdict {
  SmoothnessStatus status;
  SmoothnessMethod method;
  /// Degree at which the decision fired, or the last degree swept.
  int degree;
  bool is_smooth() const noexcept { return status == SmoothnessStatus::Smooth; }
};

/// Decides whether V(F) is smooth.
///
/// When char ∤ d the partials have no common projective zero iff R/J is
/// Artinian, which is tested at the single degree σ+1.
///
/// When char | d the Euler relation no longer puts F in J, so the ideal
/// (F, F'_0, ..., F'_n) is swept up to `max_degree` (default σ+4). A piece
/// that fills R_k proves smoothness. Singularity is proved by Gotzmann
/// persistence: once the quotient Hilbert function attains Macaulay's bound
/// at some k ≥ d with a nonzero value, it never returns to zero. Otherwise the
/// verdict is Unknown.
inline SmoothnessVerdict smoothness_check(const Polynomial& f,
                                          std::optional<int> max_degree = {}) {
  const JacobianRingModel jr(f);
  const int d = jr.degree();
  const int n = static_cast<int>(jr.num_vars()) - 1;
  if (n < 1) throw PreconditionViolation("need at least two variables");
  const int sigma = socle_degree(n, d);
  const std::uint32_t p = f.field().characteristic();

  if (p == 0 || d % static_cast<int>(p) != 0) {
    const bool artinian = jr.hilbert_value(sigma + 1) == 0;
    return {artinian ? SmoothnessStatus::Smooth : SmoothnessStatus::Singular,
            SmoothnessMethod::ArtinianSocle, sigma + 1};
  }

  const int limit = max_degree.value_or(sigma + 4);
  std::vector<Polynomial> generators = jr.partials();
  generators.push_back(f);
  std::optional<std::uint64_t> previous;
  for (int k = d - 1; k <= limit; ++k) {
    const MonomialBasis basis(jr.num_vars(), k);
    const std::uint64_t h =
        basis.size() - rank(macaulay_matrix(generators, basis, f.field()));
    if (h == 0) {
      return {SmoothnessStatus::Smooth, SmoothnessMethod::ExtendedIdealSweep, k};
    }
    if (previous && k - 1 >= d && h == macaulay_bound(*previous, k - 1)) {
      return {SmoothnessStatus::Singular, SmoothnessMethod::ExtendedIdealSweep, k};
    }
    previous = h;
  }
  return {SmoothnessStatus::Unknown, SmoothnessMethod::ExtendedIdealSweep, limit};
}

struct SmoothSample {
  Polynomial form;
  std::uint64_t seed;  // the seed passed to random_homogeneous
  std::size_t attempts;
};

/// First smooth form among random_homogeneous draws with seeds
/// derive_seed(seed, 0), derive_seed(seed, 1), ...
inline SmoothSample sample_smooth_form(std::size_t num_vars, int d, FieldSpec field,
                                       std::uint64_t seed,
                                       std::size_t max_attempts = 64) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t s = derive_seed(seed, attempt);
    Polynomial f = random_homogeneous(num_vars, d, field, s);
    if (smoothness_check(f).is_smooth()) return {std::move(f), s, attempt + 1};
  }
  throw ResourceRefusal("no smooth form among " + std::to_string(max_attempts) +
                        " draws");
}

}  // namespace hypersect
