#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypersect/error.hpp"
#include "hypersect/jacobian.hpp"
#include "hypersect/matrix.hpp"
#include "hypersect/polynomial.hpp"
#include "hypersect/random.hpp"

namespace hypersect {

/// ×L : (R/J)_a → (R/J)_{a+1} in the standard-monomial coset bases.
struct MultiplicationMap {
  int source_degree;
  int target_degree;
  LinearForm form;
  std::vector<Monomial> source_basis;
  std::vector<Monomial> target_basis;
  ExactMatrix matrix;  // rows: target_basis, cols: source_basis
  std::size_t rank;
  std::vector<Vector> kernel;            // coordinates in source_basis
  std::vector<Polynomial> kernel_forms;  // the same classes as polynomials

  bool injective() const noexcept { return kernel.empty(); }
};

inline MultiplicationMap multiplication_map(const JacobianRingModel& jr,
                                           const LinearForm& l, int a) {
  if (l.field() != jr.field()) throw FieldMismatch();
  if (l.num_vars() != jr.num_vars()) {
    throw DimensionMismatch("linear form lives in a different ring");
  }
  if (a < 0) throw PreconditionViolation("negative source degree");
  const auto source = jr.ideal_piece(a);
  const auto target = jr.ideal_piece(a + 1);

  std::vector<Vector> columns;
  columns.reserve(source->standard_monomials.size());
  for (const Monomial& m : source->standard_monomials) {
    const Polynomial image =
        l.polynomial() * Polynomial::monomial(jr.field(), m, Scalar(jr.field(), 1));
    columns.push_back(jr.reduce_mod_ideal(image, a + 1));
  }
  ExactMatrix matrix = ExactMatrix::from_columns(
      jr.field(), columns, target->standard_monomials.size());
  std::vector<Vector> kernel = kernel_basis(matrix);
  std::vector<Polynomial> forms;
  forms.reserve(kernel.size());
  for (const Vector& v : kernel) forms.push_back(jr.representative(v, a));
  const std::size_t r = source->standard_monomials.size() - kernel.size();
  return MultiplicationMap{a,
                           a + 1,
                           l,
                           source->standard_monomials,
                           target->standard_monomials,
                           std::move(matrix),
                           r,
                           std::move(kernel),
                           std::move(forms)};
}

struct InjectivityResult {
  bool injective;
  std::vector<Vector> kernel;
  std::vector<Polynomial> kernel_forms;
  std::size_t kernel_dimension() const noexcept { return kernel.size(); }
};

/// Whether ×L : (R/J)_a → (R/J)_{a+1} is injective, with a kernel basis.
inline InjectivityResult wlp_injective(const JacobianRingModel& jr,
                                       const LinearForm& l, int a) {
  MultiplicationMap map = multiplication_map(jr, l, a);
  const bool injective = map.injective();
  return {injective, std::move(map.kernel), std::move(map.kernel_forms)};
}

enum class WlpOutcome { WitnessFound, AllTrialsFailed, ExhaustedAllForms };

inline const char* to_string(WlpOutcome o) {
  switch (o) {
    case WlpOutcome::WitnessFound: return "WitnessFound";
    case WlpOutcome::AllTrialsFailed: return "AllTrialsFailed";
    case WlpOutcome::ExhaustedAllForms: return "ExhaustedAllForms";
  }
  return "?";
}

struct WlpWitness {
  std::optional<LinearForm> form;  // set iff outcome == WitnessFound
  int degree;
  std::size_t trials;
  WlpOutcome outcome;
  /// Exhaustive mode only: every form tried without success, with the
  /// dimension of its kernel.
  std::vector<std::pair<LinearForm, std::size_t>> failures;
};

namespace detail {
inline void reverify_witness(const JacobianRingModel& jr, const LinearForm& l,
                             int a) {
  const JacobianRingModel fresh(jr.form());
  if (!wlp_injective(fresh, l, a).injective) {
    throw Error("witness " + l.to_string() + " failed re-verification");
  }
}
}  // namespace detail

/// Samples linear forms with seeds derive_seed(seed, t), t = 0..trials-1, and
/// returns the first injective one. The witness is re-checked on a freshly
/// built model before it is returned.
inline WlpWitness wlp_search(const JacobianRingModel& jr, int a,
                             std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw PreconditionViolation("trials must be >= 1");
  for (std::size_t t = 0; t < trials; ++t) {
    LinearForm l = random_linear_form(jr.num_vars(), jr.field(), derive_seed(seed, t));
    if (wlp_injective(jr, l, a).injective) {
      detail::reverify_witness(jr, l, a);
      return {std::move(l), a, t + 1, WlpOutcome::WitnessFound, {}};
    }
  }
  return {std::nullopt, a, trials, WlpOutcome::AllTrialsFailed, {}};
}

/// Default cap on p^(n+1) for exhaustive enumeration.
inline constexpr std::uint64_t kDefaultEnumerationBound = 1u << 20;

/// Visits every projective class of nonzero linear forms over F_p (first
/// nonzero coefficient normalized to 1), returning the first injective one or
/// certifying that none exists.
inline WlpWitness wlp_exhaustive(
    const JacobianRingModel& jr, int a,
    std::uint64_t enumeration_bound = kDefaultEnumerationBound) {
  const FieldSpec field = jr.field();
  if (field.is_rational()) {
    throw ResourceRefusal("exhaustive enumeration needs a finite field");
  }
  const std::uint64_t p = field.characteristic();
  const std::size_t n = jr.num_vars();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > enumeration_bound) {
      throw ResourceRefusal("p^" + std::to_string(n) + " exceeds the enumeration bound " +
                            std::to_string(enumeration_bound));
    }
  }

  WlpWitness result{std::nullopt, a, 0, WlpOutcome::ExhaustedAllForms, {}};
  for (std::size_t pivot = 0; pivot < n; ++pivot) {
    const std::size_t free_count = n - pivot - 1;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < free_count; ++i) combos *= p;
    for (std::uint64_t code = 0; code < combos; ++code) {
      Vector coeffs = zero_vector(field, n);
      coeffs[pivot] = Scalar(field, 1);
      std::uint64_t rest = code;
      for (std::size_t i = n; i-- > pivot + 1;) {
        coeffs[i] = Scalar::residue(field, static_cast<std::uint32_t>(rest % p));
        rest /= p;
      }
      LinearForm l = LinearForm::from_coefficients(field, coeffs);
      ++result.trials;
      InjectivityResult r = wlp_injective(jr, l, a);
      if (r.injective) {
        detail::reverify_witness(jr, l, a);
        result.form = std::move(l);
        result.outcome = WlpOutcome::WitnessFound;
        return result;
      }
      result.failures.emplace_back(std::move(l), r.kernel_dimension());
    }
  }
  return result;
}

/// Outcome of the characteristic-2 Fermat cubic threefold checks.
struct Char2FermatReport {
  bool product_nonzero = false;        // [ℓm] ≠ 0 in degree 2
  bool product_times_l_zero = false;   // [ℓ²m] = 0 in degree 3
  std::size_t squares_span_dimension = 0;
  bool squares_span_ideal = false;     // span{ℓ² : ℓ ≠ 0} = J_2
  bool square_zero = false;            // variant ℓ = m: [ℓ²] = 0 in degree 2

  bool passed() const noexcept {
    return product_nonzero && product_times_l_zero &&
           squares_span_dimension == 5 && squares_span_ideal && square_zero;
  }
};

/// Over F_2 the partials of the Fermat cubic are the squares X_i², so J is
/// generated by squares of linear forms and ×ℓ kills ℓ·m.
inline Char2FermatReport char2_fermat_demo() {
  const FieldSpec f2 = FieldSpec::prime(2);
  constexpr std::size_t n = 5;
  const JacobianRingModel jr(fermat_form(f2, n, 3));
  const Polynomial l = Polynomial::variable(f2, n, 0);
  const Polynomial m = Polynomial::variable(f2, n, 1);

  Char2FermatReport report;
  report.product_nonzero = !jr.in_ideal(l * m, 2);
  report.product_times_l_zero = jr.in_ideal(l * l * m, 3);
  report.square_zero = jr.in_ideal(l * l, 2);

  const MonomialBasis quadrics(n, 2);
  std::vector<Vector> squares;
  for (std::uint32_t code = 1; code < (1u << n); ++code) {
    Vector coeffs;
    for (std::size_t i = 0; i < n; ++i) {
      coeffs.push_back(Scalar::residue(f2, (code >> (n - 1 - i)) & 1u));
    }
    const Polynomial form = LinearForm::from_coefficients(f2, coeffs).polynomial();
    squares.push_back((form * form).coordinates(quadrics));
  }
  const Subspace square_span =
      Subspace::row_space(ExactMatrix::from_rows(f2, squares, quadrics.size()));
  report.squares_span_dimension = square_span.dimension();
  const auto j2 = jr.ideal_piece(2);
  bool contained = true;
  for (const Vector& s : squares) contained = contained && j2->span.contains(s);
  report.squares_span_ideal =
      contained && square_span.dimension() == j2->span.dimension();
  return report;
}

}  // namespace hypersect
