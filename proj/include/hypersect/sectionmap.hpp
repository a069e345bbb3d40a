#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypersect/error.hpp"
#include "hypersect/jacobian.hpp"
#include "hypersect/lefschetz.hpp"
#include "hypersect/matrix.hpp"
#include "hypersect/polynomial.hpp"
#include "hypersect/transform.hpp"

namespace hypersect {

// Everything here works in coordinates adapted to the hyperplane: after the
// substitution A = coordinates_sending_to_x0(L) the hyperplane is X_0 = 0 and
// the form becomes G = F∘A.

/// V = Σ_j L_j ∂/∂X_j with every L_j a linear form in X_1..X_n (possibly
/// zero). Fields are considered modulo the Euler field Σ_{i≥1} X_i ∂/∂X_i.
struct VectorField {
  std::vector<Polynomial> components;

  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (components[j].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + components[j].to_string() + ")*d/dx" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
  }
};

/// Witness that Σ L_j G'_j = X_0·Q + f_multiple·G. When d is invertible in
/// the field, f_multiple = d·a.
struct TangentCertificate {
  Polynomial quadric;  // Q, of degree d-1
  Scalar f_multiple;
  std::optional<Scalar> a;
};

struct TangentKernelReport {
  ExactMatrix coordinates;  // A with L∘A = X_0
  Polynomial adapted_form;  // F∘A
  std::vector<VectorField> basis;
  std::vector<TangentCertificate> certificates;

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Linear multipliers with Σ M_i F'_i = f_multiple·F.
struct KoszulRelation {
  std::vector<Polynomial> multipliers;
  Scalar f_multiple;
};

enum class EtaleStatus { Etale, NotEtale, SectionSingular };

inline const char* to_string(EtaleStatus s) {
  switch (s) {
    case EtaleStatus::Etale: return "Etale";
    case EtaleStatus::NotEtale: return "NotEtale";
    case EtaleStatus::SectionSingular: return "SectionSingular";
  }
  return "?";
}

struct EtaleVerdict {
  EtaleStatus status;
  std::optional<std::size_t> wlp_kernel_dimension;
  std::optional<std::size_t> tangent_kernel_dimension;
  std::optional<bool> crosscheck_passed;
};

namespace detail {

inline void require_smooth(const Polynomial& f) {
  const SmoothnessVerdict v = smoothness_check(f);
  if (v.status == SmoothnessStatus::Unknown) {
    throw SmoothnessUnknown("smoothness of " + f.to_string() +
                            " undecided up to degree " + std::to_string(v.degree));
  }
  if (v.status == SmoothnessStatus::Singular) {
    throw PreconditionViolation("hypersurface is singular: " + f.to_string());
  }
}

inline bool section_is_singular(const Polynomial& f, const LinearForm& l) {
  const Polynomial section = restrict_to_hyperplane(f, l);
  if (section.is_zero()) return true;  // the hyperplane is a component
  const SmoothnessVerdict v = smoothness_check(section);
  if (v.status == SmoothnessStatus::Unknown) {
    throw SmoothnessUnknown("smoothness of the hyperplane section undecided");
  }
  return v.status == SmoothnessStatus::Singular;
}

/// Coordinate slots of a vector field: slot j*n + (i-1) is the coefficient of
/// X_i in L_j, for j = 0..n and i = 1..n. The slot of X_1 in L_1 is dropped to
/// quotient by the Euler field, whose coordinate there is 1.
struct FieldSlots {
  std::size_t num_vars;
  std::size_t n() const { return num_vars - 1; }
  std::size_t total() const { return num_vars * n(); }
  std::size_t dropped() const { return n(); }
  std::size_t component(std::size_t slot) const { return slot / n(); }
  std::size_t variable(std::size_t slot) const { return slot % n() + 1; }
};

/// Unique (Q, c) with P = X_0·Q + c·G, assuming X_0 does not divide G.
inline TangentCertificate solve_tangent_certificate(const Polynomial& p,
                                                    const Polynomial& g) {
  const FieldSpec field = g.field();
  const int d = *g.degree();
  std::optional<Monomial> anchor;
  for (const auto& [m, c] : g.terms()) {
    if (m[0] == 0) {
      anchor = m;
      break;
    }
  }
  if (!anchor) throw PreconditionViolation("X0 divides the form");
  const Scalar c = p.coefficient(*anchor) / g.coefficient(*anchor);
  const Polynomial rest = p - c * g;
  Polynomial q(field, g.num_vars());
  for (const auto& [m, coeff] : rest.terms()) {
    if (m[0] == 0) throw Error("no certificate: residue outside X0*R + span{F}");
    std::vector<int> e = m.exponents();
    e[0] -= 1;
    q.add_term(Monomial(std::move(e)), coeff);
  }
  const Scalar degree(field, d);
  std::optional<Scalar> a;
  if (!degree.is_zero()) a = c / degree;
  return {std::move(q), c, a};
}

/// Kernel of φ(V) = Σ L_j G'_j into R_d / (X_0·R_{d-1} + span{G}) on the
/// space of vector fields modulo the Euler field.
inline TangentKernelReport tangent_kernel_adapted(ExactMatrix coordinates,
                                                  Polynomial g) {
  const FieldSpec field = g.field();
  const std::size_t nv = g.num_vars();
  const int d = *g.degree();
  const FieldSlots slots{nv};
  const std::vector<Polynomial> partials = gradient(g);

  const MonomialBasis target(nv, d);
  std::vector<Vector> generators;
  const Polynomial x0 = Polynomial::variable(field, nv, 0);
  for (const Monomial& m : monomials_of_degree(nv, d - 1)) {
    generators.push_back(
        (x0 * Polynomial::monomial(field, m, Scalar(field, 1))).coordinates(target));
  }
  generators.push_back(g.coordinates(target));
  const Subspace section_ideal =
      Subspace::row_space(ExactMatrix::from_rows(field, generators, target.size()));

  std::vector<std::size_t> kept;
  std::vector<Vector> columns;
  for (std::size_t s = 0; s < slots.total(); ++s) {
    if (s == slots.dropped()) continue;
    kept.push_back(s);
    const Polynomial image =
        Polynomial::variable(field, nv, slots.variable(s)) * partials[slots.component(s)];
    columns.push_back(section_ideal.quotient_coordinates(image.coordinates(target)));
  }
  const std::size_t codim = target.size() - section_ideal.dimension();
  const ExactMatrix phi = ExactMatrix::from_columns(field, columns, codim);

  TangentKernelReport report{std::move(coordinates), g, {}, {}};
  for (const Vector& v : kernel_basis(phi)) {
    VectorField field_v;
    field_v.components.assign(nv, Polynomial(field, nv));
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const std::size_t s = kept[k];
      field_v.components[slots.component(s)].add_term(
          Monomial::variable(nv, slots.variable(s)), v[k]);
    }
    Polynomial image(field, nv);
    for (std::size_t j = 0; j < nv; ++j) image += field_v.components[j] * partials[j];
    report.certificates.push_back(solve_tangent_certificate(image, g));
    report.basis.push_back(std::move(field_v));
  }
  return report;
}

inline TangentKernelReport tangent_kernel_unchecked(const Polynomial& f,
                                                    const LinearForm& l) {
  ExactMatrix a = coordinates_sending_to_x0(l);
  Polynomial g = change_of_coordinates(f, a);
  return tangent_kernel_adapted(std::move(a), std::move(g));
}

inline void require_same_ring(const Polynomial& f, const LinearForm& l) {
  if (f.field() != l.field()) throw FieldMismatch();
  if (f.num_vars() != l.num_vars()) {
    throw DimensionMismatch("hyperplane and form live in different rings");
  }
}

}  // namespace detail

/// Coordinates of V in the kept slots after removing its Euler component.
inline Vector vector_field_coordinates(const VectorField& v) {
  const std::size_t nv = v.components.size();
  const detail::FieldSlots slots{nv};
  for (const Polynomial& c : v.components) {
    if (!c.coefficient(Monomial::variable(nv, 0)).is_zero()) {
      throw PreconditionViolation("vector field components must not involve x0");
    }
  }
  const Scalar euler = v.components[1].coefficient(Monomial::variable(nv, 1));
  Vector out;
  for (std::size_t s = 0; s < slots.total(); ++s) {
    if (s == slots.dropped()) continue;
    const std::size_t j = slots.component(s);
    const std::size_t i = slots.variable(s);
    Scalar c = v.components[j].coefficient(Monomial::variable(nv, i));
    if (j == i) c -= euler;
    out.push_back(c);
  }
  return out;
}

/// Whether V (given in adapted coordinates) lies in the reported kernel.
inline bool tangent_kernel_contains(const TangentKernelReport& report,
                                    const VectorField& v) {
  const Vector target = vector_field_coordinates(v);
  if (report.basis.empty()) return is_zero(target);
  std::vector<Vector> rows;
  for (const VectorField& b : report.basis) rows.push_back(vector_field_coordinates(b));
  return Subspace::row_space(ExactMatrix::from_rows(target.front().field(), rows,
                                                    target.size()))
      .contains(target);
}

/// Whether the hyperplane L = 0 lies on the dual hypersurface, i.e. whether
/// the section is singular. F must be smooth.
inline bool dual_membership(const Polynomial& f, const LinearForm& l) {
  detail::require_same_ring(f, l);
  detail::require_smooth(f);
  return detail::section_is_singular(f, l);
}

/// Kernel of (M_0..M_n) ↦ Σ M_i F'_i from (R_1)^{n+1} to R_d / span{F}.
/// Slot i*(n+1)+k is the coefficient of X_k in M_i.
inline std::vector<KoszulRelation> koszul_linear_relations(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous()) {
    throw PreconditionViolation("koszul_linear_relations needs a nonzero form");
  }
  const FieldSpec field = f.field();
  const std::size_t nv = f.num_vars();
  const int d = *f.degree();
  const std::vector<Polynomial> partials = gradient(f);
  const MonomialBasis target(nv, d);
  const Subspace span_f = Subspace::row_space(
      ExactMatrix::from_rows(field, {f.coordinates(target)}, target.size()));

  std::vector<Vector> columns;
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t k = 0; k < nv; ++k) {
      const Polynomial image = Polynomial::variable(field, nv, k) * partials[i];
      columns.push_back(span_f.quotient_coordinates(image.coordinates(target)));
    }
  }
  const ExactMatrix map = ExactMatrix::from_columns(
      field, columns, target.size() - span_f.dimension());

  const Monomial lead = f.terms().begin()->first;
  std::vector<KoszulRelation> relations;
  for (const Vector& v : kernel_basis(map)) {
    KoszulRelation rel{{}, Scalar(field)};
    Polynomial image(field, nv);
    for (std::size_t i = 0; i < nv; ++i) {
      Polynomial m(field, nv);
      for (std::size_t k = 0; k < nv; ++k) {
        m.add_term(Monomial::variable(nv, k), v[i * nv + k]);
      }
      image += m * partials[i];
      rel.multipliers.push_back(std::move(m));
    }
    rel.f_multiple = image.coefficient(lead) / f.coefficient(lead);
    relations.push_back(std::move(rel));
  }
  return relations;
}

/// True iff the relations span exactly the line of the Euler tuple
/// (X_0, ..., X_n).
inline bool spans_only_euler(const std::vector<KoszulRelation>& relations) {
  if (relations.size() != 1) return false;
  const auto& m = relations.front().multipliers;
  const std::size_t nv = m.size();
  const FieldSpec field = m.front().field();
  const Scalar scale =
      m.front().coefficient(Monomial::variable(nv, 0));
  if (scale.is_zero()) return false;
  for (std::size_t i = 0; i < nv; ++i) {
    if (m[i] != scale * Polynomial::variable(field, nv, i)) return false;
  }
  return true;
}

/// Kernel of φ for the section of a smooth F by a hyperplane with smooth
/// section, with a (Q, a) certificate for every basis field.
inline TangentKernelReport tangent_kernel(const Polynomial& f, const LinearForm& l) {
  detail::require_same_ring(f, l);
  detail::require_smooth(f);
  if (detail::section_is_singular(f, l)) {
    throw PreconditionViolation("hyperplane " + l.to_string() +
                                " has a singular section");
  }
  return detail::tangent_kernel_unchecked(f, l);
}

/// Étale test for a smooth cubic threefold at the hyperplane L = 0.
inline EtaleVerdict etale_check(const Polynomial& f, const LinearForm& l) {
  detail::require_same_ring(f, l);
  if (f.num_vars() != 5 || f.degree() != 3) {
    throw PreconditionViolation(
        "etale_check is defined for cubic forms in 5 variables; "
        "use unramified_check for other (n, d)");
  }
  detail::require_smooth(f);
  if (detail::section_is_singular(f, l)) {
    return {EtaleStatus::SectionSingular, std::nullopt, std::nullopt, std::nullopt};
  }
  const JacobianRingModel jr(f);
  const std::size_t wlp_kernel = wlp_injective(jr, l, 2).kernel_dimension();
  const std::size_t tangent = detail::tangent_kernel_unchecked(f, l).dimension();
  return {wlp_kernel == 0 ? EtaleStatus::Etale : EtaleStatus::NotEtale, wlp_kernel,
          tangent, (wlp_kernel == 0) == (tangent == 0)};
}

/// Tangent field → class direction for one basis field.
struct TangentToClassCheck {
  VectorField field;
  TangentCertificate certificate;
  bool identity_holds = false;   // Σ L_j G'_j = X_0 Q + c G exactly
  bool product_in_ideal = false; // [X_0 Q] = 0 in degree d
  bool class_nonzero = false;    // [Q] ≠ 0 in degree d-1
  bool ok() const noexcept { return identity_holds && product_in_ideal && class_nonzero; }
};

/// Class → tangent field direction for one ×X_0-kernel class.
struct ClassToTangentCheck {
  Polynomial quadric;  // normalized Q
  VectorField field;   // X_0-free components
  bool identity_holds = false;  // X_0 Q - Σ L_j G'_j ∈ span{G}
  bool field_nonzero = false;   // V nonzero modulo the Euler field
  bool class_nonzero = false;   // [Q] ≠ 0
  bool ok() const noexcept { return identity_holds && field_nonzero && class_nonzero; }
};

struct CrosscheckReport {
  std::size_t wlp_kernel_dimension = 0;          // ×L on R/J(F)
  std::size_t adapted_wlp_kernel_dimension = 0;  // ×X_0 on R/J(F∘A)
  std::size_t tangent_kernel_dimension = 0;
  bool equivalence_holds = false;
  bool tangent_classes_independent = false;
  std::vector<TangentToClassCheck> tangent_to_class;
  std::vector<ClassToTangentCheck> class_to_tangent;

  bool passed() const noexcept {
    if (!equivalence_holds || !tangent_classes_independent) return false;
    if (adapted_wlp_kernel_dimension != wlp_kernel_dimension) return false;
    for (const auto& c : tangent_to_class) {
      if (!c.ok()) return false;
    }
    for (const auto& c : class_to_tangent) {
      if (!c.ok()) return false;
    }
    return true;
  }
};

/// Checks both implications of the étale criterion on one (F, L): the kernels
/// of ×L (degree d-1) and of φ vanish together, every tangent-kernel field
/// yields a nonzero class Q killed by X_0, and every class killed by X_0
/// yields a nonzero field V with φ(V) = 0.
inline CrosscheckReport proposition_crosscheck(const Polynomial& f,
                                               const LinearForm& l) {
  detail::require_same_ring(f, l);
  if (f.num_vars() < 4 || !f.degree() || *f.degree() < 3) {
    throw PreconditionViolation("crosscheck needs d >= 3 and at least 4 variables");
  }
  detail::require_smooth(f);
  if (detail::section_is_singular(f, l)) {
    throw PreconditionViolation("hyperplane " + l.to_string() +
                                " has a singular section");
  }
  const FieldSpec field = f.field();
  const std::size_t nv = f.num_vars();
  const int d = *f.degree();

  CrosscheckReport report;
  report.wlp_kernel_dimension =
      wlp_injective(JacobianRingModel(f), l, d - 1).kernel_dimension();
  const TangentKernelReport tangent = detail::tangent_kernel_unchecked(f, l);
  report.tangent_kernel_dimension = tangent.dimension();
  report.equivalence_holds =
      (report.wlp_kernel_dimension == 0) == (report.tangent_kernel_dimension == 0);

  const Polynomial& g = tangent.adapted_form;
  const JacobianRingModel jg(g);
  const std::vector<Polynomial>& partials = jg.partials();
  const Polynomial x0 = Polynomial::variable(field, nv, 0);
  const LinearForm x0_form = LinearForm::variable(field, nv, 0);
  const InjectivityResult adapted = wlp_injective(jg, x0_form, d - 1);
  report.adapted_wlp_kernel_dimension = adapted.kernel_dimension();

  std::vector<Vector> q_classes;
  for (std::size_t b = 0; b < tangent.dimension(); ++b) {
    TangentToClassCheck check{tangent.basis[b], tangent.certificates[b]};
    const Polynomial& q = check.certificate.quadric;
    Polynomial lhs(field, nv);
    for (std::size_t j = 0; j < nv; ++j) lhs += check.field.components[j] * partials[j];
    check.identity_holds = lhs == x0 * q + check.certificate.f_multiple * g;
    check.product_in_ideal = jg.in_ideal(x0 * q, d);
    q_classes.push_back(jg.reduce_mod_ideal(q, d - 1));
    check.class_nonzero = !is_zero(q_classes.back());
    report.tangent_to_class.push_back(std::move(check));
  }
  report.tangent_classes_independent =
      q_classes.empty() ||
      rank(ExactMatrix::from_rows(field, q_classes, q_classes.front().size())) ==
          q_classes.size();

  // Solve X_0 Q = Σ_{i,k} λ_{ik} X_k G'_i, then move the X_0-parts of the
  // multipliers into Q.
  const MonomialBasis degree_d(nv, d);
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t k = 0; k < nv; ++k) {
      columns.push_back(
          (Polynomial::variable(field, nv, k) * partials[i]).coordinates(degree_d));
    }
  }
  const ExactMatrix generator_map =
      ExactMatrix::from_columns(field, columns, degree_d.size());
  for (const Polynomial& q0 : adapted.kernel_forms) {
    ClassToTangentCheck check{q0, VectorField{}};
    const auto lambda = solve(generator_map, (x0 * q0).coordinates(degree_d));
    if (!lambda) {
      report.class_to_tangent.push_back(std::move(check));
      continue;
    }
    Polynomial q = q0;
    check.field.components.assign(nv, Polynomial(field, nv));
    for (std::size_t i = 0; i < nv; ++i) {
      const Scalar x0_coeff = (*lambda)[i * nv];
      q -= x0_coeff * partials[i];
      for (std::size_t k = 1; k < nv; ++k) {
        check.field.components[i].add_term(Monomial::variable(nv, k),
                                           (*lambda)[i * nv + k]);
      }
    }
    check.quadric = q;
    Polynomial residue = x0 * q;
    for (std::size_t j = 0; j < nv; ++j) residue -= check.field.components[j] * partials[j];
    if (residue.is_zero()) {
      check.identity_holds = true;
    } else {
      const Monomial lead = g.terms().begin()->first;
      const Scalar ratio = residue.coefficient(lead) / g.coefficient(lead);
      check.identity_holds = residue == ratio * g;
    }
    // Subtract the Euler part measured at the dropped slot.
    const Scalar euler = check.field.components[1].coefficient(Monomial::variable(nv, 1));
    bool nonzero = false;
    for (std::size_t j = 0; j < nv && !nonzero; ++j) {
      Polynomial c = check.field.components[j];
      if (j >= 1) c -= euler * Polynomial::variable(field, nv, j);
      nonzero = !c.is_zero();
    }
    check.field_nonzero = nonzero;
    check.class_nonzero = !jg.in_ideal(q, d - 1);
    report.class_to_tangent.push_back(std::move(check));
  }
  return report;
}

struct ContractedLine {
  long long t;
  std::size_t kernel_dimension;
  bool exhibited_in_kernel;     // (X_0 - tX_1)(X_0 + tX_1)X_j ∈ J_3
  bool exhibited_independent;   // [(X_0 + tX_1)X_j], j = 2,3,4, independent
  bool ok() const noexcept {
    return kernel_dimension >= 3 && exhibited_in_kernel && exhibited_independent;
  }
};

/// Fermat cubic threefold over Q, hyperplanes X_0 = tX_1.
inline std::vector<ContractedLine> contracted_lines_demo(
    const std::vector<long long>& t_values = {0, 1, 2, 3}) {
  const FieldSpec q = FieldSpec::rationals();
  constexpr std::size_t nv = 5;
  const JacobianRingModel jr(fermat_form(q, nv, 3));
  const Polynomial x0 = Polynomial::variable(q, nv, 0);
  const Polynomial x1 = Polynomial::variable(q, nv, 1);
  std::vector<ContractedLine> rows;
  for (long long t : t_values) {
    const Scalar ts(q, t);
    const LinearForm l(x0 - ts * x1);
    const Polynomial partner = x0 + ts * x1;
    ContractedLine row{t, wlp_injective(jr, l, 2).kernel_dimension(), true, false};
    std::vector<Vector> classes;
    for (std::size_t j = 2; j < nv; ++j) {
      const Polynomial e = partner * Polynomial::variable(q, nv, j);
      classes.push_back(jr.reduce_mod_ideal(e, 2));
      row.exhibited_in_kernel = row.exhibited_in_kernel && jr.in_ideal(l.polynomial() * e, 3);
    }
    row.exhibited_independent =
        rank(ExactMatrix::from_rows(q, classes, classes.front().size())) == 3;
    rows.push_back(row);
  }
  return rows;
}

struct UnramifiedVerdict {
  bool unramified;
  std::size_t kernel_dimension;
  int source_degree;
};

/// General (n, d): unramified at L = 0 iff ×L : (R/J)_{d-1} → (R/J)_d is
/// injective.
inline UnramifiedVerdict unramified_check(const Polynomial& f, const LinearForm& l) {
  detail::require_same_ring(f, l);
  if (f.num_vars() < 4 || !f.degree() || *f.degree() < 3) {
    throw PreconditionViolation("unramified_check needs d >= 3 and at least 4 variables");
  }
  detail::require_smooth(f);
  if (detail::section_is_singular(f, l)) {
    throw PreconditionViolation("hyperplane " + l.to_string() +
                                " has a singular section");
  }
  const int d = *f.degree();
  const InjectivityResult r = wlp_injective(JacobianRingModel(f), l, d - 1);
  return {r.injective, r.kernel_dimension(), d - 1};
}

}  // namespace hypersect
