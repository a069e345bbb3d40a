#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersect/cli/report.hpp"
#include "hypersect/error.hpp"
#include "hypersect/jacobian.hpp"
#include "hypersect/lefschetz.hpp"
#include "hypersect/polynomial.hpp"
#include "hypersect/sectionmap.hpp"

namespace hypersect::cli {

using nlohmann::json;

enum ExitCode : int {
  kExitOk = 0,
  kExitAssertionFailed = 1,
  kExitInputError = 2,
  kExitRefused = 3,
};

/// Result payload plus a short human-readable rendering.
struct CommandOutput {
  json result;
  std::vector<std::string> text;
  int exit_code = kExitOk;
};

inline CommandOutput cmd_hilbert(const Polynomial& f, std::optional<int> max_degree = {}) {
  const JacobianRingModel jr(f);
  const int n = static_cast<int>(jr.num_vars()) - 1;
  const int top = max_degree.value_or(socle_degree(n, jr.degree()) + 1);
  if (top < 0) throw PreconditionViolation("max degree must be >= 0");
  CommandOutput out;
  out.result = {{"degrees", json::array()}};
  std::string values;
  for (int k = 0; k <= top; ++k) {
    const std::size_t quotient = jr.hilbert_value(k);
    const std::size_t ideal = jr.ideal_dimension(k);
    out.result["degrees"].push_back(
        {{"k", k}, {"dim_ideal", ideal}, {"dim_quotient", quotient}});
    out.text.push_back("k=" + std::to_string(k) + "  dim J_k=" + std::to_string(ideal) +
                       "  dim (R/J)_k=" + std::to_string(quotient));
    values += (k ? "," : "") + std::to_string(quotient);
  }
  out.text.push_back("hilbert function: " + values);
  return out;
}

inline CommandOutput cmd_smooth(const Polynomial& f, std::optional<int> max_degree = {}) {
  const SmoothnessVerdict v = smoothness_check(f, max_degree);
  CommandOutput out{report::to_json(v), {}, kExitOk};
  out.text.push_back(std::string(to_string(v.status)) + " (" + to_string(v.method) +
                     ", degree " + std::to_string(v.degree) + ")");
  if (v.status == SmoothnessStatus::Unknown) out.exit_code = kExitRefused;
  return out;
}

struct WlpRequest {
  enum class Mode { Given, Search, Exhaustive };
  Mode mode = Mode::Search;
  std::optional<LinearForm> form;  // Mode::Given
  std::size_t trials = 20;         // Mode::Search
  std::uint64_t seed = 0;          // Mode::Search
};

inline CommandOutput cmd_wlp(const Polynomial& f, std::optional<int> degree,
                             const WlpRequest& request) {
  const JacobianRingModel jr(f);
  const int a = degree.value_or(jr.degree() - 1);
  CommandOutput out;
  switch (request.mode) {
    case WlpRequest::Mode::Given: {
      if (!request.form) throw PreconditionViolation("no linear form given");
      const MultiplicationMap m = multiplication_map(jr, *request.form, a);
      out.result = report::to_json(m);
      out.result["mode"] = "given";
      out.text.push_back("x(" + m.form.to_string() + "): degree " + std::to_string(a) +
                         " -> " + std::to_string(a + 1) + ", rank " +
                         std::to_string(m.rank) + ", kernel dimension " +
                         std::to_string(m.kernel.size()));
      for (const Polynomial& k : m.kernel_forms) out.text.push_back("  kernel: " + k.to_string());
      break;
    }
    case WlpRequest::Mode::Search:
    case WlpRequest::Mode::Exhaustive: {
      const bool search = request.mode == WlpRequest::Mode::Search;
      const WlpWitness w =
          search ? wlp_search(jr, a, request.trials, request.seed) : wlp_exhaustive(jr, a);
      out.result = report::to_json(w);
      out.result["mode"] = search ? "search" : "exhaustive";
      std::string line = std::string(to_string(w.outcome)) + " after " +
                         std::to_string(w.trials) + " forms";
      if (w.form) line += ": " + w.form->to_string();
      out.text.push_back(line);
      break;
    }
  }
  return out;
}

/// Cubic threefolds get the étale verdict; other (n, d) with n >= 3, d >= 3
/// get the unramified verdict. Both carry the two-sided crosscheck unless the
/// section is singular.
inline CommandOutput cmd_etale(const Polynomial& f, const LinearForm& l) {
  CommandOutput out;
  const bool threefold = f.num_vars() == 5 && f.degree() == 3;
  if (threefold) {
    const EtaleVerdict v = etale_check(f, l);
    out.result = report::to_json(v);
    out.text.push_back(std::string(to_string(v.status)));
    if (v.status == EtaleStatus::SectionSingular) {
      out.result["crosscheck"] = nullptr;
      return out;
    }
    out.text.back() += ": wlp kernel " + std::to_string(*v.wlp_kernel_dimension) +
                       ", tangent kernel " + std::to_string(*v.tangent_kernel_dimension);
  } else {
    if (dual_membership(f, l)) {
      out.result = {{"status", "SectionSingular"}, {"crosscheck", nullptr}};
      out.text.push_back("SectionSingular");
      return out;
    }
    const UnramifiedVerdict v = unramified_check(f, l);
    out.result = {{"status", v.unramified ? "Unramified" : "Ramified"},
                  {"wlp_kernel_dimension", v.kernel_dimension},
                  {"source_degree", v.source_degree}};
    out.text.push_back(std::string(v.unramified ? "Unramified" : "Ramified") +
                       ": wlp kernel " + std::to_string(v.kernel_dimension));
  }
  const CrosscheckReport check = proposition_crosscheck(f, l);
  out.result["crosscheck"] = report::to_json(check);
  if (!threefold) out.result["tangent_kernel_dimension"] = check.tangent_kernel_dimension;
  out.text.push_back(std::string("crosscheck ") + (check.passed() ? "passed" : "FAILED"));
  for (const auto& c : check.tangent_to_class) {
    out.text.push_back("  field " + c.field.to_string() + "  ->  Q = " +
                       c.certificate.quadric.to_string());
  }
  return out;
}

namespace detail {

struct AssertionLog {
  json entries = json::array();
  std::vector<std::string> text;
  bool all = true;

  void check(const std::string& name, bool passed) {
    entries.push_back({{"name", name}, {"passed", passed}});
    text.push_back(std::string(passed ? "[ok]   " : "[FAIL] ") + name);
    all = all && passed;
  }
};

/// Master seed of the koszul demo's random cubics.
inline constexpr std::uint64_t kKoszulDemoSeed = 20240611;

inline json demo_fermat_kernel(AssertionLog& log) {
  const FieldSpec q = FieldSpec::rationals();
  constexpr std::size_t nv = 5;
  const Polynomial f = fermat_form(q, nv, 3);
  const JacobianRingModel jr(f);
  const LinearForm x0 = LinearForm::variable(q, nv, 0);
  json data;

  const EtaleVerdict verdict = etale_check(f, x0);
  const MultiplicationMap map = multiplication_map(jr, x0, 2);
  const TangentKernelReport tangent = tangent_kernel(f, x0);
  const CrosscheckReport check = proposition_crosscheck(f, x0);
  data["x0"] = {{"verdict", report::to_json(verdict)},
                {"map", report::to_json(map)},
                {"crosscheck", report::to_json(check)}};
  log.check("L = x0: verdict NotEtale", verdict.status == EtaleStatus::NotEtale);
  log.check("L = x0: kernel of xL has dimension 4", map.kernel.size() == 4);

  std::vector<Vector> expected;
  for (std::size_t j = 1; j < nv; ++j) {
    expected.push_back(
        jr.reduce_mod_ideal(x0.polynomial() * Polynomial::variable(q, nv, j), 2));
  }
  const Subspace kernel_span = Subspace::row_space(
      ExactMatrix::from_rows(q, map.kernel, map.source_basis.size()));
  bool classes_match = kernel_span.dimension() == 4 &&
                       rank(ExactMatrix::from_rows(q, expected, map.source_basis.size())) == 4;
  for (const Vector& e : expected) classes_match = classes_match && kernel_span.contains(e);
  log.check("L = x0: kernel classes span {[x0*xj] : j = 1..4}", classes_match);

  log.check("L = x0: tangent kernel has dimension 4", tangent.dimension() == 4);
  bool fields_in_kernel = true;
  for (std::size_t i = 1; i < nv; ++i) {
    VectorField v{std::vector<Polynomial>(nv, Polynomial(q, nv))};
    v.components[0] = Polynomial::variable(q, nv, i);
    fields_in_kernel = fields_in_kernel && tangent_kernel_contains(tangent, v);
  }
  log.check("L = x0: fields xi*d/dx0 lie in the tangent kernel", fields_in_kernel);
  log.check("L = x0: crosscheck passes", check.passed());

  Polynomial sum(q, nv);
  for (std::size_t i = 0; i < nv; ++i) sum += Polynomial::variable(q, nv, i);
  const LinearForm all(sum);
  const EtaleVerdict etale = etale_check(f, all);
  const MultiplicationMap bijective = multiplication_map(jr, all, 2);
  data["sum"] = {{"verdict", report::to_json(etale)}, {"map", report::to_json(bijective)}};
  log.check("L = x0+...+x4: verdict Etale", etale.status == EtaleStatus::Etale);
  log.check("L = x0+...+x4: xL has rank 10", bijective.rank == 10);
  log.check("L = x0+...+x4: tangent kernel is trivial",
            etale.tangent_kernel_dimension == std::size_t{0});

  const LinearForm tangent_plane(Polynomial::variable(q, nv, 0) + Polynomial::variable(q, nv, 1));
  const EtaleVerdict singular = etale_check(f, tangent_plane);
  data["x0+x1"] = {{"verdict", report::to_json(singular)}};
  log.check("L = x0+x1: section is singular",
            singular.status == EtaleStatus::SectionSingular);
  return data;
}

inline json demo_char2(AssertionLog& log) {
  const Char2FermatReport r = char2_fermat_demo();
  const FieldSpec f2 = FieldSpec::prime(2);
  const WlpWitness w = wlp_exhaustive(JacobianRingModel(fermat_form(f2, 5, 3)), 2);
  log.check("[l*m] != 0 in degree 2", r.product_nonzero);
  log.check("[l^2*m] = 0 in degree 3", r.product_times_l_zero);
  log.check("squares of linear forms span a 5-dimensional space equal to J_2",
            r.squares_span_dimension == 5 && r.squares_span_ideal);
  log.check("[l^2] = 0 in degree 2", r.square_zero);
  log.check("no injective xl among all 31 nonzero linear forms",
            w.outcome == WlpOutcome::ExhaustedAllForms && w.trials == 31);
  return {{"report", report::to_json(r)}, {"exhaustive", report::to_json(w)}};
}

inline json demo_contracted_lines(AssertionLog& log) {
  json rows = json::array();
  for (const ContractedLine& row : contracted_lines_demo()) {
    rows.push_back(report::to_json(row));
    log.check("t = " + std::to_string(row.t) + ": kernel dimension " +
                  std::to_string(row.kernel_dimension) +
                  " >= 3, exhibited classes independent and killed",
              row.ok());
  }
  return {{"rows", std::move(rows)}};
}

inline json demo_koszul(AssertionLog& log) {
  const FieldSpec q = FieldSpec::rationals();
  constexpr std::size_t nv = 5;
  json samples = json::array();
  for (std::uint64_t i = 0; i < 10; ++i) {
    const SmoothSample s = sample_smooth_form(nv, 3, q, derive_seed(kKoszulDemoSeed, i));
    const std::vector<KoszulRelation> relations = koszul_linear_relations(s.form);
    const bool euler = spans_only_euler(relations);
    samples.push_back({{"seed", s.seed},
                       {"form", s.form.to_string()},
                       {"relations", relations.size()},
                       {"euler_only", euler}});
    log.check("random smooth cubic " + std::to_string(i) + ": only the Euler relation",
              euler);
  }
  Polynomial cone(q, nv);
  for (std::size_t i = 1; i < nv; ++i) cone += Polynomial::variable(q, nv, i).pow(3);
  const std::size_t cone_relations = koszul_linear_relations(cone).size();
  log.check("cone x1^3+...+x4^3: " + std::to_string(cone_relations) + " relations > 1",
            cone_relations > 1);
  return {{"samples", std::move(samples)},
          {"cone", {{"form", cone.to_string()}, {"relations", cone_relations}}}};
}

}  // namespace detail

inline const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"fermat-kernel", "char2", "contracted-lines",
                                              "koszul"};
  return names;
}

inline CommandOutput cmd_demo(const std::string& name) {
  detail::AssertionLog log;
  json data;
  if (name == "fermat-kernel") {
    data = detail::demo_fermat_kernel(log);
  } else if (name == "char2") {
    data = detail::demo_char2(log);
  } else if (name == "contracted-lines") {
    data = detail::demo_contracted_lines(log);
  } else if (name == "koszul") {
    data = detail::demo_koszul(log);
  } else {
    throw PreconditionViolation("unknown demo '" + name +
                                "' (expected fermat-kernel, char2, contracted-lines or koszul)");
  }
  CommandOutput out;
  out.result = {{"demo", name},
                {"passed", log.all},
                {"assertions", std::move(log.entries)},
                {"data", std::move(data)}};
  out.text = std::move(log.text);
  out.text.push_back(log.all ? "demo passed" : "demo FAILED");
  out.exit_code = log.all ? kExitOk : kExitAssertionFailed;
  return out;
}

}  // namespace hypersect::cli
