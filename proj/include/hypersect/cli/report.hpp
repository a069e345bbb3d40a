#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hypersect/jacobian.hpp"
#include "hypersect/lefschetz.hpp"
#include "hypersect/polynomial.hpp"
#include "hypersect/sectionmap.hpp"

namespace hypersect::report {

using nlohmann::json;

#ifndef HYPERSECT_VERSION
#define HYPERSECT_VERSION "0.1.0"
#endif

inline constexpr const char* kToolName = "hypersect";
inline constexpr const char* kToolVersion = HYPERSECT_VERSION;

inline json strings(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const Polynomial& p : polys) out.push_back(p.to_string());
  return out;
}

inline json to_json(const SmoothnessVerdict& v) {
  return {{"status", to_string(v.status)},
          {"method", to_string(v.method)},
          {"degree", v.degree}};
}

inline json to_json(const MultiplicationMap& m) {
  return {{"form", m.form.to_string()},
          {"source_degree", m.source_degree},
          {"target_degree", m.target_degree},
          {"source_dimension", m.source_basis.size()},
          {"target_dimension", m.target_basis.size()},
          {"rank", m.rank},
          {"injective", m.injective()},
          {"kernel_dimension", m.kernel.size()},
          {"kernel", strings(m.kernel_forms)}};
}

inline json to_json(const WlpWitness& w) {
  json failures = json::array();
  for (const auto& [form, dim] : w.failures) {
    failures.push_back({{"form", form.to_string()}, {"kernel_dimension", dim}});
  }
  return {{"outcome", to_string(w.outcome)},
          {"degree", w.degree},
          {"trials", w.trials},
          {"witness", w.form ? json(w.form->to_string()) : json(nullptr)},
          {"failures", std::move(failures)}};
}

inline json to_json(const VectorField& v) { return v.to_string(); }

inline json to_json(const TangentToClassCheck& c) {
  return {{"field", c.field.to_string()},
          {"quadric", c.certificate.quadric.to_string()},
          {"f_multiple", c.certificate.f_multiple.to_string()},
          {"identity_holds", c.identity_holds},
          {"product_in_ideal", c.product_in_ideal},
          {"class_nonzero", c.class_nonzero},
          {"ok", c.ok()}};
}

inline json to_json(const ClassToTangentCheck& c) {
  return {{"quadric", c.quadric.to_string()},
          {"field", c.field.components.empty() ? json(nullptr)
                                               : json(c.field.to_string())},
          {"identity_holds", c.identity_holds},
          {"field_nonzero", c.field_nonzero},
          {"class_nonzero", c.class_nonzero},
          {"ok", c.ok()}};
}

inline json to_json(const CrosscheckReport& r) {
  json forward = json::array();
  for (const auto& c : r.tangent_to_class) forward.push_back(to_json(c));
  json backward = json::array();
  for (const auto& c : r.class_to_tangent) backward.push_back(to_json(c));
  return {{"passed", r.passed()},
          {"wlp_kernel_dimension", r.wlp_kernel_dimension},
          {"adapted_wlp_kernel_dimension", r.adapted_wlp_kernel_dimension},
          {"tangent_kernel_dimension", r.tangent_kernel_dimension},
          {"equivalence_holds", r.equivalence_holds},
          {"tangent_classes_independent", r.tangent_classes_independent},
          {"tangent_to_class", std::move(forward)},
          {"class_to_tangent", std::move(backward)}};
}

inline json to_json(const EtaleVerdict& v) {
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  return {{"status", to_string(v.status)},
          {"wlp_kernel_dimension", opt(v.wlp_kernel_dimension)},
          {"tangent_kernel_dimension", opt(v.tangent_kernel_dimension)},
          {"crosscheck_passed", opt(v.crosscheck_passed)}};
}

inline json to_json(const Char2FermatReport& r) {
  return {{"product_nonzero", r.product_nonzero},
          {"product_times_l_zero", r.product_times_l_zero},
          {"squares_span_dimension", r.squares_span_dimension},
          {"squares_span_ideal", r.squares_span_ideal},
          {"square_zero", r.square_zero},
          {"passed", r.passed()}};
}

inline json to_json(const ContractedLine& row) {
  return {{"t", row.t},
          {"kernel_dimension", row.kernel_dimension},
          {"exhibited_in_kernel", row.exhibited_in_kernel},
          {"exhibited_independent", row.exhibited_independent},
          {"ok", row.ok()}};
}

inline json to_json(const KoszulRelation& r) {
  return {{"multipliers", strings(r.multipliers)}, {"f_multiple", r.f_multiple.to_string()}};
}

/// Wraps a payload. Everything except "timing" is a function of the
/// arguments, so two runs can be compared after dropping that one key.
inline json envelope(const std::vector<std::string>& command, const std::string& field,
                     const std::string& input, json result, double elapsed_ms) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", command},
          {"field", field},
          {"input", input},
          {"result", std::move(result)},
          {"timing", {{"elapsed_ms", elapsed_ms}}}};
}

}  // namespace hypersect::report
