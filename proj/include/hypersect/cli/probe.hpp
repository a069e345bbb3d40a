#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hypersect/error.hpp"
#include "hypersect/jacobian.hpp"
#include "hypersect/lefschetz.hpp"
#include "hypersect/random.hpp"

namespace hypersect::cli {

struct ProbeConfig {
  int n = 4;  // projective dimension: forms in n+1 variables
  int d = 3;
  FieldSpec field = FieldSpec::rationals();
  std::size_t samples = 20;
  std::uint64_t master_seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  std::size_t max_dimension = 2000;  // guard on dim R_d
  /// Guard on the largest graded piece the smoothness test touches.
  std::size_t max_work_dimension = 20000;
};

/// One random form F and one random linear form L, tested at degree d-1.
struct ProbeRecord {
  int n;
  int d;
  std::uint32_t characteristic;
  std::size_t sample;
  std::uint64_t seed;
  SmoothnessStatus smooth;
  std::optional<bool> wlp_injective;  // empty unless F is smooth
  std::optional<std::size_t> kernel_dimension;
  double ms;
};

inline constexpr const char* kProbeCsvHeader =
    "n,d,char,sample,seed,smooth,wlp_injective,kernel_dim,ms";

/// Throws PreconditionViolation for bad (n, d) and ResourceRefusal when
/// dim R_d, or the piece of R in which smoothness is decided, is too large.
inline void validate_probe(const ProbeConfig& config) {
  if (config.n < 1) throw PreconditionViolation("probe needs n >= 1");
  if (config.d < 2) throw PreconditionViolation("probe needs d >= 2");
  const std::size_t dim = count_monomials(static_cast<std::size_t>(config.n) + 1, config.d);
  if (dim > config.max_dimension) {
    throw ResourceRefusal("dim R_d = " + std::to_string(dim) + " exceeds the limit " +
                          std::to_string(config.max_dimension));
  }
  const std::uint32_t p = config.field.characteristic();
  const bool sweep = p != 0 && config.d % static_cast<int>(p) == 0;
  const int top = socle_degree(config.n, config.d) + (sweep ? 4 : 1);
  const std::size_t work = count_monomials(static_cast<std::size_t>(config.n) + 1, top);
  if (work > config.max_work_dimension) {
    throw ResourceRefusal("dim R_" + std::to_string(top) + " = " + std::to_string(work) +
                          " exceeds the limit " + std::to_string(config.max_work_dimension));
  }
}

inline ProbeRecord probe_sample(const ProbeConfig& config, std::size_t index) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t nv = static_cast<std::size_t>(config.n) + 1;
  const std::uint64_t seed = derive_seed(config.master_seed, index);
  const Polynomial f = random_homogeneous(nv, config.d, config.field, seed);
  ProbeRecord record{config.n, config.d, config.field.characteristic(), index, seed,
                     smoothness_check(f).status, std::nullopt, std::nullopt, 0.0};
  if (record.smooth == SmoothnessStatus::Smooth) {
    const LinearForm l = random_linear_form(nv, config.field, derive_seed(seed, 1));
    const InjectivityResult r = wlp_injective(JacobianRingModel(f), l, config.d - 1);
    record.wlp_injective = r.injective;
    record.kernel_dimension = r.kernel_dimension();
  }
  record.ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return record;
}

/// Runs every sample on a small worker pool. Records come back ordered by
/// sample index whatever the scheduling.
inline std::vector<ProbeRecord> run_probe(const ProbeConfig& config) {
  validate_probe(config);
  std::vector<std::optional<ProbeRecord>> slots(config.samples);
  unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::max<std::size_t>(1, config.samples))));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < config.samples; i = next++) {
        slots[i] = probe_sample(config, i);
      }
    } catch (...) {
      errors[id] = std::current_exception();
      next = config.samples;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < workers; ++id) pool.emplace_back(work, id);
  work(0);
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ProbeRecord> records;
  records.reserve(slots.size());
  for (auto& s : slots) records.push_back(std::move(*s));
  return records;
}

inline std::string probe_csv_row(const ProbeRecord& r) {
  std::ostringstream row;
  row << r.n << ',' << r.d << ',' << r.characteristic << ',' << r.sample << ',' << r.seed
      << ',' << to_string(r.smooth) << ',';
  if (r.wlp_injective) row << (*r.wlp_injective ? "true" : "false");
  row << ',';
  if (r.kernel_dimension) row << *r.kernel_dimension;
  row << ',' << std::fixed << std::setprecision(3) << r.ms;
  return row.str();
}

inline void write_probe_csv(std::ostream& out, const std::vector<ProbeRecord>& records) {
  out << kProbeCsvHeader << '\n';
  for (const ProbeRecord& r : records) out << probe_csv_row(r) << '\n';
}

}  // namespace hypersect::cli
