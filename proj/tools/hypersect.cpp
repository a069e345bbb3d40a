// hypersect: command-line front end for the Jacobian ring, Lefschetz and
// hyperplane-section computations.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypersect/cli/commands.hpp"
#include "hypersect/cli/probe.hpp"
#include "hypersect/cli/report.hpp"
#include "hypersect/error.hpp"
#include "hypersect/field.hpp"
#include "hypersect/parse.hpp"

namespace {

using namespace hypersect;
using namespace hypersect::cli;

struct Options {
  std::string field = "Q";
  std::string poly;
  std::string poly_file;
  std::size_t nvars = 0;  // 0: one more than the largest index seen
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  int max_degree = -1;
  int degree = -1;
  std::string out;
  std::string hyperplane;
  bool exhaustive = false;
  std::string demo;
  int n = 4;
  int d = 3;
  std::size_t samples = 20;
  unsigned threads = 0;
};

std::size_t infer_num_vars(const std::string& text) {
  std::size_t nv = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x' || i + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      continue;
    }
    std::size_t j = i + 1;
    std::size_t index = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      index = index * 10 + static_cast<std::size_t>(text[j] - '0');
      if (index > 1000) throw PreconditionViolation("variable index too large");
      ++j;
    }
    nv = std::max(nv, index + 1);
  }
  return nv;
}

std::string read_polynomial_text(const Options& o) {
  if (!o.poly.empty() && !o.poly_file.empty()) {
    throw PreconditionViolation("give either --poly or --poly-file, not both");
  }
  if (!o.poly_file.empty()) {
    std::ifstream in(o.poly_file);
    if (!in) throw PreconditionViolation("cannot read " + o.poly_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  if (o.poly.empty()) throw PreconditionViolation("no polynomial given (--poly or --poly-file)");
  return o.poly;
}

std::optional<int> optional_int(int value) {
  return value < 0 ? std::nullopt : std::optional<int>(value);
}

void add_polynomial_options(CLI::App* sub, Options& o) {
  sub->add_option("--field", o.field, "Q or F<p>")->capture_default_str();
  sub->add_option("--poly", o.poly, "homogeneous form, e.g. \"x0^3 + x1^3\"");
  sub->add_option("--poly-file", o.poly_file, "file holding the form");
  sub->add_option("--nvars", o.nvars, "number of variables (default: inferred)");
  sub->add_flag("--json", o.json, "print the JSON report");
  sub->add_option("--out", o.out, "also write the JSON report to this file");
}

void emit(const Options& o, const CommandOutput& output, const json& envelope) {
  if (o.json) {
    std::cout << envelope.dump(2) << '\n';
  } else {
    for (const std::string& line : output.text) std::cout << line << '\n';
  }
  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file) throw PreconditionViolation("cannot write " + o.out);
    file << envelope.dump(2) << '\n';
  }
}

int run(CLI::App& app, const Options& o, const std::vector<std::string>& echo) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };
  const FieldSpec field = FieldSpec::parse(o.field);

  if (app.got_subcommand("demo")) {
    const CommandOutput output = cmd_demo(o.demo);
    emit(o, output, report::envelope(echo, field.name(), "", output.result, elapsed()));
    return output.exit_code;
  }

  if (app.got_subcommand("probe")) {
    ProbeConfig config;
    config.n = o.n;
    config.d = o.d;
    config.field = field;
    config.samples = o.samples;
    config.master_seed = o.seed;
    config.threads = o.threads;
    const std::vector<ProbeRecord> records = run_probe(config);
    if (o.out.empty()) {
      write_probe_csv(std::cout, records);
      return kExitOk;
    }
    std::ofstream file(o.out);
    if (!file) throw PreconditionViolation("cannot write " + o.out);
    write_probe_csv(file, records);
    std::size_t smooth = 0;
    std::size_t injective = 0;
    for (const ProbeRecord& r : records) {
      smooth += r.smooth == SmoothnessStatus::Smooth;
      injective += r.wlp_injective.value_or(false);
    }
    const json summary = {{"samples", records.size()},
                          {"smooth", smooth},
                          {"wlp_injective", injective},
                          {"csv", o.out}};
    if (o.json) {
      std::cout << report::envelope(echo, field.name(), "", summary, elapsed()).dump(2) << '\n';
    } else {
      std::cout << records.size() << " samples, " << smooth << " smooth, " << injective
                << " WLP-injective; wrote " << o.out << '\n';
    }
    return kExitOk;
  }

  const std::string text = read_polynomial_text(o);
  const std::size_t nv = o.nvars ? o.nvars : infer_num_vars(text);
  const Polynomial f = parse_polynomial(text, field, nv);

  CommandOutput output;
  if (app.got_subcommand("hilbert")) {
    output = cmd_hilbert(f, optional_int(o.max_degree));
  } else if (app.got_subcommand("smooth")) {
    output = cmd_smooth(f, optional_int(o.max_degree));
  } else if (app.got_subcommand("wlp")) {
    WlpRequest request;
    if (!o.hyperplane.empty() && o.exhaustive) {
      throw PreconditionViolation("give either --form or --exhaustive, not both");
    }
    if (!o.hyperplane.empty()) {
      request.mode = WlpRequest::Mode::Given;
      request.form = LinearForm(parse_polynomial(o.hyperplane, field, nv));
    } else if (o.exhaustive) {
      request.mode = WlpRequest::Mode::Exhaustive;
    }
    request.trials = o.trials;
    request.seed = o.seed;
    output = cmd_wlp(f, optional_int(o.degree), request);
  } else if (app.got_subcommand("etale")) {
    if (o.hyperplane.empty()) throw PreconditionViolation("--hyperplane is required");
    output = cmd_etale(f, LinearForm(parse_polynomial(o.hyperplane, field, nv)));
  }
  emit(o, output, report::envelope(echo, field.name(), f.to_string(), output.result, elapsed()));
  return output.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Jacobian rings, weak Lefschetz maps and hyperplane sections of hypersurfaces"};
  app.set_version_flag("--version", std::string(report::kToolVersion));
  app.require_subcommand(1, 1);

  CLI::App* hilbert = app.add_subcommand("hilbert", "dimensions of J_k and (R/J)_k");
  add_polynomial_options(hilbert, o);
  hilbert->add_option("--max-degree", o.max_degree, "last degree (default: socle + 1)");

  CLI::App* smooth = app.add_subcommand("smooth", "decide smoothness of V(F)");
  add_polynomial_options(smooth, o);
  smooth->add_option("--max-degree", o.max_degree, "sweep limit when char | d");

  CLI::App* wlp = app.add_subcommand("wlp", "injectivity of multiplication by a linear form");
  add_polynomial_options(wlp, o);
  wlp->add_option("--degree", o.degree, "source degree (default: d-1)");
  wlp->add_option("--form", o.hyperplane, "test this linear form");
  wlp->add_flag("--exhaustive", o.exhaustive, "try every linear form over F_p");
  wlp->add_option("--trials", o.trials, "random forms to try")->capture_default_str();
  wlp->add_option("--seed", o.seed, "master seed for random forms")->capture_default_str();

  CLI::App* etale = app.add_subcommand("etale", "etale/unramified test at a hyperplane");
  add_polynomial_options(etale, o);
  etale->add_option("--hyperplane", o.hyperplane, "linear form L, e.g. \"x0\"");

  CLI::App* demo = app.add_subcommand("demo", "scripted verifications");
  demo->add_option("name", o.demo, "fermat-kernel, char2, contracted-lines or koszul")
      ->required();
  demo->add_flag("--json", o.json, "print the JSON report");
  demo->add_option("--out", o.out, "also write the JSON report to this file");

  CLI::App* probe = app.add_subcommand("probe", "seeded Monte-Carlo WLP probe, CSV output");
  probe->add_option("--n", o.n, "projective dimension")->capture_default_str();
  probe->add_option("--d", o.d, "degree")->capture_default_str();
  probe->add_option("--field", o.field, "Q or F<p>")->capture_default_str();
  probe->add_option("--samples", o.samples, "number of samples")->capture_default_str();
  probe->add_option("--seed", o.seed, "master seed")->capture_default_str();
  probe->add_option("--threads", o.threads, "worker threads (0: all cores)");
  probe->add_option("--out", o.out, "CSV file (default: stdout)");
  probe->add_flag("--json", o.json, "print the summary as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::vector<std::string> echo(argv + 1, argv + argc);
  try {
    return run(app, o, echo);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ResourceRefusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const SmoothnessUnknown& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kExitRefused;
  } catch (const PreconditionViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const FieldMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitAssertionFailed;
  }
}
