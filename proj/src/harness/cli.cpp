#include "supent/harness/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "supent/bounds.hpp"
#include "supent/error.hpp"
#include "supent/harness/audit.hpp"
#include "supent/harness/report.hpp"
#include "supent/harness/state_file.hpp"
#include "supent/harness/sweep.hpp"
#include "supent/harness/worked_examples.hpp"

namespace supent::harness {

namespace {

using nlohmann::json;

constexpr double kUnitTol = 1e-8;

double parse_double(const std::string& s, const std::string& what) {
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (s.empty() || end != begin + s.size() || errno == ERANGE || !std::isfinite(v)) {
    fail(ErrorKind::ParseError, "cannot read " + what + " from '" + s + "'");
  }
  return v;
}

std::uint64_t parse_seed(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (s.empty() || s.front() == '-') throw std::invalid_argument("sign");
    v = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad seed '" + s + "'");
  }
  if (used != s.size()) fail(ErrorKind::ParseError, "bad seed '" + s + "'");
  return v;
}

struct LoadedState {
  BipartiteState state;
  std::string label;
  double input_norm;
};

LoadedState load_normalized(const std::string& path) {
  StateFile f = load_state_file(path);
  const double n = std::sqrt(norm_squared(f.state));
  if (n == 0.0) fail(ErrorKind::ZeroState, path + ": all amplitudes are zero");
  return {f.state.normalized(), std::move(f.label), n};
}

json state_info(const std::string& path, const LoadedState& s) {
  return {{"file", path},
          {"label", s.label},
          {"dim_a", s.state.dim_a()},
          {"dim_b", s.state.dim_b()},
          {"input_norm", s.input_norm}};
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

Complex parse_coefficient(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text, "coefficient"), 0.0};
  return {parse_double(text.substr(0, comma), "real part"),
          parse_double(text.substr(comma + 1), "imaginary part")};
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement bounds for superpositions of bipartite pure states", "supent"};
  app.require_subcommand(1);

  std::string psi_path, phi_path, alpha_text, beta_text;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Certify every bound for alpha*psi + beta*phi");
  analyze->add_option("--psi", psi_path, "State file for psi")->required();
  analyze->add_option("--phi", phi_path, "State file for phi")->required();
  analyze->add_option("--alpha", alpha_text, "Coefficient of psi, RE[,IM]")->required();
  analyze->add_option("--beta", beta_text, "Coefficient of phi, RE[,IM]")->required();
  analyze->add_flag("--json", analyze_json, "Emit a JSON document");

  auto* examples = app.add_subcommand("examples", "Reproduce the worked examples");

  std::string family_name, dims_text, csv_path;
  unsigned sweep_threads = default_threads();
  auto* sweep = app.add_subcommand("sweep", "Bounds along the diagonal family as d grows");
  sweep->add_option("--family", family_name, "example3 or example4")->required();
  sweep->add_option("--dims", dims_text, "Comma-separated dimensions, each >= 2")->required();
  sweep->add_option("--out", csv_path, "CSV output (stdout if omitted)");
  sweep->add_option("--threads", sweep_threads, "Worker threads");

  std::size_t trials = 1000, max_dim = 6;
  std::optional<std::string> seed_text;
  unsigned audit_threads = default_threads();
  bool audit_json = false;
  auto* audit = app.add_subcommand("audit", "Random check of lower <= exact <= upper");
  audit->add_option("--trials", trials, "Number of problems")->check(CLI::PositiveNumber);
  audit->add_option("--max-dim", max_dim, "Largest local dimension")->check(CLI::PositiveNumber);
  audit->add_option("--seed", seed_text, "Seed (falls back to SUPENT_SEED)");
  audit->add_option("--threads", audit_threads, "Worker threads");
  audit->add_flag("--json", audit_json, "Emit a JSON document");

  std::size_t grid = 64;
  bool subspace_json = false;
  auto* subspace = app.add_subcommand("subspace", "Lower bound over the span of psi and phi");
  subspace->add_option("--psi", psi_path, "State file for psi")->required();
  subspace->add_option("--phi", phi_path, "State file for phi")->required();
  subspace->add_option("--grid", grid, "Grid points per axis")->check(CLI::Range(2, 4096));
  subspace->add_flag("--json", subspace_json, "Emit a JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    const auto parsed = app.get_subcommands();
    err << "error: " << e.what() << "\n\n" << (parsed.empty() ? &app : parsed.front())->help();
    return 1;
  }

  try {
    if (*analyze) {
      const LoadedState psi = load_normalized(psi_path);
      const LoadedState phi = load_normalized(phi_path);
      const Complex alpha = parse_coefficient(alpha_text);
      const Complex beta = parse_coefficient(beta_text);
      const double unit = std::norm(alpha) + std::norm(beta);
      if (std::abs(unit - 1.0) > kUnitTol) {
        err << "error: |alpha|^2 + |beta|^2 = " << unit << ", expected 1\n";
        return 1;
      }
      const BoundReport r = certify(psi.state, phi.state, alpha, beta);
      if (analyze_json) {
        json doc = {{"psi", state_info(psi_path, psi)},
                    {"phi", state_info(phi_path, phi)},
                    {"alpha", complex_to_json(alpha)},
                    {"beta", complex_to_json(beta)},
                    {"report", to_json(r)}};
        out << doc.dump(2) << "\n";
      } else {
        for (const auto* s : {&psi, &phi}) {
          if (std::abs(s->input_norm - 1.0) > kUnitTol) {
            out << "note: " << (s == &psi ? "psi" : "phi") << " normalized from norm "
                << s->input_norm << "\n";
          }
        }
        out << format_report(r);
      }
      return 0;
    }
    if (*examples) {
      out << format_examples_table(run_examples());
      return 0;
    }
    if (*sweep) {
      const Family fam = parse_family(family_name);
      const auto records = dimension_sweep(parse_dim_list(dims_text), fam, sweep_threads);
      if (csv_path.empty()) {
        out << sweep_csv(records);
      } else {
        write_sweep_csv(csv_path, records);
        out << "wrote " << records.size() << " rows to " << csv_path << "\n";
      }
      return 0;
    }
    if (*audit) {
      AuditOptions opt;
      opt.trials = trials;
      opt.max_dim = max_dim;
      opt.threads = audit_threads;
      if (seed_text) {
        opt.seed = parse_seed(*seed_text);
      } else if (const char* env = std::getenv("SUPENT_SEED")) {
        opt.seed = parse_seed(env);
      }
      const AuditSummary s = random_audit(opt);
      if (audit_json) {
        json doc = s.to_json();
        doc["seed"] = opt.seed;
        doc["max_dim"] = opt.max_dim;
        out << doc.dump(2) << "\n";
      } else {
        out << "seed                 " << opt.seed << "\n" << s.to_text();
      }
      return s.clean() ? 0 : 1;
    }
    if (*subspace) {
      const LoadedState psi = load_normalized(psi_path);
      const LoadedState phi = load_normalized(phi_path);
      const SubspaceBound b = subspace_lower(psi.state, phi.state, grid);
      if (subspace_json) {
        json doc = {{"psi", state_info(psi_path, psi)},
                    {"phi", state_info(phi_path, phi)},
                    {"value", b.value},
                    {"p", b.p},
                    {"phase", b.phase},
                    {"points", b.points}};
        out << doc.dump(2) << "\n";
      } else {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "subspace lower bound  %.12g\nat p = %.6g, phase = %.6g\ngrid points  %zu\n",
                      b.value, b.p, b.phase, b.points);
        out << buf;
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.is_input_error() ? 1 : 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace supent::harness
