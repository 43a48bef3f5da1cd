#include "supent/harness/worked_examples.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "supent/bounds.hpp"
#include "supent/harness/families.hpp"
#include "supent/harness/sweep.hpp"
#include "supent/qmath.hpp"

namespace supent::harness {

namespace {

constexpr std::size_t kLargeD = (std::size_t{1} << 16) + 1;
constexpr double kTight = 1e-9;

class Table {
 public:
  explicit Table(std::string example) : example_(std::move(example)) {}

  void check(std::string quantity, double expected, double computed, double tol,
             std::string note = {}) {
    const bool ok = std::abs(computed - expected) <= tol;
    rows_.push_back({example_, std::move(quantity), expected, computed, tol,
                     ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(note)});
  }

  void flag(std::string quantity, double expected, double computed, double tol, std::string note) {
    rows_.push_back({example_, std::move(quantity), expected, computed, tol,
                     std::abs(computed - expected) <= tol ? CheckStatus::Pass
                                                          : CheckStatus::Discrepancy,
                     std::move(note)});
  }

  void append_to(std::vector<ExampleCheck>& out) {
    out.insert(out.end(), rows_.begin(), rows_.end());
  }

 private:
  std::string example_;
  std::vector<ExampleCheck> rows_;
};

std::string fmt(const char* pattern, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

void example1(std::vector<ExampleCheck>& out) {
  Table t("example1");
  const StatePair pair = example1_pair();
  t.check("E(psi)", 1.0, entanglement_entropy(pair.psi), kTight);
  t.check("E(phi)", 1.0, entanglement_entropy(pair.phi), kTight);
  const OrthogonalityClass oc = classify_orthogonality(pair.psi, pair.phi);
  t.check("B-side orthogonal (1 = yes)", 1.0, oc.one_sided_eq1 ? 1.0 : 0.0, 0.0);
  t.check("A-side orthogonal (0 = no)", 0.0, oc.one_sided_eq2 ? 1.0 : 0.0, 0.0);
  for (double a : {0.3, 0.6, 1.0 / std::sqrt(2.0)}) {
    const double b = std::sqrt(1.0 - a * a);
    const SuperpositionProblem p(pair.psi, pair.phi, a, b);
    const std::string tag = fmt(" [alpha=%.4g]", a);
    t.check("E(Gamma)" + tag, 1.0, exact_entanglement(p), kTight);
    t.check("one-sided formula" + tag, 1.0, exact_one_sided(p), kTight);
    const ReducedEntropies s = p.mixture().reduced_entropies(a * a);
    t.check("S(rho^A)" + tag, 1.0, s.a, kTight);
    t.check("S(rho^B)" + tag, 1.0 + binary_entropy(a * a), s.b, kTight);
  }
  t.append_to(out);
}

void example2(std::vector<ExampleCheck>& out) {
  Table t("example2");
  const StatePair pair = example2_pair();
  const double h = 1.0 / std::sqrt(2.0);
  const SuperpositionProblem p(pair.psi, pair.phi, h, h);
  t.check("E(psi)", 1.5, p.e_psi(), kTight);
  t.check("E(phi)", 1.5, p.e_phi(), kTight);
  t.check("||Gamma||^2", 1.5, p.gamma_norm_sq(), kTight);
  t.check("E(Gamma)", std::log2(3.0), exact_entanglement(p), kTight);
  const ReducedEntropies s = p.mixture().reduced_entropies(0.5);
  t.check("S(rho^A)", 1.5, s.a, kTight);
  t.check("S(rho^B)", 2.0, s.b, kTight);
  const double lps = lps_upper(p);
  const double t2 = theorem2_upper(p);
  t.check("LPS bound", 10.0 / 3.0, lps, kTight);
  t.check("difference-refined bound", 8.0 / 3.0, t2, kTight);
  const double norm = std::sqrt(p.gamma_norm_sq());
  const std::string why = "reference divides the bracket by ||Gamma|| instead of ||Gamma||^2;";
  t.flag("LPS bound, reference value 5*sqrt(2/3)", 5.0 * std::sqrt(2.0 / 3.0), lps, kTight,
         why + fmt(" bracket/||Gamma|| = %.10g", lps * norm));
  t.flag("refined bound, reference value 4*sqrt(2/3)", 4.0 * std::sqrt(2.0 / 3.0), t2, kTight,
         why + fmt(" bracket/||Gamma|| = %.10g", t2 * norm));
  t.append_to(out);
}

void example3(std::vector<ExampleCheck>& out) {
  Table t("example3");
  const Family fam = Family::Example3;
  StatePair pair = diagonal_family_pair(kLargeD);
  const SuperpositionProblem p(std::move(pair.psi), std::move(pair.phi), family_alpha(fam),
                               family_beta(fam));
  const double log_d = 16.0;
  t.check("E(psi) at d=2^16+1", 1.0 + log_d / 2.0, p.e_psi(), kTight);
  const double e = exact_entanglement(p);
  t.check("E(Gamma)", 49.0 / 50.0 * log_d + binary_entropy(1.0 / 50.0), e, kTight);
  const double f37 = f_of_t(p, 3.0 / 7.0, false);
  const double h37 = binary_entropy(3.0 / 7.0);
  t.check("f(3/7)", 49.0 / 25.0 * (p.e_psi() + h37), f37, 1e-9);
  t.flag("f(3/7), reference (49/50)log(d-1) + (49/25)h2(3/7)", 49.0 / 50.0 * log_d + 49.0 / 25.0 * h37,
         f37, 1e-6, "reference drops the +1 in E(psi) = 1 + log(d-1)/2; offset is 49/25");
  t.flag("f(3/7) - E(Gamma), reference (49/25)h2(3/7) - h2(1/50)",
         49.0 / 25.0 * h37 - binary_entropy(1.0 / 50.0), f37 - e, 1e-6,
         fmt("closed form with the +1 kept: 49/25 + (49/25)h2(3/7) - h2(1/50) = %.10g",
             49.0 / 25.0 + 49.0 / 25.0 * h37 - binary_entropy(1.0 / 50.0)));
  const UpperOptimum up = theorem3_optimal(p, false);
  t.check("optimal t", 3.0 / 7.0, up.t_star, 0.01, "limit value; exact only as d grows");

  const std::vector<SweepRecord> sw = dimension_sweep({(1u << 8) + 1, (1u << 12) + 1, kLargeD}, fam);
  t.check("LPS gap growth, d=2^12+1 -> 2^16+1", 4.0 / 50.0, sw[2].gap_lps - sw[1].gap_lps, kTight,
          "(1/50) per unit of log(d-1)");
  double lo = sw[0].gap_t3, hi = sw[0].gap_t3;
  for (const SweepRecord& r : sw) {
    lo = std::min(lo, r.gap_t3);
    hi = std::max(hi, r.gap_t3);
  }
  t.check("spread of optimized-bound gap over d", 0.0, hi - lo, 0.05);
  t.append_to(out);
}

void example4(std::vector<ExampleCheck>& out) {
  Table t("example4");
  const Family fam = Family::Example4;
  StatePair pair = diagonal_family_pair(kLargeD);
  const SuperpositionProblem p(std::move(pair.psi), std::move(pair.phi), family_alpha(fam),
                               family_beta(fam));
  const double e = exact_entanglement(p);
  t.check("E(Gamma)", 16.0 / 50.0 + binary_entropy(1.0 / 50.0), e, kTight);
  const double t0 = 25.0 / 28.0;
  const double l1 = lower_l(p, t0, LowerBranch::L1);
  t.check("L1(25/28)", 9.0 / 25.0 - 28.0 / 25.0 * binary_entropy(t0), l1, 1e-9);
  const double closed = binary_entropy(1.0 / 50.0) - 1.0 / 25.0 + 28.0 / 25.0 * binary_entropy(t0);
  t.check("E(Gamma) - L1(25/28)", closed, e - l1, 1e-6);
  t.check("E(Gamma) - L1(25/28), reference 0.65", 0.65, e - l1, 0.005);

  const LowerOptimum opt = theorem4_optimal(p);
  t.flag("optimal t at d=2^16+1", t0, opt.t_star, 0.01,
         fmt("L is negative on all of (0,1) at this d (max raw %.3g); 25/28 is the large-d limit",
             opt.raw_value));
  // same scalar inputs with log(d-1) = 1000, where the interior maximum has formed
  LowerBoundInputs big = lower_bound_inputs(p);
  big.e_psi = big.e_phi = 1.0 + 1000.0 / 2.0;
  const LowerOptimum far = theorem4_optimal(big);
  t.check("optimal t with log(d-1)=1000", t0, far.t_star, 0.01);
  t.append_to(out);
}

}  // namespace

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Discrepancy: return "discrepancy";
  }
  return "?";
}

std::vector<ExampleCheck> run_examples() {
  std::vector<ExampleCheck> out;
  example1(out);
  example2(out);
  example3(out);
  example4(out);
  return out;
}

std::string format_examples_table(const std::vector<ExampleCheck>& rows) {
  std::size_t wq = 8;
  for (const ExampleCheck& r : rows) wq = std::max(wq, r.quantity.size());
  std::string out;
  char buf[1024];
  std::snprintf(buf, sizeof buf, "%-9s %-*s %18s %18s %9s  %s\n", "example", static_cast<int>(wq),
                "quantity", "expected", "computed", "tol", "status");
  out += buf;
  for (const ExampleCheck& r : rows) {
    std::snprintf(buf, sizeof buf, "%-9s %-*s %18.12g %18.12g %9.1e  %s\n", r.example.c_str(),
                  static_cast<int>(wq), r.quantity.c_str(), r.expected, r.computed, r.tolerance,
                  std::string(to_string(r.status)).c_str());
    out += buf;
    if (!r.note.empty()) out += "          note: " + r.note + "\n";
  }
  return out;
}

}  // namespace supent::harness
