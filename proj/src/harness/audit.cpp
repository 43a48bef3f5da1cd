#include "supent/harness/audit.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "parallel.hpp"
#include "supent/error.hpp"
#include "supent/harness/random.hpp"
#include "supent/harness/report.hpp"
#include "supent/harness/state_file.hpp"

namespace supent::harness {

namespace {

using nlohmann::json;

// t3 <= lps is checked with a bit more room than the report ordering since
// both sides come out of different optimizers.
constexpr double kLpsOrderSlack = 1e-9;

}  // namespace

TrialResult run_trial(const AuditOptions& options, std::size_t index) {
  if (options.max_dim == 0) fail(ErrorKind::DimError, "max_dim must be >= 1");
  Rng rng(options.seed, index);
  TrialResult t;
  t.index = index;
  const std::size_t da = rng.uniform_index(1, options.max_dim);
  const std::size_t db = rng.uniform_index(1, options.max_dim);
  t.psi = haar_random_state(da, db, rng);
  t.phi = haar_random_state(da, db, rng);
  std::tie(t.alpha, t.beta) =
      options.coefficients ? *options.coefficients : random_coefficients(rng);
  const SuperpositionProblem p(t.psi, t.phi, t.alpha, t.beta);
  if (p.destructive()) {
    t.skipped = true;
    return t;
  }
  t.report = certify(p);
  return t;
}

void AuditSummary::add(const TrialResult& t) {
  ++trials_;
  if (t.skipped) {
    ++skipped_;
    return;
  }
  const BoundReport& r = t.report;
  const double lower_gap = r.exact_e - r.lower_l;
  const double upper_gap = r.min_upper() - r.exact_e;
  if (!r.sane) ++sanity_violations_;
  if (r.theorem2_upper > r.lps_upper + kSanitySlack) ++t2_above_lps_;
  if (r.theorem3_upper > r.lps_upper + kLpsOrderSlack) ++t3_above_lps_;

  if (evaluated_ == 0) {
    min_lower_gap_ = lower_gap;
    min_upper_gap_ = upper_gap;
  } else {
    min_lower_gap_ = std::min(min_lower_gap_, lower_gap);
    min_upper_gap_ = std::min(min_upper_gap_, upper_gap);
  }
  ++evaluated_;
  sum_lower_gap_ += lower_gap;
  sum_upper_gap_ += upper_gap;
  sum_lps_gap_ += r.lps_upper - r.exact_e;

  const double slack = std::min(lower_gap, upper_gap);
  if (!worst_ || slack < worst_slack_) {
    worst_slack_ = slack;
    worst_ = t;
  }
}

double AuditSummary::mean_lower_gap() const noexcept {
  return evaluated_ ? sum_lower_gap_ / static_cast<double>(evaluated_) : 0.0;
}
double AuditSummary::mean_upper_gap() const noexcept {
  return evaluated_ ? sum_upper_gap_ / static_cast<double>(evaluated_) : 0.0;
}
double AuditSummary::mean_lps_gap() const noexcept {
  return evaluated_ ? sum_lps_gap_ / static_cast<double>(evaluated_) : 0.0;
}

json AuditSummary::to_json() const {
  json j = {
      {"trials", trials_},
      {"evaluated", evaluated_},
      {"skipped_destructive", skipped_},
      {"sanity_violations", sanity_violations_},
      {"t2_above_lps", t2_above_lps_},
      {"t3_above_lps", t3_above_lps_},
      {"min_lower_gap", min_lower_gap_},
      {"min_upper_gap", min_upper_gap_},
      {"mean_lower_gap", mean_lower_gap()},
      {"mean_upper_gap", mean_upper_gap()},
      {"mean_lps_gap", mean_lps_gap()},
      {"worst", nullptr},
  };
  if (worst_) {
    j["worst"] = {
        {"trial", worst_->index},
        {"slack", worst_slack_},
        {"alpha", complex_to_json(worst_->alpha)},
        {"beta", complex_to_json(worst_->beta)},
        {"psi", json::parse(serialize_state_file({worst_->psi, "psi"}))},
        {"phi", json::parse(serialize_state_file({worst_->phi, "phi"}))},
        {"report", harness::to_json(worst_->report)},
    };
  }
  return j;
}

std::string AuditSummary::to_text() const {
  char buf[1024];
  std::snprintf(buf, sizeof buf,
                "trials               %zu\n"
                "evaluated            %zu\n"
                "skipped (||G||^2~0)  %zu\n"
                "ordering violations  %zu\n"
                "difference > LPS     %zu\n"
                "optimized > LPS      %zu\n"
                "min  exact - lower   %.6e\n"
                "min  upper - exact   %.6e\n"
                "mean exact - lower   %.6e\n"
                "mean upper - exact   %.6e\n"
                "mean LPS - exact     %.6e\n",
                trials_, evaluated_, skipped_, sanity_violations_, t2_above_lps_, t3_above_lps_,
                min_lower_gap_, min_upper_gap_, mean_lower_gap(), mean_upper_gap(),
                mean_lps_gap());
  std::string out = buf;
  if (worst_) {
    std::snprintf(buf, sizeof buf, "tightest trial       #%zu (%zux%zu, slack %.6e)\n",
                  worst_->index, worst_->psi.dim_a(), worst_->psi.dim_b(), worst_slack_);
    out += buf;
  }
  return out;
}

AuditSummary random_audit(const AuditOptions& options) {
  if (options.trials == 0) fail(ErrorKind::DomainError, "need at least one trial");
  std::vector<TrialResult> results(options.trials);
  detail::parallel_for(options.trials, options.threads,
                       [&](std::size_t i) { results[i] = run_trial(options, i); });
  AuditSummary s;
  for (const TrialResult& t : results) s.add(t);
  return s;
}

}  // namespace supent::harness
