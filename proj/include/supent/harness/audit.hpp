#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "supent/bounds.hpp"
#include "supent/states.hpp"

namespace supent::harness {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct AuditOptions {
  std::size_t trials = 1000;
  std::size_t max_dim = 6;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  /// Fixed (alpha, beta) for every trial instead of a uniform draw.
  std::optional<std::pair<Complex, Complex>> coefficients;
};

struct TrialResult {
  std::size_t index = 0;
  BipartiteState psi{1, 1};
  BipartiteState phi{1, 1};
  Complex alpha;
  Complex beta;
  bool skipped = false;  // destructive superposition
  BoundReport report;
};

/// Draws trial `index` of the stream for `seed`. Same inputs, same trial.
TrialResult run_trial(const AuditOptions& options, std::size_t index);

class AuditSummary {
 public:
  /// Trials must be added in index order for the summary to be reproducible.
  void add(const TrialResult& t);

  std::size_t trials() const noexcept { return trials_; }
  std::size_t evaluated() const noexcept { return evaluated_; }
  std::size_t skipped_destructive() const noexcept { return skipped_; }
  std::size_t sanity_violations() const noexcept { return sanity_violations_; }
  std::size_t t2_above_lps() const noexcept { return t2_above_lps_; }
  std::size_t t3_above_lps() const noexcept { return t3_above_lps_; }

  /// exact - lower and min_upper - exact; 0 when nothing was evaluated.
  double min_lower_gap() const noexcept { return min_lower_gap_; }
  double min_upper_gap() const noexcept { return min_upper_gap_; }
  double mean_lower_gap() const noexcept;
  double mean_upper_gap() const noexcept;
  double mean_lps_gap() const noexcept;

  /// Trial with the smallest slack min(exact - lower, min_upper - exact).
  const std::optional<TrialResult>& worst() const noexcept { return worst_; }

  bool clean() const noexcept {
    return sanity_violations_ == 0 && t2_above_lps_ == 0 && t3_above_lps_ == 0;
  }

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::size_t trials_ = 0;
  std::size_t evaluated_ = 0;
  std::size_t skipped_ = 0;
  std::size_t sanity_violations_ = 0;
  std::size_t t2_above_lps_ = 0;
  std::size_t t3_above_lps_ = 0;
  double min_lower_gap_ = 0.0;
  double min_upper_gap_ = 0.0;
  double sum_lower_gap_ = 0.0;
  double sum_upper_gap_ = 0.0;
  double sum_lps_gap_ = 0.0;
  double worst_slack_ = 0.0;
  std::optional<TrialResult> worst_;
};

/// Haar-random psi, phi with dims uniform in [1, max_dim] each, and (alpha, beta)
/// uniform on the unit sphere unless fixed in the options. Deterministic for a
/// given seed regardless of the thread count.
AuditSummary random_audit(const AuditOptions& options);

}  // namespace supent::harness
