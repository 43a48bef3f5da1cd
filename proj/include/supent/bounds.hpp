// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "supent/qmath.hpp"
#include "supent/states.hpp"

namespace supent {

/// Free parameter t of the decomposition bounds is searched on [eps, 1 - eps].
inline constexpr double kTEpsilon = 1e-9;
/// ||Gamma||^2 at or below this is treated as a fully destructive superposition.
inline constexpr double kDestructiveNormSq = 1e-12;
/// Slack used by the report's ordering checks.
inline constexpr double kSanitySlack = 1e-8;
/// Interior optimizers must satisfy their stationarity equation to this level.
inline constexpr double kResidualTol = 1e-6;

/// Gamma = alpha*psi + beta*phi with normalized psi, phi and |alpha|^2 + |beta|^2 = 1.
///
/// Construction validates the conventions (NotNormalized, DimMismatch) and
/// caches the quantities every bound needs: E(psi), E(phi), <psi|phi>,
/// ||Gamma||^2 and the block data for the mixture family.
class SuperpositionProblem {
 public:
  SuperpositionProblem(BipartiteState psi, BipartiteState phi, Complex alpha, Complex beta);

  const BipartiteState& psi() const noexcept { return psi_; }
  const BipartiteState& phi() const noexcept { return phi_; }
  const BipartiteState& gamma() const noexcept { return gamma_; }
  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }
  double alpha_sq() const noexcept { return std::norm(alpha_); }
  double beta_sq() const noexcept { return std::norm(beta_); }
  double gamma_norm_sq() const noexcept { return gamma_norm_sq_; }
  double e_psi() const noexcept { return e_psi_; }
  double e_phi() const noexcept { return e_phi_; }
  Complex overlap() const noexcept { return mixture_.overlap(); }
  const MixturePair& mixture() const noexcept { return mixture_; }

  bool destructive() const noexcept { return gamma_norm_sq_ <= kDestructiveNormSq; }

 private:
  BipartiteState psi_;
  BipartiteState phi_;
  Complex alpha_;
  Complex beta_;
  BipartiteState gamma_;
  double gamma_norm_sq_;
  double e_psi_;
  double e_phi_;
  MixturePair mixture_;
};

/// E(Gamma / ||Gamma||). ZeroState for a destructive superposition.
double exact_entanglement(const SuperpositionProblem& p);

/// Closed form for one-sided orthogonal pairs (either side). NotOneSided otherwise.
double exact_one_sided(const SuperpositionProblem& p);

/// 2(|a|^2 E(psi) + |b|^2 E(phi) + h2(|a|^2)) / ||Gamma||^2.
double lps_upper(const SuperpositionProblem& p);

/// LPS bracket reduced by |S(rho^A) - S(rho^B)| of the |a|^2-weighted mixture.
double theorem2_upper(const SuperpositionProblem& p);

/// Decomposition-family upper bound at weight t, divided by ||Gamma||^2.
/// `refined` subtracts |S(rho^A_t) - S(rho^B_t)| inside the bracket.
double f_of_t(const SuperpositionProblem& p, double t, bool refined);

/// Stationarity condition of the unrefined f: lhs - rhs at t.
double theorem3_residual(const SuperpositionProblem& p, double t);

struct UpperOptimum {
  double value = 0.0;
  double t_star = 0.0;
  int iterations = 0;
  bool converged = false;
  /// |lhs - rhs| of the stationarity equation; set for interior optima of the
  /// unrefined bound only.
  std::optional<double> residual;
};

UpperOptimum theorem3_optimal(const SuperpositionProblem& p, bool refined);

enum class LowerBranch { L1, L2 };
std::string_view to_string(LowerBranch b) noexcept;

/// Scalars the lower bound depends on, with |alpha|^2, |beta|^2 taken for the
/// normalized superposition (coefficients divided by ||Gamma||).
struct LowerBoundInputs {
  double alpha_sq = 0.0;
  double beta_sq = 0.0;
  double e_psi = 0.0;
  double e_phi = 0.0;
};

LowerBoundInputs lower_bound_inputs(const SuperpositionProblem& p);

double lower_l(const LowerBoundInputs& in, double t, LowerBranch branch);
double lower_l(const SuperpositionProblem& p, double t, LowerBranch branch);

/// Stationarity condition of L1 (mirrored for L2): lhs - rhs at t.
double theorem4_residual(const LowerBoundInputs& in, double t, LowerBranch branch);

struct LowerOptimum {
  double value = 0.0;      // max(raw_value, 0)
  double raw_value = 0.0;  // best L over t and branch, unclamped
  double t_star = 0.0;
  LowerBranch branch = LowerBranch::L1;
  bool converged = false;
  std::optional<double> residual;  // set when the optimum is interior
};

LowerOptimum theorem4_optimal(const LowerBoundInputs& in);
LowerOptimum theorem4_optimal(const SuperpositionProblem& p);

/// Closed-form lower bound for orthogonal pairs. NotOrthogonal if |<psi|phi>| > 1e-8.
double simple_lower(const SuperpositionProblem& p);

struct SubspaceBound {
  double value = 0.0;
  double p = 0.0;      // |alpha|^2 at the minimizing grid point
  double phase = 0.0;  // relative phase of beta at the minimizing grid point
  std::size_t points = 0;
};

/// Minimum of the clamped lower bound over a grid_n x grid_n grid of
/// alpha = sqrt(p), beta = e^{i phase} sqrt(1 - p), p in [0,1], phase in [0, 2pi).
SubspaceBound subspace_lower(const BipartiteState& psi, const BipartiteState& phi,
                             std::size_t grid_n);

struct BoundReport {
  double gamma_norm_sq = 0.0;
  double e_psi = 0.0;
  double e_phi = 0.0;
  Complex overlap;
  OrthogonalityClass orthogonality;

  double exact_e = 0.0;
  double lps_upper = 0.0;
  double theorem2_upper = 0.0;
  double theorem3_upper = 0.0;
  double t_star_upper = 0.0;
  std::optional<double> theorem3_residual;
  double theorem3_refined_upper = 0.0;
  double t_star_refined = 0.0;
  double lower_l = 0.0;
  double lower_l_raw = 0.0;
  double t_star_lower = 0.0;
  LowerBranch branch = LowerBranch::L1;
  std::optional<double> theorem4_residual;
  std::optional<double> simple_lower;
  std::optional<double> exact_one_sided;
  bool sane = false;

  double min_upper() const noexcept;
};

/// Evaluates every bound for normalized psi, phi and unit (alpha, beta).
BoundReport certify(const BipartiteState& psi, const BipartiteState& phi, Complex alpha,
                    Complex beta);
BoundReport certify(const SuperpositionProblem& p);

}  // namespace supent
