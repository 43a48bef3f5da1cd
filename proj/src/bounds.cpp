// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#include "supent/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "supent/error.hpp"
#include "supent/optimize.hpp"

namespace supent {

namespace {

constexpr double kUnitTol = 1e-8;
constexpr double kOrthogonalTol = 1e-8;
constexpr double kInteriorMargin = 1e-6;

// Checks the problem conventions and hands psi back for member initialization.
BipartiteState validated(BipartiteState psi, const BipartiteState& phi, Complex alpha,
                         Complex beta) {
  if (psi.dim_a() != phi.dim_a() || psi.dim_b() != phi.dim_b()) {
    fail(ErrorKind::DimMismatch, "psi and phi have different shapes");
  }
  using Named = std::pair<const BipartiteState*, const char*>;
  for (const auto& [s, name] : {Named{&psi, "psi"}, Named{&phi, "phi"}}) {
    const double n = norm_squared(*s);
    if (std::abs(n - 1.0) > kUnitTol) {
      fail(ErrorKind::NotNormalized,
           std::string(name) + " has squared norm " + std::to_string(n) + ", expected 1");
    }
  }
  const double unit = std::norm(alpha) + std::norm(beta);
  if (std::abs(unit - 1.0) > kUnitTol) {
    fail(ErrorKind::NotNormalized,
         "|alpha|^2 + |beta|^2 = " + std::to_string(unit) + ", expected 1");
  }
  return psi;
}

void require_nondestructive(const SuperpositionProblem& p) {
  if (p.destructive()) {
    fail(ErrorKind::ZeroState, "superposition is fully destructive (||Gamma||^2 = " +
                                   std::to_string(p.gamma_norm_sq()) + ")");
  }
}

void require_t_domain(double t) {
  if (!(t >= kTEpsilon * (1.0 - 1e-9) && t <= 1.0 - kTEpsilon * (1.0 - 1e-9))) {
    fail(ErrorKind::DomainError,
         "t = " + std::to_string(t) + " outside [" + std::to_string(kTEpsilon) + ", 1 - eps]");
  }
}

bool interior(double t) { return t > kInteriorMargin && t < 1.0 - kInteriorMargin; }

// Golden section resolves a flat optimum only to about sqrt(eps) in t. When the
// stationarity equation changes sign within a grid cell of t, bisect it and
// keep the root unless the objective gets worse beyond rounding.
template <typename G, typename F>
void polish_stationary(G g, F f, bool minimize, double& t, double& value) {
  const double h = 1.0 / static_cast<double>(kDefaultGridPoints - 1);
  const double lo = std::max(kTEpsilon, t - h);
  const double hi = std::min(1.0 - kTEpsilon, t + h);
  double root = 0.0;
  try {
    const double glo = g(lo);
    const double ghi = g(hi);
    if (!std::isfinite(glo) || !std::isfinite(ghi) || (glo > 0.0) == (ghi > 0.0)) return;
    root = find_root_bisect(g, lo, hi, 1e-15).x_star;
  } catch (const Error&) {
    return;
  }
  const double v = f(root);
  const double slack = 1e-12 * std::max(1.0, std::abs(value));
  if (minimize ? v <= value + slack : v >= value - slack) {
    t = root;
    value = v;
  }
}

double bracket(const SuperpositionProblem& p, double t, bool refined) {
  double b = t * p.e_psi() + (1.0 - t) * p.e_phi() + binary_entropy(t);
  if (refined) {
    const ReducedEntropies s = p.mixture().reduced_entropies(t);
    b -= std::abs(s.a - s.b);
  }
  return b;
}

}  // namespace

// ---------------------------------------------------------------------------
// SuperpositionProblem

SuperpositionProblem::SuperpositionProblem(BipartiteState psi, BipartiteState phi, Complex alpha,
                                           Complex beta)
    : psi_(validated(std::move(psi), phi, alpha, beta)),
      phi_(std::move(phi)),
      alpha_(alpha),
      beta_(beta),
      gamma_(superpose(alpha, psi_, beta, phi_)),
      gamma_norm_sq_(norm_squared(gamma_)),
      e_psi_(entanglement_entropy(psi_)),
      e_phi_(entanglement_entropy(phi_)),
      mixture_(psi_, phi_) {}

// ---------------------------------------------------------------------------
// Exact values and single-point bounds

double exact_entanglement(const SuperpositionProblem& p) {
  require_nondestructive(p);
  return entanglement_entropy(p.gamma());
}

double exact_one_sided(const SuperpositionProblem& p) {
  const OrthogonalityClass cls = classify_orthogonality(p.psi(), p.phi());
  if (!cls.one_sided_eq1 && !cls.one_sided_eq2) {
    fail(ErrorKind::NotOneSided, "pair is not one-sided orthogonal on either side");
  }
  const double a = p.alpha_sq();
  const ReducedEntropies s = p.mixture().reduced_entropies(a);
  return a * p.e_psi() + p.beta_sq() * p.e_phi() + p.mixture().mixture_entropy(a) -
         std::abs(s.a - s.b);
}

double lps_upper(const SuperpositionProblem& p) {
  require_nondestructive(p);
  const double a = p.alpha_sq();
  return 2.0 * (a * p.e_psi() + p.beta_sq() * p.e_phi() + binary_entropy(a)) / p.gamma_norm_sq();
}

double theorem2_upper(const SuperpositionProblem& p) {
  require_nondestructive(p);
  const double a = p.alpha_sq();
  const ReducedEntropies s = p.mixture().reduced_entropies(a);
  return 2.0 *
         (a * p.e_psi() + p.beta_sq() * p.e_phi() + binary_entropy(a) - std::abs(s.a - s.b)) /
         p.gamma_norm_sq();
}

// ---------------------------------------------------------------------------
// Upper bound family

double f_of_t(const SuperpositionProblem& p, double t, bool refined) {
  require_t_domain(t);
  require_nondestructive(p);
  const double prefactor = (t * p.beta_sq() + (1.0 - t) * p.alpha_sq()) / (t * (1.0 - t));
  return prefactor * bracket(p, t, refined) / p.gamma_norm_sq();
}

double theorem3_residual(const SuperpositionProblem& p, double t) {
  const double lhs =
      p.alpha_sq() * (1.0 - t) * (1.0 - t) / (p.beta_sq() * t * t);
  const double rhs = (p.e_psi() - std::log2(t)) / (p.e_phi() - std::log2(1.0 - t));
  return lhs - rhs;
}

UpperOptimum theorem3_optimal(const SuperpositionProblem& p, bool refined) {
  require_nondestructive(p);
  const auto f = [&](double t) { return f_of_t(p, t, refined); };
  const OptimizerResult r = minimize_scalar(f, kTEpsilon, 1.0 - kTEpsilon);

  UpperOptimum out{r.value, r.x_star, r.iterations, r.converged, std::nullopt};
  auto consider = [&](double t) {
    t = std::clamp(t, kTEpsilon, 1.0 - kTEpsilon);
    const double v = f(t);
    if (v < out.value) {
      out.value = v;
      out.t_star = t;
    }
  };
  // f(|alpha|^2) is the LPS bound, so the optimum never exceeds it.
  consider(p.alpha_sq());
  if (refined) {
    // The refined objective is pointwise below the plain one.
    consider(theorem3_optimal(p, false).t_star);
  } else if (interior(out.t_star) && p.alpha_sq() > 0.0 && p.beta_sq() > 0.0) {
    polish_stationary([&](double t) { return theorem3_residual(p, t); }, f, true, out.t_star,
                      out.value);
    out.residual = std::abs(theorem3_residual(p, out.t_star));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lower bound family

std::string_view to_string(LowerBranch b) noexcept { return b == LowerBranch::L1 ? "L1" : "L2"; }

LowerBoundInputs lower_bound_inputs(const SuperpositionProblem& p) {
  require_nondestructive(p);
  const double n = p.gamma_norm_sq();
  return {p.alpha_sq() / n, p.beta_sq() / n, p.e_psi(), p.e_phi()};
}

double lower_l(const LowerBoundInputs& in, double t, LowerBranch branch) {
  require_t_domain(t);
  // L2 is L1 with the roles of (alpha, psi) and (beta, phi) exchanged.
  const bool first = branch == LowerBranch::L1;
  const double own_sq = first ? in.alpha_sq : in.beta_sq;
  const double other_sq = first ? in.beta_sq : in.alpha_sq;
  const double e_own = first ? in.e_psi : in.e_phi;
  const double e_other = first ? in.e_phi : in.e_psi;
  return (1.0 - t) * other_sq / (1.0 - t * (1.0 - own_sq)) * e_other -
         (1.0 - t) / t * e_own - binary_entropy(t) / t;
}

double lower_l(const SuperpositionProblem& p, double t, LowerBranch branch) {
  return lower_l(lower_bound_inputs(p), t, branch);
}

double theorem4_residual(const LowerBoundInputs& in, double t, LowerBranch branch) {
  const bool first = branch == LowerBranch::L1;
  const double own_sq = first ? in.alpha_sq : in.beta_sq;
  const double e_own = first ? in.e_psi : in.e_phi;
  const double e_other = first ? in.e_phi : in.e_psi;
  const double denom = 1.0 - (1.0 - own_sq) * t;
  const double lhs = in.alpha_sq * in.beta_sq * t * t / (denom * denom) * e_other;
  const double rhs = e_own - std::log2(1.0 - t);
  return lhs - rhs;
}

LowerOptimum theorem4_optimal(const LowerBoundInputs& in) {
  LowerOptimum best;
  bool have = false;
  for (const LowerBranch branch : {LowerBranch::L1, LowerBranch::L2}) {
    const OptimizerResult r = maximize_scalar(
        [&](double t) { return lower_l(in, t, branch); }, kTEpsilon, 1.0 - kTEpsilon);
    if (!have || r.value > best.raw_value) {
      best.raw_value = r.value;
      best.t_star = r.x_star;
      best.branch = branch;
      best.converged = r.converged;
      have = true;
    }
  }
  if (interior(best.t_star)) {
    polish_stationary([&](double t) { return theorem4_residual(in, t, best.branch); },
                      [&](double t) { return lower_l(in, t, best.branch); }, false, best.t_star,
                      best.raw_value);
    best.residual = std::abs(theorem4_residual(in, best.t_star, best.branch));
  }
  best.value = std::max(best.raw_value, 0.0);
  return best;
}

LowerOptimum theorem4_optimal(const SuperpositionProblem& p) {
  return theorem4_optimal(lower_bound_inputs(p));
}

double simple_lower(const SuperpositionProblem& p) {
  if (std::abs(p.overlap()) > kOrthogonalTol) {
    fail(ErrorKind::NotOrthogonal, "simple lower bound needs <psi|phi> = 0");
  }
  const double a = p.alpha_sq();
  const double b = p.beta_sq();
  const double larger = std::max(a, b);
  if (larger < 0.5 - 1e-12) {
    fail(ErrorKind::DomainError, "both |alpha|^2 and |beta|^2 are below 1/2");
  }
  // Both branch choices reduce to the same closed form because h2 is symmetric.
  return (b - a) * (p.e_phi() - p.e_psi()) - binary_entropy(a) / larger;
}

// ---------------------------------------------------------------------------
// Two-dimensional subspaces

SubspaceBound subspace_lower(const BipartiteState& psi, const BipartiteState& phi,
                             std::size_t grid_n) {
  if (grid_n < 2) fail(ErrorKind::DomainError, "subspace grid needs at least 2 points per axis");
  const MixturePair pair(psi, phi);  // validates shapes and normalization
  const Complex c = pair.overlap();
  if (std::abs(c) > 1.0 - 1e-9) {
    fail(ErrorKind::DegenerateSubspace, "psi and phi are linearly dependent");
  }
  const double e_psi = entanglement_entropy(psi);
  const double e_phi = entanglement_entropy(phi);

  SubspaceBound out;
  bool have = false;
  for (std::size_t k = 0; k < grid_n; ++k) {
    const double p = static_cast<double>(k) / static_cast<double>(grid_n - 1);
    for (std::size_t l = 0; l < grid_n; ++l) {
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(l) /
                           static_cast<double>(grid_n);
      const Complex cross = std::polar(1.0, phase) * c;
      const double norm_sq = 1.0 + 2.0 * std::sqrt(p * (1.0 - p)) * cross.real();
      const LowerBoundInputs in{p / norm_sq, (1.0 - p) / norm_sq, e_psi, e_phi};
      const double v = theorem4_optimal(in).value;
      ++out.points;
      if (!have || v < out.value) {
        out.value = v;
        out.p = p;
        out.phase = phase;
        have = true;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Report

double BoundReport::min_upper() const noexcept {
  return std::min({lps_upper, theorem2_upper, theorem3_upper, theorem3_refined_upper});
}

BoundReport certify(const SuperpositionProblem& p) {
  require_nondestructive(p);
  BoundReport r;
  r.gamma_norm_sq = p.gamma_norm_sq();
  r.e_psi = p.e_psi();
  r.e_phi = p.e_phi();
  r.overlap = p.overlap();
  r.orthogonality = classify_orthogonality(p.psi(), p.phi());

  r.exact_e = exact_entanglement(p);
  r.lps_upper = lps_upper(p);
  r.theorem2_upper = theorem2_upper(p);

  const UpperOptimum t3 = theorem3_optimal(p, false);
  r.theorem3_upper = t3.value;
  r.t_star_upper = t3.t_star;
  r.theorem3_residual = t3.residual;
  const UpperOptimum t3r = theorem3_optimal(p, true);
  r.theorem3_refined_upper = t3r.value;
  r.t_star_refined = t3r.t_star;

  const LowerOptimum t4 = theorem4_optimal(p);
  r.lower_l = t4.value;
  r.lower_l_raw = t4.raw_value;
  r.t_star_lower = t4.t_star;
  r.branch = t4.branch;
  r.theorem4_residual = t4.residual;

  if (std::abs(r.overlap) <= kOrthogonalTol) r.simple_lower = simple_lower(p);
  if (r.orthogonality.one_sided_eq1 || r.orthogonality.one_sided_eq2) {
    r.exact_one_sided = exact_one_sided(p);
  }
  r.sane = r.lower_l - kSanitySlack <= r.exact_e && r.exact_e <= r.min_upper() + kSanitySlack;
  return r;
}

BoundReport certify(const BipartiteState& psi, const BipartiteState& phi, Complex alpha,
                    Complex beta) {
  return certify(SuperpositionProblem(psi, phi, alpha, beta));
}

}  // namespace supent
