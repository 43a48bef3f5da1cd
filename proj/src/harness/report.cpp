#include "supent/harness/report.hpp"

#include <cstdio>
#include <optional>

namespace supent::harness {

namespace {

using nlohmann::json;

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string line(const char* name, const std::string& value) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-26s %s\n", name, value.c_str());
  return buf;
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string num(const std::optional<double>& x) { return x ? num(*x) : "-"; }

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const BoundReport& r) {
  return {
      {"gamma_norm_sq", r.gamma_norm_sq},
      {"e_psi", r.e_psi},
      {"e_phi", r.e_phi},
      {"overlap", complex_to_json(r.overlap)},
      {"orthogonality",
       {{"eq1_value", r.orthogonality.eq1_value},
        {"eq2_value", r.orthogonality.eq2_value},
        {"one_sided_eq1", r.orthogonality.one_sided_eq1},
        {"one_sided_eq2", r.orthogonality.one_sided_eq2},
        {"biorthogonal", r.orthogonality.biorthogonal}}},
      {"exact_e", r.exact_e},
      {"lps_upper", r.lps_upper},
      {"theorem2_upper", r.theorem2_upper},
      {"theorem3_upper", r.theorem3_upper},
      {"t_star_upper", r.t_star_upper},
      {"theorem3_residual", opt(r.theorem3_residual)},
      {"theorem3_refined_upper", r.theorem3_refined_upper},
      {"t_star_refined", r.t_star_refined},
      {"lower_l", r.lower_l},
      {"lower_l_raw", r.lower_l_raw},
      {"t_star_lower", r.t_star_lower},
      {"branch", std::string(to_string(r.branch))},
      {"theorem4_residual", opt(r.theorem4_residual)},
      {"simple_lower", opt(r.simple_lower)},
      {"exact_one_sided", opt(r.exact_one_sided)},
      {"sane", r.sane},
  };
}

std::string format_report(const BoundReport& r) {
  std::string out;
  out += line("||Gamma||^2", num(r.gamma_norm_sq));
  out += line("E(psi)", num(r.e_psi));
  out += line("E(phi)", num(r.e_phi));
  out += line("<psi|phi>", num(r.overlap.real()) + (r.overlap.imag() < 0 ? " - " : " + ") +
                               num(std::abs(r.overlap.imag())) + "i");
  out += line("one-sided (B / A)",
              yes(r.orthogonality.one_sided_eq1) + " / " + yes(r.orthogonality.one_sided_eq2));
  out += line("biorthogonal", yes(r.orthogonality.biorthogonal));
  out += line("exact E(Gamma)", num(r.exact_e));
  out += line("one-sided formula", num(r.exact_one_sided));
  out += line("LPS upper", num(r.lps_upper));
  out += line("difference upper", num(r.theorem2_upper));
  out += line("optimized upper", num(r.theorem3_upper) + "  (t* = " + num(r.t_star_upper) + ")");
  out += line("stationarity residual", num(r.theorem3_residual));
  out += line("refined optimized upper",
              num(r.theorem3_refined_upper) + "  (t* = " + num(r.t_star_refined) + ")");
  out += line("lower bound", num(r.lower_l) + "  (" + std::string(to_string(r.branch)) +
                                 ", t* = " + num(r.t_star_lower) + ", raw " + num(r.lower_l_raw) +
                                 ")");
  out += line("lower residual", num(r.theorem4_residual));
  out += line("orthogonal-pair lower", num(r.simple_lower));
  out += line("ordering holds", yes(r.sane));
  return out;
}

}  // namespace supent::harness
