#include "supent/harness/families.hpp"

#include <cmath>
#include <string>

#include "supent/error.hpp"

namespace supent::harness {

StatePair example1_pair() {
  const double s = 1.0 / std::sqrt(2.0);
  return {BipartiteState::from_entries(2, 4, {{0, 0, s}, {1, 1, s}}),
          BipartiteState::from_entries(2, 4, {{0, 2, s}, {1, 3, s}})};
}

StatePair example2_pair() {
  const double s = std::sqrt(0.5);
  return {BipartiteState::from_entries(3, 4, {{0, 0, s}, {1, 1, 0.5}, {2, 2, 0.5}}),
          BipartiteState::from_entries(3, 4, {{0, 3, s}, {1, 1, 0.5}, {2, 2, 0.5}})};
}

StatePair diagonal_family_pair(std::size_t d) {
  if (d < 2) fail(ErrorKind::DimError, "diagonal family needs d >= 2");
  const double head = 1.0 / std::sqrt(2.0);
  const double tail = 1.0 / std::sqrt(2.0 * static_cast<double>(d - 1));
  std::vector<Amplitude> psi{{0, 0, head}};
  std::vector<Amplitude> phi{{0, 0, head}};
  psi.reserve(d);
  phi.reserve(d);
  for (std::size_t j = 1; j < d; ++j) {
    psi.push_back({j, j, tail});
    phi.push_back({j, j, -tail});
  }
  return {BipartiteState::from_entries(d, d, std::move(psi)),
          BipartiteState::from_entries(d, d, std::move(phi))};
}

std::string_view to_string(Family f) noexcept {
  return f == Family::Example3 ? "example3" : "example4";
}

Family parse_family(std::string_view name) {
  if (name == "example3") return Family::Example3;
  if (name == "example4") return Family::Example4;
  fail(ErrorKind::ParseError, "unknown family '" + std::string(name) + "'");
}

Complex family_alpha(Family) noexcept { return 0.6; }
Complex family_beta(Family f) noexcept { return f == Family::Example3 ? -0.8 : 0.8; }

}  // namespace supent::harness
