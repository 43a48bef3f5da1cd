#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "supent/states.hpp"

namespace supent::harness {

struct StatePair {
  BipartiteState psi;
  BipartiteState phi;
};

/// Bell pair on B-levels {0,1} and its copy on {2,3}; 2x4.
StatePair example1_pair();

/// sqrt(1/2)|00> + (|11> + |22>)/2 and the same with |00> moved to |03>; 3x4.
StatePair example2_pair();

/// d x d diagonal pair: psi = (|00> + (d-1)^{-1/2} sum_{j>0} |jj>)/sqrt(2),
/// phi the same with the tail sign flipped. Needs d >= 2.
StatePair diagonal_family_pair(std::size_t d);

enum class Family { Example3, Example4 };
std::string_view to_string(Family f) noexcept;
/// ParseError for anything other than "example3" / "example4".
Family parse_family(std::string_view name);

/// alpha = 3/5 for both; beta = -4/5 (example3) or +4/5 (example4).
Complex family_alpha(Family f) noexcept;
Complex family_beta(Family f) noexcept;

}  // namespace supent::harness
