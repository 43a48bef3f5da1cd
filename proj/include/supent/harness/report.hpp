#pragma once

#include <string>

#include <json.hpp>

#include "supent/bounds.hpp"

namespace supent::harness {

nlohmann::json to_json(const BoundReport& r);
nlohmann::json complex_to_json(Complex z);  // [re, im]

/// Two-column human-readable table.
std::string format_report(const BoundReport& r);

}  // namespace supent::harness
