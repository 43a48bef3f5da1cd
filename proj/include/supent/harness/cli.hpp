#pragma once

#include <iosfwd>
#include <string>

#include "supent/qmath.hpp"

namespace supent::harness {

/// Exit codes: 0 ok, 1 usage or validation failure, 2 internal error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "RE" or "RE,IM". ParseError otherwise.
Complex parse_coefficient(const std::string& text);

}  // namespace supent::harness
