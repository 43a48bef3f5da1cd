// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "supent/states.hpp"

namespace supent::harness {

/// On-disk form of a pure state:
///
///   {
///     "label": "bell",
///     "dim_a": 2, "dim_b": 2,
///     "entries": [ {"i": 0, "j": 0, "re": 0.7071067811865476, "im": 0},
///                  {"i": 1, "j": 1, "re": 0.7071067811865476} ]
///   }
///
/// Indices are 0-based, "im" defaults to 0 and "label" is optional. Amplitudes
/// need not be normalized.
struct StateFile {
  BipartiteState state;
  std::string label;
};

/// ParseError (with line/column for syntax errors, field path otherwise) or
/// IndexError for an entry outside the declared dimensions.
StateFile parse_state_file(std::string_view text);
StateFile load_state_file(const std::filesystem::path& path);

/// Doubles are written with round-trip precision.
std::string serialize_state_file(const StateFile& file);

}  // namespace supent::harness
