// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#include "supent/harness/state_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "supent/error.hpp"

namespace supent::harness {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  fail(ErrorKind::ParseError, path + ": " + what);
}

std::size_t read_index(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(path + "." + key, "missing");
  if (!it->is_number_integer()) field_error(path + "." + key, "expected a non-negative integer");
  if (it->is_number_unsigned()) return it->get<std::size_t>();
  const auto v = it->get<long long>();
  if (v < 0) field_error(path + "." + key, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

double read_real(const json& obj, const std::string& key, const std::string& path,
                 bool required) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) field_error(path + "." + key, "missing");
    return 0.0;
  }
  if (!it->is_number()) field_error(path + "." + key, "expected a number");
  return it->get<double>();
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

StateFile parse_state_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte);
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                    std::to_string(col) + ": malformed document");
  }
  if (!doc.is_object()) field_error("$", "expected an object");

  const std::size_t dim_a = read_index(doc, "dim_a", "$");
  const std::size_t dim_b = read_index(doc, "dim_b", "$");
  if (dim_a == 0) field_error("$.dim_a", "must be positive");
  if (dim_b == 0) field_error("$.dim_b", "must be positive");

  std::string label;
  if (const auto it = doc.find("label"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) field_error("$.label", "expected a string");
    label = it->get<std::string>();
  }

  const auto entries_it = doc.find("entries");
  if (entries_it == doc.end()) field_error("$.entries", "missing");
  if (!entries_it->is_array()) field_error("$.entries", "expected an array");

  std::vector<Amplitude> amps;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < entries_it->size(); ++k) {
    const std::string path = "$.entries[" + std::to_string(k) + "]";
    const json& e = (*entries_it)[k];
    if (!e.is_object()) field_error(path, "expected an object");
    const std::size_t i = read_index(e, "i", path);
    const std::size_t j = read_index(e, "j", path);
    const double re = read_real(e, "re", path, true);
    const double im = read_real(e, "im", path, false);
    if (i >= dim_a || j >= dim_b) {
      fail(ErrorKind::IndexError, path + ": index (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ") outside " + std::to_string(dim_a) +
                                      "x" + std::to_string(dim_b));
    }
    if (!seen.emplace(i, j).second) {
      field_error(path, "duplicate entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    amps.push_back({i, j, Complex(re, im)});
  }
  return {BipartiteState::from_entries(dim_a, dim_b, std::move(amps)), std::move(label)};
}

StateFile load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_state_file(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::string serialize_state_file(const StateFile& file) {
  json entries = json::array();
  for (const Amplitude& a : file.state.entries()) {
    entries.push_back({{"i", a.row}, {"j", a.col}, {"re", a.value.real()}, {"im", a.value.imag()}});
  }
  json doc = {{"label", file.label},
              {"dim_a", file.state.dim_a()},
              {"dim_b", file.state.dim_b()},
              {"entries", std::move(entries)}};
  return doc.dump(2) + "\n";
}

}  // namespace supent::harness
