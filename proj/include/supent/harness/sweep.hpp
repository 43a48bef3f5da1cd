#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "supent/harness/families.hpp"

namespace supent::harness {

struct SweepRecord {
  std::size_t d = 0;
  double exact_e = 0.0;
  double lps = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t3_refined = 0.0;
  double lower = 0.0;
  double gap_lps = 0.0;    // lps - exact_e
  double gap_t3 = 0.0;     // t3 - exact_e
  double gap_lower = 0.0;  // exact_e - lower
};

/// One record per d (each d >= 2, DimError otherwise). Rows run on up to
/// `threads` workers; output order follows d_list.
std::vector<SweepRecord> dimension_sweep(const std::vector<std::size_t>& d_list, Family family,
                                         unsigned threads = 1);

/// Header plus one line per record, 12 significant digits.
std::string sweep_csv(const std::vector<SweepRecord>& records);
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRecord>& records);

/// "5,17,257" -> {5, 17, 257}. ParseError on malformed lists.
std::vector<std::size_t> parse_dim_list(const std::string& text);

}  // namespace supent::harness
