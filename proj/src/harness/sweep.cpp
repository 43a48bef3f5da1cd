#include "supent/harness/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "parallel.hpp"
#include "supent/bounds.hpp"
#include "supent/error.hpp"

namespace supent::harness {

std::vector<SweepRecord> dimension_sweep(const std::vector<std::size_t>& d_list, Family family,
                                         unsigned threads) {
  for (std::size_t d : d_list) {
    if (d < 2) fail(ErrorKind::DimError, "sweep dimensions must be >= 2");
  }
  std::vector<SweepRecord> out(d_list.size());
  detail::parallel_for(d_list.size(), threads, [&](std::size_t k) {
    const std::size_t d = d_list[k];
    StatePair pair = diagonal_family_pair(d);
    const SuperpositionProblem p(std::move(pair.psi), std::move(pair.phi), family_alpha(family),
                                 family_beta(family));
    const BoundReport r = certify(p);
    SweepRecord& rec = out[k];
    rec.d = d;
    rec.exact_e = r.exact_e;
    rec.lps = r.lps_upper;
    rec.t2 = r.theorem2_upper;
    rec.t3 = r.theorem3_upper;
    rec.t3_refined = r.theorem3_refined_upper;
    rec.lower = r.lower_l;
    rec.gap_lps = r.lps_upper - r.exact_e;
    rec.gap_t3 = r.theorem3_upper - r.exact_e;
    rec.gap_lower = r.exact_e - r.lower_l;
  });
  return out;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out = "d,exact_e,lps,t2,t3,t3_refined,lower,gap_lps,gap_t3,gap_lower\n";
  char buf[512];
  for (const SweepRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                  r.d, r.exact_e, r.lps, r.t2, r.t3, r.t3_refined, r.lower, r.gap_lps, r.gap_t3,
                  r.gap_lower);
    out += buf;
  }
  return out;
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRecord>& records) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::ParseError, "cannot open " + path.string() + " for writing");
  f << sweep_csv(records);
}

std::vector<std::size_t> parse_dim_list(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (item.empty() || item.front() == '-') throw std::invalid_argument("sign");
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad dimension '" + item + "'");
    }
    if (used != item.size()) fail(ErrorKind::ParseError, "bad dimension '" + item + "'");
    dims.push_back(static_cast<std::size_t>(v));
  }
  if (dims.empty()) fail(ErrorKind::ParseError, "empty dimension list");
  return dims;
}

}  // namespace supent::harness
