#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "supent/bounds.hpp"
#include "supent/harness/audit.hpp"
#include "supent/harness/families.hpp"
#include "supent/harness/random.hpp"
#include "supent/harness/state_file.hpp"
#include "supent/harness/sweep.hpp"
#include "supent/harness/worked_examples.hpp"
#include "test_util.hpp"

namespace supent::harness {
namespace {

using testing::kind_of;

constexpr const char* kBellDoc = R"({
  "label": "bell",
  "dim_a": 2, "dim_b": 2,
  "entries": [
    {"i": 0, "j": 0, "re": 0.7071067811865476, "im": 0},
    {"i": 1, "j": 1, "re": 0.7071067811865476}
  ]
})";

TEST(StateFile, ParsesBell) {
  const StateFile f = parse_state_file(kBellDoc);
  EXPECT_EQ(f.label, "bell");
  EXPECT_EQ(f.state.dim_a(), 2u);
  EXPECT_NEAR(norm_squared(f.state), 1.0, 1e-15);
  EXPECT_NEAR(entanglement_entropy(f.state), 1.0, 1e-12);
}

TEST(StateFile, ParsesExample2Psi) {
  const StateFile f = parse_state_file(R"({"dim_a": 3, "dim_b": 4, "entries": [
      {"i": 0, "j": 0, "re": 0.7071067811865476},
      {"i": 1, "j": 1, "re": 0.5}, {"i": 2, "j": 2, "re": 0.5}]})");
  EXPECT_TRUE(f.label.empty());
  EXPECT_NEAR(entanglement_entropy(f.state), 1.5, 1e-12);
}

TEST(StateFile, AcceptsUnnormalized) {
  const StateFile f = parse_state_file(R"({"dim_a": 1, "dim_b": 1, "entries": [{"i": 0, "j": 0, "re": 3, "im": 4}]})");
  EXPECT_EQ(norm_squared(f.state), 25.0);
}

std::string error_text(std::string_view doc) {
  try {
    parse_state_file(doc);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(StateFile, Errors) {
  EXPECT_EQ(kind_of([] {
              parse_state_file(R"({"dim_a": 2, "dim_b": 2, "entries": [
                {"i": 0, "j": 0, "re": 1}, {"i": 0, "j": 0, "re": 1}]})");
            }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] {
              parse_state_file(R"({"dim_a": 2, "dim_b": 2, "entries": [{"i": 2, "j": 0, "re": 1}]})");
            }),
            ErrorKind::IndexError);
  EXPECT_EQ(kind_of([] { parse_state_file(R"({"dim_a": 0, "dim_b": 2, "entries": []})"); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_state_file("[1, 2]"); }), ErrorKind::ParseError);

  EXPECT_NE(error_text("{\n  \"dim_a\": 2,\n  \"dim_b\": oops\n}").find("line 3"), std::string::npos);
  EXPECT_NE(error_text(R"({"dim_a": 2, "dim_b": 2, "entries": [{"i": 0, "j": 0}]})")
                .find("$.entries[0].re"),
            std::string::npos);
  EXPECT_NE(error_text(R"({"dim_a": 2, "dim_b": 2, "entries": [{"i": -1, "j": 0, "re": 1}]})")
                .find("$.entries[0].i"),
            std::string::npos);
  EXPECT_NE(error_text(R"({"dim_a": 2, "entries": []})").find("$.dim_b"), std::string::npos);
}

TEST(StateFile, RoundTripIsBitExact) {
  Rng rng(41);
  for (int k = 0; k < 10; ++k) {
    const BipartiteState s = haar_random_state(3, 4, rng).scaled(Complex(1e-7, 3.3));
    const StateFile back = parse_state_file(serialize_state_file({s, "x"}));
    ASSERT_EQ(back.state.entries().size(), s.entries().size());
    for (std::size_t i = 0; i < s.entries().size(); ++i) {
      const Complex a = s.entries()[i].value;
      const Complex b = back.state.entries()[i].value;
      EXPECT_EQ(std::memcmp(&a, &b, sizeof a), 0);
    }
    EXPECT_EQ(back.state, s);
    EXPECT_EQ(back.label, "x");
  }
}

TEST(Rng, UniformRangeAndDeterminism) {
  Rng a(5), b(5), c(5, 1);
  bool differs = false;
  for (int k = 0; k < 1000; ++k) {
    const double x = a.uniform();
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    EXPECT_EQ(x, b.uniform());
    differs |= x != c.uniform();
    const std::size_t i = a.uniform_index(2, 4);
    b.uniform_index(2, 4);
    c.uniform_index(2, 4);
    EXPECT_GE(i, 2u);
    EXPECT_LE(i, 4u);
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, GaussianMoments) {
  Rng rng(6);
  const int n = 200000;
  double s1 = 0.0, s2 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double g = rng.gaussian();
    s1 += g;
    s2 += g * g;
  }
  EXPECT_NEAR(s1 / n, 0.0, 5.0 / std::sqrt(n));
  EXPECT_NEAR(s2 / n, 1.0, 5.0 * std::sqrt(2.0 / n));
}

TEST(HaarRandomState, DeterministicAndProductCase) {
  EXPECT_EQ(haar_random_state(3, 3, 77), haar_random_state(3, 3, 77));
  EXPECT_NE(haar_random_state(3, 3, 77), haar_random_state(3, 3, 78));
  const BipartiteState s = haar_random_state(1, 5, 9);
  EXPECT_NEAR(norm_squared(s), 1.0, 1e-14);
  EXPECT_NEAR(entanglement_entropy(s), 0.0, 1e-12);
}

// Mean entanglement of d x d Haar states:
// sum_{k=d+1}^{d^2} 1/k - (d-1)/(2d) nats.
double page_mean_bits(int d) {
  double s = 0.0;
  for (int k = d + 1; k <= d * d; ++k) s += 1.0 / k;
  return (s - (d - 1.0) / (2.0 * d)) / std::log(2.0);
}

struct Moments {
  double mean;
  double var;
};

template <typename Sampler>
Moments entropy_moments(int n, Sampler sample) {
  double s1 = 0.0, s2 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double e = entanglement_entropy(sample());
    s1 += e;
    s2 += e * e;
  }
  const double mean = s1 / n;
  return {mean, (s2 / n - mean * mean) * n / (n - 1)};
}

TEST(HaarRandomState, EnsembleMeanMatchesIndependentSampler) {
  const int d = 3;
  const int n = 4000;
  Rng rng(1234);
  const Moments ours = entropy_moments(n, [&] { return haar_random_state(d, d, rng); });

  // separate engine, seeding path and Gaussian method
  std::mt19937 eng(98765);
  std::normal_distribution<double> normal;
  const Moments other = entropy_moments(n, [&] {
    std::vector<Amplitude> amps;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) amps.push_back({i, j, Complex(normal(eng), normal(eng))});
    return BipartiteState::from_entries(d, d, std::move(amps)).normalized();
  });

  const double sigma = std::sqrt(ours.var / n + other.var / n);
  EXPECT_LE(std::abs(ours.mean - other.mean), 3.0 * sigma);
  EXPECT_LE(std::abs(ours.mean - page_mean_bits(d)), 3.0 * std::sqrt(ours.var / n));
}

TEST(GenerateOneSidedPair, UniformTwoByTwoLooksLikeExample1) {
  const OneSidedPair pair = generate_one_sided_pair(2, 2, 2, 3, {.uniform_spectra = true});
  EXPECT_EQ(pair.psi.dim_a(), 2u);
  EXPECT_EQ(pair.psi.dim_b(), 4u);
  EXPECT_NEAR(entanglement_entropy(pair.psi), 1.0, 1e-12);
  EXPECT_NEAR(entanglement_entropy(pair.phi), 1.0, 1e-12);
  const OrthogonalityClass c = classify_orthogonality(pair.psi, pair.phi);
  EXPECT_TRUE(c.one_sided_eq1);
  EXPECT_FALSE(c.one_sided_eq2);  // full-rank A frames on a 2-dim A overlap
  const SuperpositionProblem p(pair.psi, pair.phi, 0.6, 0.8);
  EXPECT_NEAR(exact_entanglement(p), 1.0, 1e-9);
}

TEST(GenerateOneSidedPair, RankOneGivesProducts) {
  const OneSidedPair pair = generate_one_sided_pair(1, 1, 3, 4);
  EXPECT_NEAR(entanglement_entropy(pair.psi), 0.0, 1e-12);
  EXPECT_NEAR(entanglement_entropy(pair.phi), 0.0, 1e-12);
  EXPECT_TRUE(classify_orthogonality(pair.psi, pair.phi).one_sided_eq1);
  const OneSidedPair bi = generate_one_sided_pair(1, 1, 2, 4, {.orthogonal_a_frames = true});
  EXPECT_TRUE(classify_orthogonality(bi.psi, bi.phi).biorthogonal);
  EXPECT_NEAR(entanglement_entropy(bi.psi), 0.0, 1e-12);
  EXPECT_EQ(kind_of([] { generate_one_sided_pair(2, 1, 2, 0, {.orthogonal_a_frames = true}); }),
            ErrorKind::DimError);
}

TEST(GenerateOneSidedPair, TheoremOneIdentity) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const OneSidedPair pair = generate_one_sided_pair(3, 2, 4, seed);
    Rng rng(seed, 99);
    const auto [a, b] = random_coefficients(rng);
    const SuperpositionProblem p(pair.psi, pair.phi, a, b);
    EXPECT_NEAR(exact_one_sided(p), exact_entanglement(p), 1e-9);
  }
}

TEST(GenerateOneSidedPair, Errors) {
  EXPECT_EQ(kind_of([] { generate_one_sided_pair(3, 1, 2, 0); }), ErrorKind::DimError);
  EXPECT_EQ(kind_of([] { generate_one_sided_pair(0, 1, 2, 0); }), ErrorKind::DimError);
}

TEST(RunExamples, NoFailuresAndKeyRows) {
  const std::vector<ExampleCheck> rows = run_examples();
  std::size_t discrepancies = 0;
  for (const ExampleCheck& r : rows) {
    EXPECT_NE(r.status, CheckStatus::Fail) << r.example << ": " << r.quantity;
    if (r.status == CheckStatus::Discrepancy) {
      ++discrepancies;
      EXPECT_FALSE(r.note.empty());
    }
  }
  EXPECT_EQ(discrepancies, 5u);
  auto find = [&](std::string_view ex, std::string_view q) -> const ExampleCheck& {
    for (const ExampleCheck& r : rows)
      if (r.example == ex && r.quantity == q) return r;
    ADD_FAILURE() << "missing row " << q;
    return rows.front();
  };
  EXPECT_NEAR(find("example1", "E(Gamma) [alpha=0.6]").computed, 1.0, 1e-9);
  EXPECT_NEAR(find("example1", "one-sided formula [alpha=0.6]").computed, 1.0, 1e-9);
  EXPECT_NEAR(find("example4", "E(Gamma) - L1(25/28)").computed, 0.6516263653850737, 1e-9);
  const std::string table = format_examples_table(rows);
  EXPECT_NE(table.find("discrepancy"), std::string::npos);
}

TEST(DimensionSweep, Example3GapGrowsLinearlyInLog) {
  const std::vector<SweepRecord> rec = dimension_sweep({5, 17, 257}, Family::Example3);
  ASSERT_EQ(rec.size(), 3u);
  EXPECT_LT(rec[0].gap_lps, rec[1].gap_lps);
  EXPECT_LT(rec[1].gap_lps, rec[2].gap_lps);
  EXPECT_NEAR(rec[1].gap_lps - rec[0].gap_lps, (4.0 - 2.0) / 50.0, 1e-9);
  EXPECT_NEAR(rec[2].gap_lps - rec[1].gap_lps, (8.0 - 4.0) / 50.0, 1e-9);
  for (const SweepRecord& r : rec) {
    EXPECT_NEAR(r.gap_lps, r.lps - r.exact_e, 1e-15);
    EXPECT_GE(r.gap_lower, -1e-8);
    EXPECT_GE(r.gap_t3, -1e-8);
  }
}

TEST(DimensionSweep, SmallestDimension) {
  const std::vector<SweepRecord> rec = dimension_sweep({2}, Family::Example3);
  auto [psi, phi] = diagonal_family_pair(2);
  EXPECT_NEAR(entanglement_entropy(psi), 1.0, 1e-12);
  EXPECT_TRUE(certify(psi, phi, 0.6, -0.8).sane);
  EXPECT_GE(rec[0].gap_lower, -1e-8);
  EXPECT_EQ(kind_of([] { dimension_sweep({1}, Family::Example4); }), ErrorKind::DimError);
}

TEST(DimensionSweep, ThreadsDoNotChangeOutput) {
  const std::vector<std::size_t> dims{3, 5, 9, 17, 33};
  EXPECT_EQ(sweep_csv(dimension_sweep(dims, Family::Example4, 1)),
            sweep_csv(dimension_sweep(dims, Family::Example4, 3)));
}

TEST(SweepCsv, HeaderAndPrecision) {
  SweepRecord r;
  r.d = 5;
  r.exact_e = 1.0 / 3.0;
  const std::string csv = sweep_csv({r});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "d,exact_e,lps,t2,t3,t3_refined,lower,gap_lps,gap_t3,gap_lower");
  EXPECT_NE(csv.find("5,0.333333333333,0,"), std::string::npos);
}

TEST(ParseDimList, Values) {
  EXPECT_EQ(parse_dim_list("5,17,257"), (std::vector<std::size_t>{5, 17, 257}));
  EXPECT_EQ(kind_of([] { parse_dim_list("5,,7"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_dim_list("-3"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_dim_list("4x"); }), ErrorKind::ParseError);
}

TEST(RandomAudit, DeterministicAcrossThreads) {
  AuditOptions opt;
  opt.trials = 40;
  opt.max_dim = 4;
  opt.seed = 123;
  opt.threads = 1;
  const std::string serial = random_audit(opt).to_json().dump();
  opt.threads = 4;
  EXPECT_EQ(random_audit(opt).to_json().dump(), serial);
  opt.seed = 124;
  EXPECT_NE(random_audit(opt).to_json().dump(), serial);
}

TEST(RandomAudit, SmallRunIsClean) {
  AuditOptions opt;
  opt.trials = 100;
  opt.max_dim = 4;
  opt.seed = 5;
  const AuditSummary s = random_audit(opt);
  EXPECT_EQ(s.trials(), 100u);
  EXPECT_TRUE(s.clean());
  EXPECT_GE(s.min_lower_gap(), -1e-8);
  EXPECT_GE(s.min_upper_gap(), -1e-8);
  ASSERT_TRUE(s.worst().has_value());
  // the serialized worst case reproduces
  const auto j = s.to_json()["worst"];
  const StateFile psi = parse_state_file(j["psi"].dump());
  EXPECT_EQ(psi.state, s.worst()->psi);
}

TEST(RandomAudit, AlphaOneUpperMatchesExact) {
  AuditOptions opt;
  opt.trials = 1;
  opt.seed = 8;
  opt.coefficients = std::pair<Complex, Complex>{1.0, 0.0};
  const AuditSummary s = random_audit(opt);
  ASSERT_TRUE(s.worst().has_value());
  const BoundReport& r = s.worst()->report;
  EXPECT_NEAR(r.theorem3_upper, r.exact_e, 1e-6);
}

TEST(RandomAudit, DestructiveTrialsAreCountedSeparately) {
  AuditSummary s;
  TrialResult skipped;
  skipped.skipped = true;
  s.add(skipped);
  AuditOptions opt;
  opt.seed = 3;
  s.add(run_trial(opt, 0));
  EXPECT_EQ(s.trials(), 2u);
  EXPECT_EQ(s.skipped_destructive(), 1u);
  EXPECT_EQ(s.evaluated(), 1u);

  // a fully destructive draw is flagged rather than certified
  opt.max_dim = 1;
  opt.coefficients = std::pair<Complex, Complex>{Complex(1.0 / std::sqrt(2.0)), Complex(-1.0 / std::sqrt(2.0))};
  std::size_t hits = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    const TrialResult t = run_trial(opt, i);
    const SuperpositionProblem p(t.psi, t.phi, t.alpha, t.beta);
    EXPECT_EQ(t.skipped, p.destructive());
    hits += t.skipped;
  }
  EXPECT_EQ(hits, 0u);
}

}  // namespace
}  // namespace supent::harness
