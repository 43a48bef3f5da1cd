#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "supent/bounds.hpp"
#include "supent/harness/families.hpp"
#include "supent/optimize.hpp"
#include "test_util.hpp"

namespace supent {
namespace {

using testing::kind_of;

TEST(MinimizeScalar, Quadratic) {
  const OptimizerResult r = minimize_scalar([](double x) { return (x - 0.3) * (x - 0.3); }, 0.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x_star, 0.3, 1e-6);  // flat bottom: x resolution ~ sqrt(eps)
  EXPECT_LE(r.value, 1e-14);
}

TEST(MinimizeScalar, BoundaryMinimum) {
  const OptimizerResult r = minimize_scalar([](double x) { return x; }, 0.0, 1.0);
  EXPECT_EQ(r.x_star, 0.0);
  EXPECT_EQ(r.value, 0.0);
}

TEST(MinimizeScalar, NeverWorseThanGrid) {
  // two wells; the grid picks the deeper one
  auto f = [](double x) { return std::min((x - 0.2) * (x - 0.2), 0.5 * (x - 0.8) * (x - 0.8) - 0.01); };
  const OptimizerResult r = minimize_scalar(f, 0.0, 1.0, 9);
  EXPECT_NEAR(r.x_star, 0.8, 1e-5);
  for (int k = 0; k < 9; ++k) EXPECT_LE(r.value, f(k / 8.0));
}

TEST(MinimizeScalar, Errors) {
  EXPECT_EQ(kind_of([] { minimize_scalar([](double) { return 0.0; }, 1.0, 0.0); }),
            ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { minimize_scalar([](double) { return 0.0; }, 0.0, 1.0, 2); }),
            ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] {
              minimize_scalar([](double x) { return x > 0.5 ? std::nan("") : x; }, 0.0, 1.0);
            }),
            ErrorKind::NonFiniteObjective);
}

TEST(MaximizeScalar, Examples) {
  const OptimizerResult r = maximize_scalar([](double x) { return -(x - 0.7) * (x - 0.7); }, 0.0, 1.0);
  EXPECT_NEAR(r.x_star, 0.7, 1e-6);
  EXPECT_LE(std::abs(r.value), 1e-14);
  const OptimizerResult c = maximize_scalar([](double) { return 2.5; }, -1.0, 1.0);
  EXPECT_TRUE(c.converged);
  EXPECT_EQ(c.value, 2.5);
}

TEST(FindRootBisect, Examples) {
  const OptimizerResult r = find_root_bisect([](double x) { return x - 0.5; }, 0.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x_star, 0.5, 1e-10);
  const OptimizerResult s = find_root_bisect([](double x) { return x * x - 2.0; }, 1.0, 2.0);
  EXPECT_NEAR(s.x_star, std::sqrt(2.0), 1e-10);
  EXPECT_EQ(kind_of([] { find_root_bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0); }),
            ErrorKind::NoSignChange);
}

class LargeFamily : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    auto pair = harness::diagonal_family_pair((1u << 16) + 1);
    p3_ = new SuperpositionProblem(pair.psi, pair.phi, 0.6, -0.8);
    p4_ = new SuperpositionProblem(std::move(pair.psi), std::move(pair.phi), 0.6, 0.8);
  }
  static void TearDownTestSuite() {
    delete p3_;
    delete p4_;
  }
  static SuperpositionProblem* p3_;
  static SuperpositionProblem* p4_;
};
SuperpositionProblem* LargeFamily::p3_ = nullptr;
SuperpositionProblem* LargeFamily::p4_ = nullptr;

TEST_F(LargeFamily, UpperMinimizerNearThreeSevenths) {
  const OptimizerResult r = minimize_scalar([](double t) { return f_of_t(*p3_, t, false); },
                                            kTEpsilon, 1.0 - kTEpsilon);
  EXPECT_NEAR(r.x_star, 3.0 / 7.0, 0.01);
}

TEST_F(LargeFamily, StationarityRootMatchesGridMinimizer) {
  const OptimizerResult m = minimize_scalar([](double t) { return f_of_t(*p3_, t, false); },
                                            kTEpsilon, 1.0 - kTEpsilon);
  const OptimizerResult root =
      find_root_bisect([](double t) { return theorem3_residual(*p3_, t); }, 0.05, 0.95);
  EXPECT_NEAR(root.x_star, m.x_star, 0.01);
  EXPECT_NEAR(root.x_star, m.x_star, 1e-6);
}

// At this d the lower-bound maximum has not yet moved into the interior; the
// same scalars at log(d-1) = 1000 put it next to 25/28.
TEST_F(LargeFamily, LowerMaximizerApproachesLimit) {
  LowerBoundInputs in = lower_bound_inputs(*p4_);
  in.e_psi = in.e_phi = 1.0 + 1000.0 / 2.0;
  const OptimizerResult r = maximize_scalar([&](double t) { return lower_l(in, t, LowerBranch::L1); },
                                            kTEpsilon, 1.0 - kTEpsilon);
  EXPECT_NEAR(r.x_star, 25.0 / 28.0, 0.01);
}

}  // namespace
}  // namespace supent
