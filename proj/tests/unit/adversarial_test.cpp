#include <gtest/gtest.h>

#include <cmath>

#include "intsel/adversarial.hpp"
#include "intsel/offline.hpp"
#include "intsel/policies.hpp"
#include "intsel/predictions.hpp"

namespace intsel {
namespace {

// Every "alg:<name>" entry is reproduced by run_policy, and "opt"/"eta" by
// the oracles.
void expect_fixture_holds(const AdversarialFixture& fx) {
  const CanonicalSolution opt = canonical_opt(fx.instance);
  EXPECT_EQ(opt.value, fx.expected.at("opt")) << fx.name;
  EXPECT_EQ(total_error(fx.instance, fx.preds, opt).total, fx.expected.at("eta")) << fx.name;
  for (const auto& [key, value] : fx.expected) {
    if (!key.starts_with("alg:")) continue;
    PolicyConfig cfg = PolicyConfig::for_algorithm(parse_algorithm(key.substr(4)));
    if (fx.expected.contains("beta")) cfg.beta = fx.expected.at("beta");
    const RunResult r = run_policy(fx.instance, fx.arrival_order, fx.preds, cfg);
    EXPECT_EQ(r.final_value, value) << fx.name << ' ' << key;
  }
}

TEST(NestedPairFixture, SingleCopy) {
  const auto fx = gen_theorem2(1);
  EXPECT_EQ(fx.instance.size(), 3u);
  EXPECT_EQ(fx.expected.at("opt"), 2.0);
  EXPECT_EQ(fx.expected.at("eta"), 1.0);
  EXPECT_EQ(fx.expected.at("alg:grnr"), 1.0);
  expect_fixture_holds(fx);
}

TEST(NestedPairFixture, RejectionBranch) {
  const auto fx = gen_theorem2(1, Branch::Reject);
  EXPECT_EQ(fx.expected.at("alg:naive"), 0.0);
  EXPECT_EQ(fx.expected.at("opt"), 1.0);
  EXPECT_EQ(fx.expected.at("eta"), 1.0);
  expect_fixture_holds(fx);
}

TEST(NestedPairFixture, CopiesAddUp) {
  const auto fx = gen_theorem2(5);
  EXPECT_EQ(canonical_opt(fx.instance).value, 10.0);
  EXPECT_EQ(fx.expected.at("eta"), 5.0);
  expect_fixture_holds(fx);
  for (std::size_t a = 0; a + 3 < fx.instance.size(); a += 3) {
    EXPECT_GE(fx.instance[a + 3].start - fx.instance[a].finish, 1.0);
  }
  EXPECT_THROW(gen_theorem2(0), std::invalid_argument);
}

TEST(ChainFixture, SingleCopy) {
  const auto fx = gen_theorem4(1, 1.0);
  const Instance& inst = fx.instance;
  EXPECT_EQ(inst.weight_model(), WeightModel::Proportional);
  EXPECT_EQ(inst.weight_of(1), inst.weight_of(0));
  EXPECT_EQ(inst.weight_of(2), 2.0 * inst.weight_of(0));
  EXPECT_TRUE(conflicts(inst[0], inst[1]));
  EXPECT_TRUE(conflicts(inst[0], inst[2]));
  EXPECT_FALSE(conflicts(inst[1], inst[2]));
  EXPECT_EQ(classify_conflict(inst[0], inst[1]), ConflictKind::Partial);
  EXPECT_EQ(classify_conflict(inst[0], inst[2]), ConflictKind::Partial);
  EXPECT_EQ(fx.expected.at("opt"), 3.0);
  EXPECT_EQ(fx.expected.at("eta"), 2.0);
  EXPECT_EQ(fx.expected.at("alg:grnr"), 1.0);
  expect_fixture_holds(fx);
}

TEST(ChainFixture, RejectionBranchAndCopies) {
  const auto rj = gen_theorem4(1, 1.0, Branch::Reject);
  EXPECT_EQ(rj.expected.at("opt"), 1.0);
  EXPECT_EQ(rj.expected.at("eta"), 1.0);
  EXPECT_EQ(rj.expected.at("alg:naive"), 0.0);
  expect_fixture_holds(rj);
  const auto fx = gen_theorem4(3, 2.0);
  EXPECT_EQ(canonical_opt(fx.instance).value, 18.0);
  expect_fixture_holds(fx);
  EXPECT_THROW(gen_theorem4(1, 0.0), std::invalid_argument);
}

TEST(AlphaLowerBound, GoldenRatio) {
  const auto fx = gen_alpha_lb(kGoldenRatio, 0.1, 10.0);
  const double opt = canonical_opt(fx.instance).value;
  EXPECT_NEAR(opt, 20.0 * kGoldenRatio + 10.0 - 0.4, 1e-12);
  EXPECT_NEAR(opt, 41.96, 0.01);
  PolicyConfig lr = PolicyConfig::for_algorithm(Algorithm::LR);
  const RunResult r = run_policy(fx.instance, fx.arrival_order, fx.preds, lr);
  EXPECT_EQ(r.final_value, 10.0);
  EXPECT_EQ(r.final_members, std::vector<IntervalId>{0});
  EXPECT_LT(opt / r.final_value, 2.0 * kGoldenRatio + 1.0);
  expect_fixture_holds(fx);
}

TEST(AlphaLowerBound, AlphaOne) {
  const auto fx = gen_alpha_lb(1.0, 0.1, 10.0);
  EXPECT_NEAR(canonical_opt(fx.instance).value, 29.6, 1e-12);
  PolicyConfig lr = PolicyConfig::for_algorithm(Algorithm::LR);
  lr.beta = 1.0;
  EXPECT_EQ(run_policy(fx.instance, fx.arrival_order, fx.preds, lr).final_value, 10.0);
  expect_fixture_holds(fx);
}

TEST(AlphaLowerBound, RejectsBadParameters) {
  EXPECT_THROW(gen_alpha_lb(0.5, 0.1), std::invalid_argument);
  EXPECT_THROW(gen_alpha_lb(kGoldenRatio, 0.0), std::invalid_argument);
  EXPECT_THROW(gen_alpha_lb(kGoldenRatio, 5.0, 10.0), std::invalid_argument);
}

}  // namespace
}  // namespace intsel
