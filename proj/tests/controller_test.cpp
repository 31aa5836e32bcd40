#include "urisense/controller.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace urisense {
namespace {

const std::vector<Phase> kCycleOrder = {Phase::kIdle, Phase::kCollect, Phase::kAddReagent,
                                        Phase::kHeat, Phase::kCool,    Phase::kSense,
                                        Phase::kDrain, Phase::kIdle};

CycleConfig one_second_config() {
  CycleConfig c;
  c.collect_s = c.reagent_s = c.heat_s = c.cool_s = c.sense_s = c.drain_s = 1.0;
  return c;
}

TEST(Step, StartTriggerOpensInlet) {
  const auto r = step({Phase::kIdle, 0.0}, CycleConfig{}, 0.1, true);
  EXPECT_EQ(r.state.phase, Phase::kCollect);
  EXPECT_EQ(r.state.elapsed_in_phase, 0.0);
  EXPECT_EQ(r.actuators, (ActuatorState{.v1 = true}));
}

TEST(Step, IdleWaitsWithoutTrigger) {
  const auto r = step({Phase::kIdle, 0.0}, CycleConfig{}, 5.0);
  EXPECT_EQ(r.state.phase, Phase::kIdle);
  EXPECT_EQ(r.actuators, ActuatorState{});
}

TEST(Step, HeatExpiresIntoCool) {
  const CycleConfig cfg;
  const auto r = step({Phase::kHeat, cfg.heat_s}, cfg, 0.1);
  EXPECT_EQ(r.state.phase, Phase::kCool);
  EXPECT_EQ(r.actuators, ActuatorState{});
}

TEST(Step, AccumulatesElapsedWithinPhase) {
  const CycleConfig cfg;
  const auto r = step({Phase::kHeat, 1.0}, cfg, 0.25);
  EXPECT_EQ(r.state.phase, Phase::kHeat);
  EXPECT_DOUBLE_EQ(r.state.elapsed_in_phase, 1.25);
  EXPECT_EQ(r.actuators, (ActuatorState{.heater = true}));
}

TEST(Step, ActuatorPatterns) {
  EXPECT_EQ(ActuatorState::for_phase(Phase::kCollect), (ActuatorState{.v1 = true}));
  EXPECT_EQ(ActuatorState::for_phase(Phase::kAddReagent), (ActuatorState{.v2 = true}));
  EXPECT_EQ(ActuatorState::for_phase(Phase::kHeat), (ActuatorState{.heater = true}));
  EXPECT_EQ(ActuatorState::for_phase(Phase::kCool), ActuatorState{});
  EXPECT_EQ(ActuatorState::for_phase(Phase::kSense), ActuatorState{});
  EXPECT_EQ(ActuatorState::for_phase(Phase::kDrain), (ActuatorState{.v3 = true}));
  EXPECT_EQ(ActuatorState::for_phase(Phase::kIdle), ActuatorState{});
}

TEST(Step, Errors) {
  EXPECT_THROW(step({static_cast<Phase>(17), 0.0}, CycleConfig{}, 0.1), std::invalid_argument);
  EXPECT_THROW(step({Phase::kHeat, 0.0}, CycleConfig{}, 0.0), std::invalid_argument);
  EXPECT_THROW(step({Phase::kHeat, 0.0}, CycleConfig{}, -1.0), std::invalid_argument);
}

TEST(Step, FullCycleAtTenthOfASecond) {
  const CycleConfig cfg = one_second_config();
  std::vector<Phase> seen = {Phase::kIdle};
  CycleState s;
  auto r = step(s, cfg, 0.1, true);
  for (int guard = 0; guard < 1000; ++guard) {
    if (r.state.phase != seen.back()) seen.push_back(r.state.phase);
    if (r.state.phase == Phase::kIdle) break;
    r = step(r.state, cfg, 0.1);
  }
  EXPECT_EQ(seen, kCycleOrder);
}

TEST(Step, AbortDrainsFirst) {
  for (Phase p : {Phase::kCollect, Phase::kAddReagent, Phase::kHeat, Phase::kCool, Phase::kSense}) {
    const auto r = abort_cycle({p, 0.3});
    EXPECT_EQ(r.state, (CycleState{Phase::kDrain, 0.0}));
    EXPECT_EQ(r.actuators, (ActuatorState{.v3 = true}));
  }
  EXPECT_EQ(abort_cycle({Phase::kIdle, 2.0}).state.phase, Phase::kIdle);
}

TEST(CycleConfig, Validation) {
  CycleConfig c;
  EXPECT_NO_THROW(c.validate());
  c.cool_s = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = CycleConfig{};
  c.reagent_volume_ml = -3.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_EQ(CycleConfig{}.reagent_volume_ml, 3.0);
}

TEST(Interlocks, Predicate) {
  EXPECT_TRUE(ActuatorState{}.interlocks_hold());
  EXPECT_TRUE((ActuatorState{.heater = true}).interlocks_hold());
  EXPECT_FALSE((ActuatorState{.v3 = true, .heater = true}).interlocks_hold());
  EXPECT_FALSE((ActuatorState{.v1 = true, .v2 = true}).interlocks_hold());
}

TEST(Step, PropertyRandomTrajectories) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> duration(0.05, 5.0);
  std::exponential_distribution<double> dt(2.0);
  for (int trial = 0; trial < 500; ++trial) {
    CycleConfig cfg;
    cfg.collect_s = duration(rng);
    cfg.reagent_s = duration(rng);
    cfg.heat_s = duration(rng);
    cfg.cool_s = duration(rng);
    cfg.sense_s = duration(rng);
    cfg.drain_s = duration(rng);

    std::vector<Phase> seen = {Phase::kIdle};
    auto r = step({}, cfg, dt(rng) + 1e-6, true);
    std::size_t steps = 0;
    while (true) {
      ASSERT_TRUE(r.actuators.interlocks_hold());
      ASSERT_EQ(r.actuators, ActuatorState::for_phase(r.state.phase));
      if (r.state.phase != seen.back()) seen.push_back(r.state.phase);
      if (r.state.phase == Phase::kIdle) break;
      ASSERT_LT(++steps, 1'000'000u);
      r = step(r.state, cfg, dt(rng) + 1e-6);
    }
    ASSERT_EQ(seen, kCycleOrder);
  }
}

}  // namespace
}  // namespace urisense
