#include "urisense/controller.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace urisense {

namespace {

constexpr std::array<std::string_view, 7> kPhaseNames = {
    "idle", "collect", "add_reagent", "heat", "cool", "sense", "drain"};

std::size_t phase_index(Phase phase) {
  const auto i = static_cast<std::size_t>(phase);
  if (i >= kPhaseNames.size()) throw std::invalid_argument("invalid cycle phase");
  return i;
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::string_view phase_name(Phase phase) { return kPhaseNames[phase_index(phase)]; }

std::optional<Phase> parse_phase(std::string_view name) {
  for (std::size_t i = 0; i < kPhaseNames.size(); ++i) {
    if (kPhaseNames[i] == name) return static_cast<Phase>(i);
  }
  return std::nullopt;
}

Phase next_phase(Phase phase) {
  return phase == Phase::kDrain ? Phase::kIdle : static_cast<Phase>(phase_index(phase) + 1);
}

ActuatorState ActuatorState::for_phase(Phase phase) {
  switch (phase) {
    case Phase::kCollect: return {.v1 = true};
    case Phase::kAddReagent: return {.v2 = true};
    case Phase::kHeat: return {.heater = true};
    case Phase::kDrain: return {.v3 = true};
    case Phase::kIdle:
    case Phase::kCool:
    case Phase::kSense: return {};
  }
  throw std::invalid_argument("invalid cycle phase");
}

bool ActuatorState::interlocks_hold() const {
  const int open = int{v1} + int{v2} + int{v3};
  return open <= 1 && !(heater && open > 0);
}

void CycleConfig::validate() const {
  for (double d : {collect_s, reagent_s, heat_s, cool_s, sense_s, drain_s}) {
    if (!positive_finite(d)) throw std::invalid_argument("cycle durations must be positive");
  }
  if (!positive_finite(reagent_volume_ml)) {
    throw std::invalid_argument("reagent volume must be positive");
  }
}

double CycleConfig::duration(Phase phase) const {
  switch (phase) {
    case Phase::kCollect: return collect_s;
    case Phase::kAddReagent: return reagent_s;
    case Phase::kHeat: return heat_s;
    case Phase::kCool: return cool_s;
    case Phase::kSense: return sense_s;
    case Phase::kDrain: return drain_s;
    case Phase::kIdle: throw std::invalid_argument("idle phase has no duration");
  }
  throw std::invalid_argument("invalid cycle phase");
}

StepResult step(const CycleState& state, const CycleConfig& config, double dt, bool start) {
  if (!positive_finite(dt)) throw std::invalid_argument("step dt must be positive");
  phase_index(state.phase);

  CycleState next = state;
  if (state.phase == Phase::kIdle) {
    next = start ? CycleState{Phase::kCollect, 0.0} : CycleState{Phase::kIdle, state.elapsed_in_phase + dt};
  } else {
    next.elapsed_in_phase += dt;
    if (next.elapsed_in_phase >= config.duration(state.phase)) {
      next = CycleState{next_phase(state.phase), 0.0};
    }
  }
  return {next, ActuatorState::for_phase(next.phase)};
}

StepResult abort_cycle(const CycleState& state) {
  phase_index(state.phase);
  const CycleState next =
      state.phase == Phase::kIdle ? state : CycleState{Phase::kDrain, 0.0};
  return {next, ActuatorState::for_phase(next.phase)};
}

}  // namespace urisense
