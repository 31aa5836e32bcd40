#pragma once

#include <optional>
#include <string_view>

namespace urisense {

/// Measurement-cycle phases in execution order; Drain returns to Idle.
enum class Phase { kIdle, kCollect, kAddReagent, kHeat, kCool, kSense, kDrain };

std::string_view phase_name(Phase phase);
std::optional<Phase> parse_phase(std::string_view name);

/// Throws std::invalid_argument for a value outside the enum.
Phase next_phase(Phase phase);

struct CycleState {
  Phase phase = Phase::kIdle;
  double elapsed_in_phase = 0.0;  ///< seconds

  friend bool operator==(const CycleState&, const CycleState&) = default;
};

/// Valve and heater outputs. A driver board attaches here.
struct ActuatorState {
  bool v1 = false;  ///< urine inlet
  bool v2 = false;  ///< reagent inlet
  bool v3 = false;  ///< drain
  bool heater = false;

  static ActuatorState for_phase(Phase phase);

  /// Heater only with every valve shut, and never two valves open together.
  bool interlocks_hold() const;

  friend bool operator==(const ActuatorState&, const ActuatorState&) = default;
};

struct CycleConfig {
  double collect_s = 10.0;
  double reagent_s = 5.0;
  double heat_s = 120.0;
  double cool_s = 180.0;
  double sense_s = 2.0;
  double drain_s = 10.0;
  double reagent_volume_ml = 3.0;

  /// Throws std::invalid_argument unless every duration and the volume are
  /// positive and finite.
  void validate() const;

  /// Configured duration of a timed phase; Idle has none and throws.
  double duration(Phase phase) const;

  friend bool operator==(const CycleConfig&, const CycleConfig&) = default;
};

struct StepResult {
  CycleState state;
  ActuatorState actuators;
};

/// Advances the cycle by dt seconds. Idle leaves only on `start`. A timed
/// phase hands over to the next one once its duration has elapsed; at most
/// one transition happens per call and the new phase starts at elapsed 0.
/// The returned actuators belong to the resulting phase.
StepResult step(const CycleState& state, const CycleConfig& config, double dt, bool start = false);

/// Emergency path: any active phase jumps straight to Drain so the chamber
/// is always emptied. Idle stays Idle.
StepResult abort_cycle(const CycleState& state);

/// One entry of the append-only actuator log.
struct CycleEvent {
  double time_s = 0.0;  ///< simulated seconds since the cycle started
  Phase phase = Phase::kIdle;
  ActuatorState actuators;

  friend bool operator==(const CycleEvent&, const CycleEvent&) = default;
};

}  // namespace urisense
