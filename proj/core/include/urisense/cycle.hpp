#pragma once

#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "urisense/controller.hpp"
#include "urisense/fuzzy.hpp"
#include "urisense/imaging.hpp"
#include "urisense/record.hpp"

namespace urisense {

/// Supplies the colour sensor frame at the Sense phase. May throw.
using ImageSource = std::function<RgbImage()>;

struct CycleOutcome {
  std::optional<MeasurementRecord> record;  ///< empty when the cycle aborted
  std::vector<CycleEvent> events;
  std::string error;
  std::exception_ptr failure;  ///< what aborted the cycle, rethrowable

  bool ok() const { return record.has_value(); }
};

/// Single-owner simulated measurement rig. Each run_cycle starts and ends at
/// Idle; a failure while sensing drains the chamber before returning.
class Controller {
 public:
  static constexpr double kDefaultDt = 0.5;

  /// Throws std::invalid_argument for an invalid config or dt.
  explicit Controller(CycleConfig config, double dt = kDefaultDt);

  CycleOutcome run_cycle(const ImageSource& source, KernelSize kernel,
                         const Classifier& classifier, const std::string& patient_id,
                         Timestamp timestamp);

  const CycleState& state() const { return state_; }
  const ActuatorState& actuators() const { return actuators_; }
  const CycleConfig& config() const { return config_; }

 private:
  void apply(const StepResult& result, double time_s, std::vector<CycleEvent>& log);

  CycleConfig config_;
  double dt_;
  CycleState state_;
  ActuatorState actuators_;
};

/// One cycle on a fresh Controller.
CycleOutcome run_cycle(const CycleConfig& config, const ImageSource& source, KernelSize kernel,
                       const Classifier& classifier, const std::string& patient_id,
                       Timestamp timestamp, double dt = Controller::kDefaultDt);

}  // namespace urisense
