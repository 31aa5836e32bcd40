#include "urisense/cycle.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

#include "urisense/pipeline.hpp"

namespace urisense {

Controller::Controller(CycleConfig config, double dt) : config_(config), dt_(dt) {
  config_.validate();
  if (!(std::isfinite(dt_) && dt_ > 0.0)) throw std::invalid_argument("dt must be positive");
}

void Controller::apply(const StepResult& result, double time_s, std::vector<CycleEvent>& log) {
  const bool changed = result.state.phase != state_.phase;
  state_ = result.state;
  actuators_ = result.actuators;
  if (changed) log.push_back({time_s, state_.phase, actuators_});
}

CycleOutcome Controller::run_cycle(const ImageSource& source, KernelSize kernel,
                                   const Classifier& classifier, const std::string& patient_id,
                                   Timestamp timestamp) {
  if (state_.phase != Phase::kIdle) throw std::logic_error("cycle already in progress");

  CycleOutcome outcome;
  double now = 0.0;
  outcome.events.push_back({now, state_.phase, actuators_});
  apply(step(state_, config_, dt_, /*start=*/true), now, outcome.events);

  std::optional<AnalysisResult> analysis;
  bool sensed = false;
  while (state_.phase != Phase::kIdle) {
    if (state_.phase == Phase::kSense && !sensed) {
      sensed = true;
      try {
        analysis = analyze(source(), kernel, classifier);
      } catch (const std::exception& e) {
        outcome.error = e.what();
        outcome.failure = std::current_exception();
        apply(abort_cycle(state_), now, outcome.events);
        continue;
      }
    }
    now += dt_;
    apply(step(state_, config_, dt_), now, outcome.events);
  }

  if (analysis) {
    outcome.record = make_record(*analysis, patient_id, timestamp, outcome.events);
  }
  return outcome;
}

CycleOutcome run_cycle(const CycleConfig& config, const ImageSource& source, KernelSize kernel,
                       const Classifier& classifier, const std::string& patient_id,
                       Timestamp timestamp, double dt) {
  Controller controller(config, dt);
  return controller.run_cycle(source, kernel, classifier, patient_id, timestamp);
}

}  // namespace urisense
