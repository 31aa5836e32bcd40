#include "urisense/identity.hpp"

#include <cmath>
#include <fmt/format.h>
#include <set>

namespace urisense {

PatientRegistry::PatientRegistry(std::vector<RegistryEntry> entries, double tolerance_kg)
    : entries_(std::move(entries)), tolerance_kg_(tolerance_kg) {
  if (entries_.empty()) throw std::invalid_argument("patient registry is empty");
  if (!(std::isfinite(tolerance_kg_) && tolerance_kg_ > 0.0)) {
    throw std::invalid_argument("weight tolerance must be positive");
  }
  std::set<std::string> ids;
  for (const RegistryEntry& e : entries_) {
    if (!(std::isfinite(e.weight_kg) && e.weight_kg > 0.0)) {
      throw std::invalid_argument(fmt::format("patient {}: weight must be positive", e.patient_id));
    }
    if (!ids.insert(e.patient_id).second) {
      throw std::invalid_argument(fmt::format("patient id {} registered twice", e.patient_id));
    }
  }
}

std::string identify(double measured_kg, const PatientRegistry& registry) {
  if (!(std::isfinite(measured_kg) && measured_kg > 0.0)) {
    throw std::invalid_argument("measured weight must be positive");
  }
  std::vector<const RegistryEntry*> within;
  for (const RegistryEntry& e : registry.entries()) {
    if (std::abs(e.weight_kg - measured_kg) <= registry.tolerance_kg()) within.push_back(&e);
  }
  if (within.empty()) {
    throw IdentifyError(IdentifyErrorKind::kNoMatch,
                        fmt::format("no registered person within {} kg of {} kg",
                                    registry.tolerance_kg(), measured_kg));
  }
  if (within.size() > 1) {
    throw IdentifyError(IdentifyErrorKind::kAmbiguous,
                        fmt::format("{} registered people within {} kg of {} kg", within.size(),
                                    registry.tolerance_kg(), measured_kg));
  }
  return within.front()->patient_id;
}

}  // namespace urisense
