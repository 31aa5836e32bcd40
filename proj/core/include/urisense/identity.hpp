#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace urisense {

struct RegistryEntry {
  std::string patient_id;
  double weight_kg = 0.0;
};

enum class IdentifyErrorKind { kNoMatch, kAmbiguous };

class IdentifyError : public std::runtime_error {
 public:
  IdentifyError(IdentifyErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  IdentifyErrorKind kind() const { return kind_; }

 private:
  IdentifyErrorKind kind_;
};

/// Household members keyed by body weight.
class PatientRegistry {
 public:
  static constexpr double kDefaultToleranceKg = 2.0;

  /// Throws std::invalid_argument on an empty registry, duplicate ids,
  /// non-positive weights or a non-positive tolerance.
  PatientRegistry(std::vector<RegistryEntry> entries, double tolerance_kg = kDefaultToleranceKg);

  std::span<const RegistryEntry> entries() const { return entries_; }
  double tolerance_kg() const { return tolerance_kg_; }

 private:
  std::vector<RegistryEntry> entries_;
  double tolerance_kg_;
};

/// Returns the only registered person whose weight is within tolerance of the
/// reading. Throws IdentifyError(kNoMatch) if nobody is, and
/// IdentifyError(kAmbiguous) if more than one person is.
std::string identify(double measured_kg, const PatientRegistry& registry);

}  // namespace urisense
