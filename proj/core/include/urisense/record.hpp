#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "urisense/controller.hpp"
#include "urisense/fuzzy.hpp"
#include "urisense/imaging.hpp"
#include "urisense/pipeline.hpp"

namespace urisense {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;
using Clock = std::function<Timestamp()>;

Clock system_clock();

/// "YYYY-MM-DDTHH:MM:SS.mmmZ"
std::string format_timestamp(Timestamp t);
/// Throws RecordError on anything but the format_timestamp layout.
Timestamp parse_timestamp(std::string_view text);

inline constexpr std::string_view kUnknownPatient = "unknown";

/// One persisted reading.
struct MeasurementRecord {
  Timestamp timestamp{};
  std::string patient_id{kUnknownPatient};
  double raw_hue = 0.0;
  double actual_hue = 0.0;
  double degenerate_fraction = 0.0;
  std::map<Color, double> values;
  std::optional<Color> winner;
  std::optional<ClinicalBand> band;
  KernelSize kernel;
  std::vector<CycleEvent> event_log;

  friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MeasurementRecord make_record(const AnalysisResult& analysis, std::string patient_id,
                              Timestamp timestamp, std::vector<CycleEvent> event_log = {});

/// Single-line JSON, no trailing newline. Doubles are written with enough
/// digits to round-trip.
std::string to_json_line(const MeasurementRecord& record);
MeasurementRecord record_from_json(std::string_view line);

/// Short patient-facing message, e.g. "Sugar ++++ (red): consult your physician".
std::string summary_line(const MeasurementRecord& record);

/// Appends one line to a JSON-lines log, creating the file if needed.
/// Throws RecordError if the file cannot be written.
void append_record(const std::string& log_path, const MeasurementRecord& record);

/// Every record in a JSON-lines log.
std::vector<MeasurementRecord> read_log(const std::string& log_path);

}  // namespace urisense
