#include "urisense/record.hpp"

#include <cstdio>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>

namespace urisense {

using nlohmann::json;

namespace {

constexpr std::string_view kIndeterminate = "indeterminate";

json band_to_json(const ClinicalBand& band) {
  json j = {{"color", color_name(band.color)},
            {"marks", marks_symbol(band.marks)},
            {"note", band.note}};
  j["urine_range_g_dl"] = band.urine_range
                              ? json::array({band.urine_range->low_g_dl, band.urine_range->high_g_dl})
                              : json(nullptr);
  return j;
}

Color color_from_json(const json& j) {
  const auto c = parse_color(j.get<std::string>());
  if (!c) throw RecordError("unknown colour " + j.dump());
  return *c;
}

ClinicalBand band_from_json(const json& j) {
  ClinicalBand band;
  band.color = color_from_json(j.at("color"));
  const auto marks = parse_marks(j.at("marks").get<std::string>());
  if (!marks) throw RecordError("unknown marks " + j.at("marks").dump());
  band.marks = *marks;
  band.note = j.at("note").get<std::string>();
  const json& range = j.at("urine_range_g_dl");
  if (!range.is_null()) band.urine_range = UrineRange{range.at(0).get<double>(), range.at(1).get<double>()};
  return band;
}

json event_to_json(const CycleEvent& e) {
  return {{"t", e.time_s},
          {"phase", phase_name(e.phase)},
          {"v1", e.actuators.v1},
          {"v2", e.actuators.v2},
          {"v3", e.actuators.v3},
          {"heater", e.actuators.heater}};
}

CycleEvent event_from_json(const json& j) {
  CycleEvent e;
  e.time_s = j.at("t").get<double>();
  const auto phase = parse_phase(j.at("phase").get<std::string>());
  if (!phase) throw RecordError("unknown phase " + j.at("phase").dump());
  e.phase = *phase;
  e.actuators = {j.at("v1").get<bool>(), j.at("v2").get<bool>(), j.at("v3").get<bool>(),
                 j.at("heater").get<bool>()};
  return e;
}

}  // namespace

Clock system_clock() {
  return [] { return std::chrono::floor<std::chrono::milliseconds>(std::chrono::system_clock::now()); };
}

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day ymd(day);
  const hh_mm_ss hms(t - day);
  return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}.{:03d}Z", int(ymd.year()),
                     unsigned(ymd.month()), unsigned(ymd.day()), hms.hours().count(),
                     hms.minutes().count(), hms.seconds().count(), hms.subseconds().count());
}

Timestamp parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  int y = 0;
  unsigned mo = 0, d = 0, h = 0, mi = 0, s = 0, ms = 0;
  int consumed = 0;
  const std::string buf(text);
  if (text.size() != 24 ||
      std::sscanf(buf.c_str(), "%4d-%2u-%2uT%2u:%2u:%2u.%3uZ%n", &y, &mo, &d, &h, &mi, &s, &ms,
                  &consumed) != 7 ||
      consumed != 24) {
    throw RecordError("bad timestamp '" + buf + "'");
  }
  const year_month_day ymd{year{y}, month{mo}, day{d}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) throw RecordError("bad timestamp '" + buf + "'");
  return sys_days(ymd) + hours(h) + minutes(mi) + seconds(s) + milliseconds(ms);
}

MeasurementRecord make_record(const AnalysisResult& analysis, std::string patient_id,
                              Timestamp timestamp, std::vector<CycleEvent> event_log) {
  MeasurementRecord r;
  r.timestamp = timestamp;
  r.patient_id = std::move(patient_id);
  r.raw_hue = analysis.hue.raw_hue;
  r.actual_hue = analysis.hue.actual_hue;
  r.degenerate_fraction = analysis.hue.degenerate_fraction;
  r.values = analysis.report.values;
  r.winner = analysis.report.winner;
  r.band = analysis.report.band;
  r.kernel = analysis.kernel;
  r.event_log = std::move(event_log);
  return r;
}

std::string to_json_line(const MeasurementRecord& r) {
  json values = json::object();
  for (const auto& [color, v] : r.values) values[std::string(color_name(color))] = v;
  json events = json::array();
  for (const CycleEvent& e : r.event_log) events.push_back(event_to_json(e));

  json j = {{"timestamp", format_timestamp(r.timestamp)},
            {"patient_id", r.patient_id},
            {"raw_hue", r.raw_hue},
            {"actual_hue", r.actual_hue},
            {"degenerate_fraction", r.degenerate_fraction},
            {"values", values},
            {"winner", r.winner ? color_name(*r.winner) : kIndeterminate},
            {"kernel", {r.kernel.row_radius, r.kernel.col_radius}},
            {"event_log", events}};
  j["band"] = r.band ? band_to_json(*r.band) : json(nullptr);
  return j.dump();
}

MeasurementRecord record_from_json(std::string_view line) {
  try {
    const json j = json::parse(line);
    MeasurementRecord r;
    r.timestamp = parse_timestamp(j.at("timestamp").get<std::string>());
    r.patient_id = j.at("patient_id").get<std::string>();
    r.raw_hue = j.at("raw_hue").get<double>();
    r.actual_hue = j.at("actual_hue").get<double>();
    r.degenerate_fraction = j.at("degenerate_fraction").get<double>();
    for (const auto& [name, v] : j.at("values").items()) {
      const auto c = parse_color(name);
      if (!c) throw RecordError("unknown colour " + name);
      r.values[*c] = v.get<double>();
    }
    const auto winner = j.at("winner").get<std::string>();
    if (winner != kIndeterminate) r.winner = color_from_json(j.at("winner"));
    if (!j.at("band").is_null()) r.band = band_from_json(j.at("band"));
    r.kernel = {j.at("kernel").at(0).get<int>(), j.at("kernel").at(1).get<int>()};
    for (const json& e : j.at("event_log")) r.event_log.push_back(event_from_json(e));
    return r;
  } catch (const json::exception& e) {
    throw RecordError(std::string("malformed record: ") + e.what());
  }
}

std::string summary_line(const MeasurementRecord& r) {
  if (!r.winner || !r.band) return "Sugar level undetermined: repeat the test";
  const auto marks = marks_symbol(r.band->marks);
  const auto color = color_name(*r.winner);
  switch (r.band->marks) {
    case Marks::kNil: return fmt::format("Sugar {} ({}): no action needed", marks, color);
    case Marks::kPlus1:
    case Marks::kPlus2: return fmt::format("Sugar {} ({}): watch diet and medication", marks, color);
    case Marks::kPlus3:
    case Marks::kPlus4: return fmt::format("Sugar {} ({}): consult your physician", marks, color);
  }
  return fmt::format("Sugar {} ({})", marks, color);
}

void append_record(const std::string& log_path, const MeasurementRecord& record) {
  const std::string line = to_json_line(record) + "\n";
  std::ofstream out(log_path, std::ios::binary | std::ios::app);
  if (!out) throw RecordError("cannot open log " + log_path);
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
  if (!out) throw RecordError("cannot write log " + log_path);
}

std::vector<MeasurementRecord> read_log(const std::string& log_path) {
  std::ifstream in(log_path, std::ios::binary);
  if (!in) throw RecordError("cannot open log " + log_path);
  std::vector<MeasurementRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) records.push_back(record_from_json(line));
  }
  return records;
}

}  // namespace urisense
