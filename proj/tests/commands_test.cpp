#include "urisense/commands.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"
#include "urisense/image_io.hpp"

namespace urisense {
namespace {

const Clock kFixedClock = [] { return parse_timestamp("2026-10-15T09:00:00.000Z"); };

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, kFixedClock);
  return {code, out.str(), err.str()};
}

class CommandsTest : public ::testing::Test {
 protected:
  std::filesystem::path hue_image(const std::string& name, double hue) {
    const auto path = dir_.file(name);
    save_image_file(path, RgbImage(16, 16, testing::hsi_to_rgb(hue, 0.7, 110.0)));
    return path;
  }

  std::filesystem::path config_with_log() {
    dir_.write("household.json",
               R"([{"id": "A", "weight_kg": 60}, {"id": "B", "weight_kg": 75},
                   {"id": "C", "weight_kg": 90}, {"id": "D", "weight_kg": 91}])");
    return dir_.write("config.json", R"({
      "registry": "household.json",
      "cycle": {"collect_s": 1, "reagent_s": 1, "heat_s": 1, "cool_s": 1, "sense_s": 1, "drain_s": 1},
      "log": "readings.jsonl"
    })");
  }

  testing::TempDir dir_;
};

TEST_F(CommandsTest, AnalyzeGreenImage) {
  const auto image = hue_image("green.ppm", 0.272);
  std::ostringstream out, err;
  CommandContext ctx{out, err, kFixedClock};
  const auto result = cmd_analyze(image, AppConfig{}, ctx);
  ASSERT_EQ(result.exit_code, kExitOk) << err.str();
  ASSERT_TRUE(result.record);
  EXPECT_EQ(result.record->winner, Color::kGreen);
  EXPECT_EQ(result.record->band->marks, Marks::kPlus1);
  EXPECT_EQ(record_from_json(out.str()), *result.record);
  EXPECT_EQ(err.str(), "Sugar + (green): watch diet and medication\n");
}

TEST_F(CommandsTest, AnalyzeRedWorkedExample) {
  const auto image = hue_image("red.bmp", 0.0257);
  const CliRun r = cli({"analyze", image.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto record = record_from_json(r.out);
  EXPECT_EQ(record.winner, Color::kRed);
  // 8-bit quantization moves the hue slightly off 0.0257.
  EXPECT_NEAR(record.actual_hue, 0.0257, 5e-4);
  EXPECT_NEAR(record.values.at(Color::kRed), 85.03, 0.3);
}

TEST_F(CommandsTest, AnalyzeMissingFileLeavesLogUntouched) {
  const auto config = config_with_log();
  const CliRun r = cli({"analyze", dir_.file("nope.ppm").string(), "--config", config.string()});
  EXPECT_EQ(r.code, kExitImage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(std::filesystem::exists(dir_.file("readings.jsonl")));
}

TEST_F(CommandsTest, AnalyzeCorruptImageAndBadConfigHaveDistinctCodes) {
  const auto corrupt = dir_.write("bad.ppm", "P6 4 4 255\n\x01\x02");
  EXPECT_EQ(cli({"analyze", corrupt.string()}).code, kExitImage);
  const auto bad_config = dir_.write("bad.json", "{\"kernel\": 3}");
  const auto image = hue_image("g.ppm", 0.3);
  EXPECT_EQ(cli({"analyze", image.string(), "--config", bad_config.string()}).code, kExitConfig);
  EXPECT_EQ(cli({"analyze"}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
}

TEST_F(CommandsTest, AnalyzeKernelOptionAndDeterminism) {
  const auto image = hue_image("g.ppm", 0.3);
  const CliRun a = cli({"analyze", image.string(), "--kernel", "2", "0"});
  const CliRun b = cli({"analyze", image.string(), "--kernel", "2", "0"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(record_from_json(a.out).kernel, (KernelSize{2, 0}));
}

TEST_F(CommandsTest, AnalyzeAppendsOneLinePerRun) {
  const auto config = config_with_log();
  const auto image = hue_image("g.ppm", 0.3);
  std::string previous;
  for (int i = 1; i <= 3; ++i) {
    ASSERT_EQ(cli({"analyze", image.string(), "--config", config.string()}).code, kExitOk);
    const std::string log = testing::read_file(dir_.file("readings.jsonl"));
    EXPECT_EQ(log.substr(0, previous.size()), previous);
    EXPECT_EQ(std::count(log.begin(), log.end(), '\n'), i);
    previous = log;
  }
}

TEST_F(CommandsTest, RunCycleIdentifiesPatient) {
  const auto config = config_with_log();
  const auto image = hue_image("blue.bmp", 0.5);
  const CliRun r = cli({"run-cycle", image.string(), "--weight", "74.2", "--config", config.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto record = record_from_json(r.out);
  EXPECT_EQ(record.patient_id, "B");
  EXPECT_EQ(record.winner, Color::kBlue);
  EXPECT_EQ(record.event_log.back().phase, Phase::kIdle);
  EXPECT_EQ(read_log(dir_.file("readings.jsonl").string()).front(), record);
}

TEST_F(CommandsTest, RunCycleWithoutWeight) {
  const auto config = config_with_log();
  const auto image = hue_image("blue.ppm", 0.5);
  const CliRun r = cli({"run-cycle", image.string(), "--config", config.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(record_from_json(r.out).patient_id, "unknown");
}

TEST_F(CommandsTest, RunCycleAmbiguousWeightWarns) {
  const auto config = config_with_log();
  const auto image = hue_image("blue.ppm", 0.5);
  const CliRun r = cli({"run-cycle", image.string(), "--weight", "90.5", "--config", config.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(record_from_json(r.out).patient_id, "unknown");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(read_log(dir_.file("readings.jsonl").string()).size(), 1u);
}

TEST_F(CommandsTest, RunCycleBadImageAborts) {
  const auto config = config_with_log();
  const CliRun r = cli({"run-cycle", dir_.file("missing.ppm").string(), "--config", config.string()});
  EXPECT_EQ(r.code, kExitImage);
  EXPECT_NE(r.err.find("drained"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(dir_.file("readings.jsonl")));
}

TEST(CurveGrid, HitsExactDecimalPoints) {
  const auto grid = curve_grid(0.001);
  ASSERT_EQ(grid.size(), 1001u);
  EXPECT_EQ(grid[7], 0.007);
  EXPECT_EQ(grid[272], 0.272);
  EXPECT_EQ(grid[500], 0.5);
  EXPECT_EQ(grid.back(), 1.0);
  const auto odd = curve_grid(0.3);
  EXPECT_EQ(odd, (std::vector<double>{0.0, 0.3, 0.6, 0.8999999999999999, 1.0}));
}

TEST_F(CommandsTest, ExportCurvesCsv) {
  const auto out_path = dir_.file("curves.csv");
  const CliRun r = cli({"export-curves", "--step", "0.001", "--out", out_path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream csv(testing::read_file(out_path));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "hue,red,yellow,green,blue");
  std::map<std::string, std::vector<double>> rows;
  while (std::getline(csv, line)) {
    std::istringstream fields(line);
    std::string hue, cell;
    std::getline(fields, hue, ',');
    while (std::getline(fields, cell, ',')) rows[hue].push_back(std::stod(cell));
  }
  ASSERT_EQ(rows.size(), 1001u);
  EXPECT_NEAR(rows.at("0.007")[0], 100.0, 1e-9);
  EXPECT_EQ(rows.at("0.9"), (std::vector<double>{0, 0, 0, 0}));
  EXPECT_NEAR(rows.at("0.5")[2], 20.0, 1e-9);
  EXPECT_NEAR(rows.at("0.5")[3], 80.0, 1e-9);
}

TEST_F(CommandsTest, ExportCurvesStepValidationAndStdout) {
  EXPECT_EQ(cli({"export-curves", "--step", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"export-curves", "--step", "0.2"}).code, kExitUsage);
  const CliRun r = cli({"export-curves", "--step", "0.1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 12);
}

TEST_F(CommandsTest, ExportCurvesWithOrangeColumn) {
  dir_.write("train.json", R"({"orange": [[0.05, 50], [0.1, 90]]})");
  const auto config = dir_.write("config.json", R"({"training_sets": "train.json"})");
  const CliRun r = cli({"export-curves", "--step", "0.05", "--config", config.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "hue,red,yellow,green,blue,orange");
  const auto row = r.out.find("\n0.1,");
  ASSERT_NE(row, std::string::npos);
  const auto end = r.out.find('\n', row + 1);
  EXPECT_EQ(r.out.substr(end - 3, 3), ",90") << r.out;
}

}  // namespace
}  // namespace urisense
