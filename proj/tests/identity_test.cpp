#include "urisense/identity.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <random>

namespace urisense {
namespace {

IdentifyErrorKind identify_error(double kg, const PatientRegistry& reg) {
  try {
    identify(kg, reg);
  } catch (const IdentifyError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected IdentifyError";
  return IdentifyErrorKind::kNoMatch;
}

// Result as an optional id; empty on no-match, "?" on ambiguity.
std::optional<std::string> outcome(double kg, const PatientRegistry& reg) {
  try {
    return identify(kg, reg);
  } catch (const IdentifyError& e) {
    if (e.kind() == IdentifyErrorKind::kAmbiguous) return "?";
    return std::nullopt;
  }
}

TEST(Identify, NearestWithinTolerance) {
  const PatientRegistry reg({{"A", 60}, {"B", 75}, {"C", 90}}, 2.0);
  EXPECT_EQ(identify(74.2, reg), "B");
}

TEST(Identify, ExactMatchDefaultTolerance) {
  const PatientRegistry reg({{"A", 60}});
  EXPECT_EQ(reg.tolerance_kg(), 2.0);
  EXPECT_EQ(identify(60.0, reg), "A");
}

TEST(Identify, AmbiguousWhenTwoWithinTolerance) {
  const PatientRegistry reg({{"A", 60}, {"B", 61}}, 2.0);
  EXPECT_EQ(identify_error(60.4, reg), IdentifyErrorKind::kAmbiguous);
  EXPECT_EQ(identify_error(60.5, reg), IdentifyErrorKind::kAmbiguous);  // equidistant
}

TEST(Identify, NoMatch) {
  const PatientRegistry reg({{"A", 60}, {"B", 75}}, 2.0);
  EXPECT_EQ(identify_error(68.0, reg), IdentifyErrorKind::kNoMatch);
  EXPECT_EQ(identify(62.0, reg), "A");  // boundary is inclusive
}

TEST(Identify, InvalidInputs) {
  EXPECT_THROW(PatientRegistry({}), std::invalid_argument);
  EXPECT_THROW(PatientRegistry({{"A", 60}, {"A", 70}}), std::invalid_argument);
  EXPECT_THROW(PatientRegistry({{"A", 0}}), std::invalid_argument);
  EXPECT_THROW(PatientRegistry({{"A", 60}}, 0.0), std::invalid_argument);
  const PatientRegistry reg({{"A", 60}});
  EXPECT_THROW(identify(-1.0, reg), std::invalid_argument);
}

class IdentifyProperty : public ::testing::Test {
 protected:
  std::vector<RegistryEntry> random_entries() {
    std::uniform_int_distribution<int> count(1, 6);
    std::uniform_int_distribution<int> quarter_kg(80, 480);  // 20-120 kg in 0.25 kg steps
    std::vector<RegistryEntry> entries;
    const int n = count(rng_);
    for (int i = 0; i < n; ++i) {
      entries.push_back({"P" + std::to_string(i), quarter_kg(rng_) * 0.25});
    }
    return entries;
  }
  double random_reading() { return std::uniform_int_distribution<int>(80, 480)(rng_) * 0.25 + 0.125; }

  std::mt19937_64 rng_{42};
};

TEST_F(IdentifyProperty, RegistryOrderIsIrrelevant) {
  for (int trial = 0; trial < 500; ++trial) {
    auto entries = random_entries();
    const double kg = random_reading();
    const auto want = outcome(kg, PatientRegistry(entries, 2.0));
    std::shuffle(entries.begin(), entries.end(), rng_);
    ASSERT_EQ(outcome(kg, PatientRegistry(entries, 2.0)), want);
  }
}

TEST_F(IdentifyProperty, LargerToleranceNeverLosesAMatch) {
  for (int trial = 0; trial < 500; ++trial) {
    const auto entries = random_entries();
    const double kg = random_reading();
    const auto tight = outcome(kg, PatientRegistry(entries, 1.0));
    if (!tight || *tight == "?") continue;
    for (double t : {1.5, 3.0, 10.0}) {
      const auto loose = outcome(kg, PatientRegistry(entries, t));
      ASSERT_TRUE(loose);
      ASSERT_TRUE(*loose == *tight || *loose == "?");
    }
  }
}

TEST_F(IdentifyProperty, ShiftingEverythingKeepsTheAnswer) {
  for (int trial = 0; trial < 500; ++trial) {
    auto entries = random_entries();
    const double kg = random_reading();
    const auto want = outcome(kg, PatientRegistry(entries, 2.0));
    for (auto& e : entries) e.weight_kg += 8.0;
    ASSERT_EQ(outcome(kg + 8.0, PatientRegistry(entries, 2.0)), want);
  }
}

}  // namespace
}  // namespace urisense
