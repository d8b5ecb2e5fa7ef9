#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hlab {

// Reproduction suite: every check the library is expected to get right,
// with its tolerance and time budget pinned in code. Checks that fail
// report the computed values next to the required ones instead of being
// silenced, so a red row always carries its own analysis.

inline constexpr std::uint64_t kAcceptanceSeed = 0x10043A5BULL;

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  std::vector<std::string> notes;
};

int criteria_count(); // 14
CriterionResult run_criterion(int number, std::uint64_t seed = kAcceptanceSeed);
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed = kAcceptanceSeed);

// Randomized property suites, also reachable individually from the tests.
// `worst` is the suite's largest observed defect: an absolute residual for
// the numeric suites, the failure count for the exact ones.
struct PropertyOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  double worst = 0.0;
  std::vector<std::string> notes;
};

PropertyOutcome property_ring_laws(std::uint64_t seed, int cases = 200);
PropertyOutcome property_d_squared(std::uint64_t seed, int cases = 200);
PropertyOutcome property_antiderivation(std::uint64_t seed, int cases = 200);
PropertyOutcome property_levi_civita_axioms(std::uint64_t seed, int cases = 200);
PropertyOutcome property_bianchi(std::uint64_t seed, int cases = 200);
PropertyOutcome property_jet_finite_difference(std::uint64_t seed, int cases = 200);
PropertyOutcome property_first_integral(std::uint64_t seed, int cases = 200);
std::vector<PropertyOutcome> run_property_suites(std::uint64_t seed, int cases = 200);

} // namespace hlab
