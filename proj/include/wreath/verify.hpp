#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wreath/compression.hpp"
#include "wreath/oracles.hpp"

namespace wreath {

/// Outcome of one invariant suite.
struct CheckResult {
  std::string title;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// First failure, or a short summary of measured values.
  std::string detail;

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

/// Sizes of the invariant suites.
struct VerifyScale {
  std::int64_t parry_radius_z2 = 8;
  std::int64_t parry_radius_z3 = 6;
  std::int64_t sandwich_radius = 8;
  std::size_t random_tree_cases = 10'000;
  std::size_t table_instances = 20;
  std::size_t cocycle_triples = 1'000;
  std::size_t equivariance_pairs = 1'000;
  std::int64_t properness_max_radius = 4;
  std::size_t compression_samples = 100'000;
  std::int64_t compression_scale = 1'000;
  std::uint64_t seed = 20081;
  std::size_t budget = kDefaultElementBudget;

  static VerifyScale full() { return {}; }
  static VerifyScale quick();
};

/// Row 1..8 of the case table for L_Z, selected by the signs of n, m - n
/// (or m) and M - n (or M).
int estim_table_row(std::int64_t n, std::int64_t m, std::int64_t max);

/// Table entries (d+, d-, L_Z, d+ + d-) of `row` evaluated at (n, m, M).
struct EstimRowValues {
  std::int64_t d_plus, d_minus, l_z, sum;
};
EstimRowValues estim_table_values(int row, std::int64_t n, std::int64_t m, std::int64_t max);

CheckResult check_parry_formula(const GroupSpec& spec, std::int64_t radius, std::size_t budget);
/// The elements used for the tree-distance agreement suite: all Z/2 lamp
/// configurations on [-3, 3] with |n| <= 4, then random Z lamps in [-2, 2].
std::vector<WreathElement> tree_distance_instances(const VerifyScale& scale);
CheckResult check_tree_distances(const VerifyScale& scale);
CheckResult check_estim_table(const VerifyScale& scale);
CheckResult check_word_length_sandwich(const GroupSpec& spec, std::int64_t radius, std::size_t budget);
CheckResult check_cocycle_identities(const VerifyScale& scale);
CheckResult check_equivariance(const VerifyScale& scale);
CheckResult check_properness(const VerifyScale& scale);
CheckResult check_sample_audits(const std::vector<DistortionSample>& samples, const SampleConfig& config);
CheckResult check_bounds();
CheckResult check_envelope(const std::vector<DistortionSample>& samples, double floor);

/// Sampling configuration of the compression suites.
SampleConfig compression_config(const VerifyScale& scale);

/// Every suite in a fixed order.
std::vector<CheckResult> run_suite(const VerifyScale& scale);

}  // namespace wreath
