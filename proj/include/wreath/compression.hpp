#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wreath/embedding.hpp"
#include "wreath/scalar.hpp"

namespace wreath {

/// Product of `length` generators drawn uniformly from {a, a^-1, s, s^-1}.
WreathElement random_word(const GroupSpec& spec, std::int64_t length, std::mt19937_64& rng);

/// Uniform element with lamps at positions in [-support, support], values of
/// word length <= value_radius (each position independently nontrivial with
/// probability `density`) and shift in [-shift_radius, shift_radius].
WreathElement random_element(const GroupSpec& spec, std::mt19937_64& rng, std::int64_t support,
                             std::int64_t value_radius, std::int64_t shift_radius, double density = 0.5);

/// One measured pair (identity, y): |y| and ||sigma(y) - sigma(identity)||.
struct DistortionSample {
  std::int64_t word_length = 0;
  double embedded_dist = 0.0;

  friend bool operator==(const DistortionSample&, const DistortionSample&) = default;
};

struct SampleConfig {
  GroupSpec spec = GroupSpec::cyclic(2);
  TreeMode tree_mode = TreeMode::cocycle();
  HMode h_mode = HMode::DiracSimplex;
  /// Word lengths are drawn uniformly from [0, scale].
  std::int64_t scale = 1000;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

/// Deterministic for a fixed config regardless of thread count: sample i
/// draws from its own generator seeded from (seed, i).
std::vector<DistortionSample> sample_pairs(const SampleConfig& config);

/// Envelope buckets: one per distinct word length, or `count` log-spaced
/// bins over the observed length range.
struct Bucketing {
  enum class Kind { Exact, Log };
  Kind kind = Kind::Exact;
  std::size_t count = 0;

  static Bucketing exact() noexcept { return {}; }
  static Bucketing log(std::size_t count) noexcept { return {Kind::Log, count}; }
};

/// Lower-envelope point of one bucket: the sample with the smallest embedded
/// distance.
struct EnvelopePoint {
  std::int64_t bucket = 0;
  std::int64_t word_length = 0;
  double min_dist = 0.0;
};

std::vector<EnvelopePoint> lower_envelope(const std::vector<DistortionSample>& samples, const Bucketing& bucketing);

struct EnvelopeFit {
  double exponent = 0.0;   // slope, clamped to [0, 1]
  double intercept = 0.0;  // D such that dist ~ D * length^exponent
  std::size_t sample_count = 0;
  std::size_t bucket_count = 0;
  std::int64_t min_length = 0;
  std::int64_t max_length = 0;
  std::string method;
};

/// Least-squares line through (log length, log min distance) of the lower
/// envelope. Throws DomainError with fewer than two nonzero buckets.
EnvelopeFit fit_envelope(const std::vector<DistortionSample>& samples, const Bucketing& bucketing);

/// Violations of ||sigma(x) - sigma(y)|| <= (C+ + C- + C) |x^-1 y| and of the
/// separation bound ||sigma(x) - sigma(y)|| >= min{C, C+, C-} for x != y.
struct AuditResult {
  double lipschitz_constant = 0.0;
  double separation = 0.0;
  std::size_t lipschitz_violations = 0;
  std::size_t separation_violations = 0;
  std::size_t zero_mismatches = 0;  // length 0 <=> distance 0 broken
  double max_ratio = 0.0;           // max dist / length over nonzero lengths
};

AuditResult audit_samples(const std::vector<DistortionSample>& samples, const GroupSpec& spec,
                          const TreeMode& tree_mode, HMode h_mode);

/// Lower and upper compression bounds for H wr Z given the (equivariant)
/// compression r of H.
struct BoundSet {
  Rational r_h;
  Rational non_equivariant_lower;  // r / (r + 1)
  Rational equivariant_lower;      // max(r - 1/2, r / (2r + 1))
  Rational upper_ref;              // 3/4
  double crossover = 0.0;          // (1 + sqrt 5) / 4
};

/// Throws DomainError unless 0 <= r_h <= 1.
BoundSet bounds(const Rational& r_h);

/// Point where r - 1/2 overtakes r / (2r + 1) on [0, 1].
double crossover_value() noexcept;

}  // namespace wreath
