#include "wreath/compression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "wreath/error.hpp"

namespace wreath {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

WreathElement random_word(const GroupSpec& spec, std::int64_t length, std::mt19937_64& rng) {
  // Walk a dense buffer wide enough for every reachable position.
  std::vector<std::int64_t> cells(static_cast<std::size_t>(2 * length + 1), 0);
  std::int64_t cursor = 0;
  std::uniform_int_distribution<int> pick(0, 3);
  for (std::int64_t i = 0; i < length; ++i) {
    auto& cell = cells[static_cast<std::size_t>(cursor + length)];
    switch (pick(rng)) {
      case 0: cell = spec.multiply(cell, 1); break;
      case 1: cell = spec.multiply(cell, -1); break;
      case 2: ++cursor; break;
      default: --cursor; break;
    }
  }
  std::vector<LampConfig::Entry> entries;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i] != 0) entries.emplace_back(static_cast<std::int64_t>(i) - length, cells[i]);
  return {LampConfig::from_entries(spec, std::move(entries)), cursor};
}

WreathElement random_element(const GroupSpec& spec, std::mt19937_64& rng, std::int64_t support,
                             std::int64_t value_radius, std::int64_t shift_radius, double density) {
  const auto values = ball(spec, value_radius);
  std::vector<GroupElement> nontrivial;
  for (const auto& h : values)
    if (!h.is_identity()) nontrivial.push_back(h);
  std::bernoulli_distribution lit(density);
  std::uniform_int_distribution<std::size_t> pick(0, nontrivial.empty() ? 0 : nontrivial.size() - 1);
  std::vector<LampConfig::Entry> entries;
  for (std::int64_t pos = -support; pos <= support; ++pos)
    if (!nontrivial.empty() && lit(rng)) entries.emplace_back(pos, nontrivial[pick(rng)].value());
  std::uniform_int_distribution<std::int64_t> shift(-shift_radius, shift_radius);
  return {LampConfig::from_entries(spec, std::move(entries)), shift(rng)};
}

std::vector<DistortionSample> sample_pairs(const SampleConfig& config) {
  if (config.count == 0) throw DomainError("sample count must be at least 1");
  if (config.scale < 0) throw DomainError("length scale must be non-negative");
  check_mode(config.spec, config.h_mode);

  std::vector<DistortionSample> samples(config.count);
  const auto origin = sigma<double>(WreathElement::identity(config.spec), config.tree_mode, config.h_mode);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(i)));
      std::uniform_int_distribution<std::int64_t> length(0, config.scale);
      const WreathElement y = random_word(config.spec, length(rng), rng);
      samples[i].word_length = word_length(y);
      samples[i].embedded_dist = norm(sigma<double>(y, config.tree_mode, config.h_mode) - origin);
    }
  };

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.count));
  if (threads <= 1) {
    work(0, config.count);
    return samples;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (config.count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(config.count, begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  return samples;
}

std::vector<EnvelopePoint> lower_envelope(const std::vector<DistortionSample>& samples, const Bucketing& bucketing) {
  std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = 0;
  for (const auto& s : samples) {
    if (s.word_length <= 0) continue;
    lo = std::min(lo, s.word_length);
    hi = std::max(hi, s.word_length);
  }
  std::map<std::int64_t, EnvelopePoint> buckets;
  if (hi == 0) return {};
  const bool log_bins = bucketing.kind == Bucketing::Kind::Log && bucketing.count > 0 && hi > lo;
  const double span = log_bins ? std::log(static_cast<double>(hi)) - std::log(static_cast<double>(lo)) : 0.0;
  for (const auto& s : samples) {
    if (s.word_length <= 0) continue;
    std::int64_t bucket = s.word_length;
    if (log_bins) {
      const double t = (std::log(static_cast<double>(s.word_length)) - std::log(static_cast<double>(lo))) / span;
      bucket = std::min(static_cast<std::int64_t>(bucketing.count) - 1,
                        static_cast<std::int64_t>(t * static_cast<double>(bucketing.count)));
    }
    auto [it, inserted] = buckets.try_emplace(bucket, EnvelopePoint{bucket, s.word_length, s.embedded_dist});
    if (!inserted && (s.embedded_dist < it->second.min_dist ||
                      (s.embedded_dist == it->second.min_dist && s.word_length > it->second.word_length)))
      it->second = EnvelopePoint{bucket, s.word_length, s.embedded_dist};
  }
  std::vector<EnvelopePoint> out;
  out.reserve(buckets.size());
  for (const auto& [b, point] : buckets) out.push_back(point);
  return out;
}

EnvelopeFit fit_envelope(const std::vector<DistortionSample>& samples, const Bucketing& bucketing) {
  const auto envelope = lower_envelope(samples, bucketing);
  std::vector<std::pair<double, double>> points;
  for (const auto& p : envelope)
    if (p.min_dist > 0.0)
      points.emplace_back(std::log(static_cast<double>(p.word_length)), std::log(p.min_dist));
  if (points.size() < 2) throw DomainError("envelope fit needs at least two nonzero buckets");

  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) throw DomainError("envelope fit needs at least two distinct word lengths");
  const double slope = sxy / sxx;

  EnvelopeFit fit;
  fit.exponent = std::clamp(slope, 0.0, 1.0);
  fit.intercept = std::exp(my - slope * mx);
  fit.sample_count = samples.size();
  fit.bucket_count = points.size();
  fit.min_length = envelope.front().word_length;
  fit.max_length = envelope.back().word_length;
  for (const auto& p : envelope) {
    fit.min_length = std::min(fit.min_length, p.word_length);
    fit.max_length = std::max(fit.max_length, p.word_length);
  }
  fit.method = bucketing.kind == Bucketing::Kind::Exact
                   ? "lower-envelope least squares, exact-length buckets"
                   : "lower-envelope least squares, " + std::to_string(bucketing.count) + " log buckets";
  return fit;
}

AuditResult audit_samples(const std::vector<DistortionSample>& samples, const GroupSpec& spec,
                          const TreeMode& tree_mode, HMode h_mode) {
  const ComponentBounds tree = tree_bounds(tree_mode);
  const ComponentBounds lamp = lamp_bounds(spec, h_mode);
  AuditResult result;
  result.lipschitz_constant = 2.0 * tree.lipschitz + lamp.lipschitz;
  result.separation = std::min(tree.separation, lamp.separation);
  // Slack for rounding in floating-point norms.
  constexpr double kRel = 1e-9;
  for (const auto& s : samples) {
    if ((s.word_length == 0) != (s.embedded_dist == 0.0)) ++result.zero_mismatches;
    if (s.word_length == 0) continue;
    const double len = static_cast<double>(s.word_length);
    result.max_ratio = std::max(result.max_ratio, s.embedded_dist / len);
    if (s.embedded_dist > result.lipschitz_constant * len * (1.0 + kRel)) ++result.lipschitz_violations;
    if (s.embedded_dist < result.separation * (1.0 - kRel)) ++result.separation_violations;
  }
  return result;
}

BoundSet bounds(const Rational& r_h) {
  if (r_h < Rational(0) || r_h > Rational(1)) throw DomainError("compression of H must lie in [0, 1]");
  BoundSet out;
  out.r_h = r_h;
  out.non_equivariant_lower = r_h / (r_h + Rational(1));
  out.equivariant_lower = std::max(r_h - Rational(1, 2), r_h / (Rational(2) * r_h + Rational(1)));
  out.upper_ref = Rational(3, 4);
  out.crossover = crossover_value();
  return out;
}

double crossover_value() noexcept { return (1.0 + std::sqrt(5.0)) / 4.0; }

}  // namespace wreath
