#include "wreath/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include "wreath/embedding.hpp"
#include "wreath/error.hpp"
#include "wreath/literal.hpp"
#include "wreath/tree.hpp"

namespace wreath {

VerifyScale VerifyScale::quick() {
  VerifyScale s;
  s.parry_radius_z2 = 6;
  s.parry_radius_z3 = 4;
  s.sandwich_radius = 6;
  s.random_tree_cases = 500;
  s.cocycle_triples = 100;
  s.equivariance_pairs = 100;
  s.properness_max_radius = 3;
  s.compression_samples = 2'000;
  s.compression_scale = 200;
  return s;
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::string title) { result_.title = std::move(title); }

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.detail = what;
  }

  template <typename Describe>
  void expect_lazy(bool ok, Describe&& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.detail = describe();
  }

  void note(std::string detail) {
    if (result_.failures == 0) result_.detail = std::move(detail);
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

template <typename Fn>
CheckResult guarded(const std::string& title, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    CheckResult r;
    r.title = title;
    r.cases = 1;
    r.failures = 1;
    r.detail = std::string("error: ") + e.what();
    return r;
  }
}

}  // namespace

int estim_table_row(std::int64_t n, std::int64_t m, std::int64_t max) {
  if (n >= 0) {
    if (m >= 0) return max > n ? 1 : 2;
    return max > n ? 3 : 4;
  }
  if (max <= 0) return m < n ? 5 : 6;
  return m < n ? 7 : 8;
}

EstimRowValues estim_table_values(int row, std::int64_t n, std::int64_t m, std::int64_t M) {
  switch (row) {
    case 1: return {n, 2 * M - n, 2 * M - n, 2 * M};
    case 2: return {n, n, n, 2 * n};
    case 3: return {n - 2 * m, 2 * M - n, 2 * M - 2 * m - n, 2 * M - 2 * m};
    case 4: return {n - 2 * m, n, n - 2 * m, 2 * n - 2 * m};
    case 5: return {n - 2 * m, -n, n - 2 * m, -2 * m};
    case 6: return {-n, -n, -n, -2 * n};
    case 7: return {n - 2 * m, 2 * M - n, 2 * M - 2 * m + n, 2 * M - 2 * m};
    case 8: return {-n, 2 * M - n, 2 * M - n, 2 * M - 2 * n};
    default: throw DomainError("table rows are numbered 1..8");
  }
}

CheckResult check_parry_formula(const GroupSpec& spec, std::int64_t radius, std::size_t budget) {
  const std::string title = "word-length formula = Cayley BFS on the radius-" + std::to_string(radius) + " ball of " +
                            spec.to_string() + " wr Z";
  return guarded(title, [&] {
    Recorder rec(title);
    const LengthMap lengths = cayley_bfs(spec, radius, budget);
    const auto gens = sigma_generators(spec);
    for (const auto& [x, len] : lengths) {
      const std::int64_t formula = word_length(x);
      rec.expect_lazy(formula == len, [&] {
        return format_element(x) + ": formula " + std::to_string(formula) + ", BFS " + std::to_string(len);
      });
      if (len != radius) continue;
      // Neighbours just outside the ball must sit at radius + 1.
      for (const auto& g : gens) {
        const WreathElement y = mul(x, g);
        if (lengths.contains(y)) continue;
        rec.expect_lazy(word_length(y) == radius + 1, [&] {
          return format_element(y) + " outside the ball has formula length " + std::to_string(word_length(y));
        });
      }
    }
    rec.note(std::to_string(lengths.size()) + " elements");
    return rec.done();
  });
}

std::vector<WreathElement> tree_distance_instances(const VerifyScale& scale) {
  std::vector<WreathElement> out;
  const GroupSpec z2 = GroupSpec::cyclic(2);
  for (unsigned mask = 0; mask < (1u << 7); ++mask) {
    std::vector<LampConfig::Entry> entries;
    for (int bit = 0; bit < 7; ++bit)
      if (mask & (1u << bit)) entries.emplace_back(bit - 3, 1);
    const LampConfig lamps = LampConfig::from_entries(z2, entries);
    for (std::int64_t n = -4; n <= 4; ++n) out.emplace_back(lamps, n);
  }
  std::mt19937_64 rng(scale.seed);
  const GroupSpec z = GroupSpec::integers();
  for (std::size_t i = 0; i < scale.random_tree_cases; ++i) out.push_back(random_element(z, rng, 3, 2, 4));
  return out;
}

CheckResult check_tree_distances(const VerifyScale& scale) {
  const std::string title = "tree distance: closed form = geodesic = tree BFS";
  return guarded(title, [&] {
    Recorder rec(title);
    for (const auto& x : tree_distance_instances(scale)) {
      const std::int64_t value_radius = x.group().is_finite() ? x.group().diameter() : 2;
      const auto stats = support_stats(x);
      for (TreeSide side : {TreeSide::Plus, TreeSide::Minus}) {
        const TreeVertex base = TreeVertex::base(side, x.group());
        const TreeVertex v = vertex_of(x, side);
        const std::int64_t closed = dist_from_base(x, side);
        const std::int64_t geo = dist(base, v);
        const auto path = geodesic(base, v);
        const std::int64_t bfs = tree_bfs_dist(base, v, value_radius, scale.budget);
        rec.expect_lazy(closed == geo && geo == bfs && static_cast<std::int64_t>(path.size()) == geo + 1, [&] {
          return format_element(x) + " " + to_string(side) + ": closed " + std::to_string(closed) + ", geodesic " +
                 std::to_string(geo) + ", BFS " + std::to_string(bfs);
        });
        rec.expect_lazy(closed >= std::abs(x.shift()), [&] { return format_element(x) + ": d < |n|"; });
        if (!stats.min_position) continue;
        const bool lower = side == TreeSide::Plus ? closed >= -*stats.min_position : closed >= *stats.max_position;
        rec.expect_lazy(lower, [&] { return format_element(x) + ": support lower bound fails"; });
      }
    }
    return rec.done();
  });
}

CheckResult check_estim_table(const VerifyScale& scale) {
  const std::string title = "L_Z case table rows and d+- <= L_Z <= d+ + d-";
  return guarded(title, [&] {
    Recorder rec(title);
    std::mt19937_64 rng(scale.seed + 3);
    std::uniform_int_distribution<std::int64_t> coord(-10, 10);
    const GroupSpec z2 = GroupSpec::cyclic(2);
    for (int row = 1; row <= 8; ++row) {
      std::size_t hits = 0;
      for (std::size_t attempt = 0; hits < scale.table_instances && attempt < 1'000'000; ++attempt) {
        std::int64_t n = coord(rng), m = coord(rng), M = coord(rng);
        if (m > M) std::swap(m, M);
        if (estim_table_row(n, m, M) != row) continue;
        ++hits;
        std::vector<LampConfig::Entry> entries{{m, 1}};
        if (M != m) entries.emplace_back(M, 1);
        for (std::int64_t p = m + 1; p < M; ++p)
          if (rng() & 1) entries.emplace_back(p, 1);
        const WreathElement x(LampConfig::from_entries(z2, entries), n);
        const auto want = estim_table_values(row, n, m, M);
        const std::int64_t dp = dist_from_base(x, TreeSide::Plus), dm = dist_from_base(x, TreeSide::Minus);
        rec.expect_lazy(l_z(x) == want.l_z && dp == want.d_plus && dm == want.d_minus && dp + dm == want.sum, [&] {
          return "row " + std::to_string(row) + " at " + format_element(x) + ": L_Z " + std::to_string(l_z(x)) +
                 " vs " + std::to_string(want.l_z);
        });
      }
      rec.expect(hits >= scale.table_instances, "row " + std::to_string(row) + " region under-sampled");
    }
    bool row_hit[9] = {};
    for (const auto& x : tree_distance_instances(scale)) {
      if (x.lamps().empty()) continue;
      const std::int64_t dp = dist_from_base(x, TreeSide::Plus), dm = dist_from_base(x, TreeSide::Minus);
      const std::int64_t l = l_z(x);
      row_hit[estim_table_row(x.shift(), *x.lamps().min_position(), *x.lamps().max_position())] = true;
      rec.expect_lazy(dp <= l && dm <= l && l <= dp + dm,
                      [&] { return "sandwich fails at " + format_element(x); });
    }
    for (int row = 1; row <= 8; ++row)
      rec.expect(row_hit[row], "row " + std::to_string(row) + " not hit by the tree-distance instances");
    return rec.done();
  });
}

CheckResult check_word_length_sandwich(const GroupSpec& spec, std::int64_t radius, std::size_t budget) {
  const std::string title = "d+- + sum|l_i| <= |g| <= d+ + d- + sum|l_i| on the radius-" + std::to_string(radius) +
                            " ball of " + spec.to_string() + " wr Z";
  return guarded(title, [&] {
    Recorder rec(title);
    for (const auto& [x, len] : cayley_bfs(spec, radius, budget)) {
      const std::int64_t cost = support_stats(x).lamp_cost;
      const std::int64_t dp = dist_from_base(x, TreeSide::Plus), dm = dist_from_base(x, TreeSide::Minus);
      rec.expect_lazy(dp + cost <= len && dm + cost <= len && len <= dp + dm + cost,
                      [&] { return "sandwich fails at " + format_element(x); });
    }
    return rec.done();
  });
}

namespace {

TreeVertex random_vertex(const GroupSpec& spec, TreeSide side, std::mt19937_64& rng) {
  return vertex_of(random_element(spec, rng, 5, spec.is_finite() ? spec.diameter() : 2, 6), side);
}

}  // namespace

CheckResult check_cocycle_identities(const VerifyScale& scale) {
  const std::string title = "cocycle: c(x,y) + c(y,z) = c(x,z) and ||c(x,y)||^2 = d(x,y)";
  return guarded(title, [&] {
    Recorder rec(title);
    std::mt19937_64 rng(scale.seed + 5);
    for (const GroupSpec& spec : {GroupSpec::cyclic(2), GroupSpec::integers()}) {
      for (TreeSide side : {TreeSide::Plus, TreeSide::Minus}) {
        for (std::size_t i = 0; i < scale.cocycle_triples; ++i) {
          const TreeVertex x = random_vertex(spec, side, rng);
          const TreeVertex y = random_vertex(spec, side, rng);
          const TreeVertex z = random_vertex(spec, side, rng);
          const auto cxy = cocycle(x, y);
          rec.expect_lazy(cxy + cocycle(y, z) == cocycle(x, z),
                          [&] { return "Chasles fails at " + format_vertex(x) + ", " + format_vertex(y); });
          rec.expect_lazy(norm_squared(cxy) == Rational(dist(x, y)),
                          [&] { return "norm fails at " + format_vertex(x) + ", " + format_vertex(y); });
        }
      }
    }
    return rec.done();
  });
}

CheckResult check_equivariance(const VerifyScale& scale) {
  const std::string title = "alpha(gh) = alpha(g)alpha(h), iota and sigma equivariant";
  return guarded(title, [&] {
    Recorder rec(title);
    const GroupSpec z2 = GroupSpec::cyclic(2);
    std::mt19937_64 rng(scale.seed + 7);
    for (std::size_t i = 0; i < scale.equivariance_pairs; ++i) {
      const WreathElement g = random_element(z2, rng, 4, 1, 5);
      const WreathElement h = random_element(z2, rng, 4, 1, 5);
      for (TreeSide side : {TreeSide::Plus, TreeSide::Minus}) {
        const TreeVertex base = TreeVertex::base(side, z2);
        const auto ag = affine_alpha(g, base);
        rec.expect_lazy(affine_alpha(mul(g, h), base) == ag.compose(affine_alpha(h, base)),
                        [&] { return "homomorphism law fails at " + format_element(g) + ", " + format_element(h); });
        const TreeVertex v = vertex_of(h, side);
        rec.expect_lazy(ag(iota(v, base)) == iota(act(g, v), base),
                        [&] { return "iota equivariance fails at " + format_element(g) + ", " + format_vertex(v); });
      }
      const auto image = gamma_action_on_sum(g, sigma<double>(h, TreeMode::cocycle(), HMode::DiracSimplex),
                                             HMode::DiracSimplex);
      rec.expect_lazy(image == sigma<double>(mul(g, h), TreeMode::cocycle(), HMode::DiracSimplex),
                      [&] { return "sigma equivariance fails at " + format_element(g) + ", " + format_element(h); });
    }
    return rec.done();
  });
}

CheckResult check_properness(const VerifyScale& scale) {
  const std::string title = "properness: superset count = exhaustive count, monotone in R";
  return guarded(title, [&] {
    Recorder rec(title);
    const GroupSpec z2 = GroupSpec::cyclic(2);
    std::ostringstream summary;
    for (std::int64_t p : {1, 2}) {
      std::size_t previous = properness_check(z2, Rational(0), Rational(p)).count;
      rec.expect(previous == 1, "R = 0 should only admit the identity");
      summary << "p=" << p << ":";
      for (std::int64_t r = 1; r <= scale.properness_max_radius; ++r) {
        const auto report = properness_check(z2, Rational(r), Rational(p));
        const std::size_t scanned = properness_exhaustive_count(z2, Rational(r), Rational(p), scale.budget);
        rec.expect_lazy(report.count == scanned, [&] {
          return "p=" + std::to_string(p) + " R=" + std::to_string(r) + ": superset " + std::to_string(report.count) +
                 ", scan " + std::to_string(scanned);
        });
        rec.expect(report.count >= previous, "count not monotone at R=" + std::to_string(r));
        rec.expect(static_cast<long double>(report.count) <= report.superset_size, "count exceeds superset");
        previous = report.count;
        summary << ' ' << report.count;
      }
      summary << "; ";
    }
    rec.note(summary.str());
    return rec.done();
  });
}

SampleConfig compression_config(const VerifyScale& scale) {
  SampleConfig config;
  config.spec = GroupSpec::cyclic(2);
  config.tree_mode = TreeMode::cocycle();
  config.h_mode = HMode::DiracSimplex;
  config.scale = scale.compression_scale;
  config.count = scale.compression_samples;
  config.seed = scale.seed;
  return config;
}

CheckResult check_sample_audits(const std::vector<DistortionSample>& samples, const SampleConfig& config) {
  const std::string title = "Lipschitz and separation audits of sigma";
  return guarded(title, [&] {
    const AuditResult audit = audit_samples(samples, config.spec, config.tree_mode, config.h_mode);
    CheckResult out;
    out.title = title;
    out.cases = samples.size();
    out.failures = audit.lipschitz_violations + audit.separation_violations + audit.zero_mismatches;
    std::ostringstream detail;
    detail << "lipschitz<=" << audit.lipschitz_constant << " (max ratio " << audit.max_ratio
           << "), separation>=" << audit.separation << ", violations " << audit.lipschitz_violations << "/"
           << audit.separation_violations << "/" << audit.zero_mismatches;
    out.detail = detail.str();
    return out;
  });
}

CheckResult check_bounds() {
  const std::string title = "compression bound calculator and crossover";
  return guarded(title, [&] {
    Recorder rec(title);
    const BoundSet one = bounds(Rational(1));
    rec.expect(one.non_equivariant_lower == Rational(1, 2), "bounds(1) lower != 1/2");
    rec.expect(one.upper_ref == Rational(3, 4), "upper reference != 3/4");
    const BoundSet half = bounds(Rational(1, 2));
    rec.expect(half.equivariant_lower == Rational(1, 4), "bounds(1/2) equivariant lower != 1/4");
    rec.expect(half.non_equivariant_lower == Rational(1, 3), "bounds(1/2) lower != 1/3");

    const double crossover = crossover_value();
    auto gap = [](double t) { return (t - 0.5) - t / (2.0 * t + 1.0); };
    double below = 0.0, above = 1.0;
    for (std::int64_t i = 0; i <= 1000; ++i) {
      const Rational t(i, 1000);
      const Rational exact_gap = (t - Rational(1, 2)) - t / (Rational(2) * t + Rational(1));
      const bool nonneg = exact_gap >= Rational(0);
      rec.expect(nonneg == (to_double(t) >= crossover), "sign flip misplaced at t = " + format_scalar(t));
      if (!nonneg) below = std::max(below, to_double(t));
      if (nonneg) above = std::min(above, to_double(t));
    }
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (below + above);
      (gap(mid) >= 0.0 ? above : below) = mid;
    }
    rec.expect(std::abs(above - crossover) <= 1e-12, "bisected crossover differs from (1+sqrt5)/4");

    BoundSet previous = bounds(Rational(0));
    rec.expect(previous.non_equivariant_lower == Rational(0) && previous.equivariant_lower == Rational(0), "bounds(0) not zero");
    for (std::int64_t i = 1; i <= 100; ++i) {
      const BoundSet b = bounds(Rational(i, 100));
      rec.expect(b.non_equivariant_lower >= previous.non_equivariant_lower &&
                     b.equivariant_lower >= previous.equivariant_lower && b.non_equivariant_lower <= b.r_h,
                 "bounds not monotone at " + format_scalar(b.r_h));
      previous = b;
    }
    std::ostringstream detail;
    detail.precision(15);
    detail << "crossover " << above;
    rec.note(detail.str());
    return rec.done();
  });
}

CheckResult check_envelope(const std::vector<DistortionSample>& samples, double floor) {
  std::ostringstream title;
  title << "envelope exponent >= " << floor;
  return guarded(title.str(), [&] {
    Recorder rec(title.str());
    const EnvelopeFit fit = fit_envelope(samples, Bucketing::exact());
    std::ostringstream detail;
    detail << "alpha_hat " << fit.exponent << " over " << fit.bucket_count << " buckets, lengths " << fit.min_length
           << ".." << fit.max_length;
    rec.expect(fit.exponent >= floor, detail.str());
    rec.note(detail.str());
    return rec.done();
  });
}

std::vector<CheckResult> run_suite(const VerifyScale& scale) {
  std::vector<CheckResult> out;
  out.push_back(check_parry_formula(GroupSpec::cyclic(2), scale.parry_radius_z2, scale.budget));
  out.push_back(check_parry_formula(GroupSpec::cyclic(3), scale.parry_radius_z3, scale.budget));
  out.push_back(check_tree_distances(scale));
  out.push_back(check_estim_table(scale));
  out.push_back(check_word_length_sandwich(GroupSpec::cyclic(2), scale.sandwich_radius, scale.budget));
  out.push_back(check_cocycle_identities(scale));
  out.push_back(check_equivariance(scale));
  out.push_back(check_properness(scale));
  const SampleConfig config = compression_config(scale);
  const auto samples = sample_pairs(config);
  out.push_back(check_sample_audits(samples, config));
  out.push_back(check_bounds());
  out.push_back(check_envelope(samples, 0.45));
  return out;
}

}  // namespace wreath
