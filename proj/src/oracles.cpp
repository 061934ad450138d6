#include "wreath/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <unordered_set>

#include "wreath/error.hpp"

namespace wreath {

std::size_t element_budget_from_env() {
  const char* raw = std::getenv("WREATH_ELEMENT_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultElementBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return kDefaultElementBudget;
  return static_cast<std::size_t>(value);
}

std::vector<WreathElement> sigma_generators(const GroupSpec& spec) {
  const WreathElement a = WreathElement::lamp_generator(spec);
  const WreathElement s = WreathElement::shift_generator(spec);
  std::vector<WreathElement> gens{a, inv(a), s, inv(s)};
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::string describe_generators(const GroupSpec& spec) {
  return sigma_generators(spec).size() == 3 ? "{a, s, s^-1}" : "{a, a^-1, s, s^-1}";
}

LengthMap cayley_bfs(const GroupSpec& spec, std::int64_t radius_cap, std::size_t budget) {
  if (radius_cap < 0) throw DomainError("radius must be non-negative");
  const auto gens = sigma_generators(spec);
  LengthMap lengths;
  std::vector<WreathElement> frontier{WreathElement::identity(spec)};
  lengths.emplace(frontier.front(), 0);
  for (std::int64_t layer = 1; layer <= radius_cap && !frontier.empty(); ++layer) {
    std::vector<WreathElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        WreathElement y = mul(x, g);
        if (lengths.contains(y)) continue;
        if (lengths.size() >= budget) throw BudgetExceeded("Cayley ball search exceeded its element budget", budget);
        lengths.emplace(y, layer);
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return lengths;
}

std::vector<BallReport> ball_reports(const GroupSpec& spec, std::int64_t radius, std::size_t element_cap,
                                     std::size_t budget) {
  const LengthMap lengths = cayley_bfs(spec, radius, budget);
  std::vector<std::size_t> per_layer(static_cast<std::size_t>(radius) + 1, 0);
  std::vector<std::pair<std::int64_t, const WreathElement*>> ordered;
  for (const auto& [x, len] : lengths) {
    ++per_layer[static_cast<std::size_t>(len)];
    if (element_cap > 0) ordered.emplace_back(len, &x);
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : *a.second < *b.second;
  });
  std::vector<BallReport> reports;
  std::size_t cumulative = 0;
  for (std::int64_t r = 0; r <= radius; ++r) {
    cumulative += per_layer[static_cast<std::size_t>(r)];
    BallReport report;
    report.radius = r;
    report.element_count = cumulative;
    report.generators = describe_generators(spec);
    for (const auto& [len, x] : ordered) {
      if (len > r || report.elements.size() >= element_cap) break;
      report.elements.push_back(*x);
    }
    std::sort(report.elements.begin(), report.elements.end());
    reports.push_back(std::move(report));
  }
  return reports;
}

namespace {

std::vector<TreeVertex> tree_neighbors(const TreeVertex& v, const std::vector<GroupElement>& values) {
  std::vector<TreeVertex> out;
  out.reserve(values.size() + 1);
  out.push_back(v.parent());
  for (const auto& h : values) out.push_back(v.child(h.value()));
  return out;
}

void require_tail_in_ball(const TreeVertex& v, std::int64_t value_radius) {
  for (const auto& [pos, value] : v.tail().entries())
    if (v.group().length(value) > value_radius)
      throw DomainError("tail value at position " + std::to_string(pos) + " lies outside the value ball");
}

}  // namespace

std::int64_t tree_bfs_dist(const TreeVertex& u, const TreeVertex& v, std::int64_t value_radius, std::size_t budget) {
  if (u.side() != v.side()) throw DomainError("vertices lie in different trees");
  if (u.group() != v.group()) throw DomainError("vertices belong to different wreath products");
  require_tail_in_ball(u, value_radius);
  require_tail_in_ball(v, value_radius);
  if (u == v) return 0;
  const auto values = ball(u.group(), value_radius);

  using Seen = std::unordered_map<TreeVertex, std::int64_t, TreeVertexHash>;
  Seen from_u{{u, 0}}, from_v{{v, 0}};
  std::vector<TreeVertex> front_u{u}, front_v{v};
  std::int64_t depth_u = 0, depth_v = 0;
  while (!front_u.empty() && !front_v.empty()) {
    const bool expand_u = front_u.size() <= front_v.size();
    auto& front = expand_u ? front_u : front_v;
    auto& mine = expand_u ? from_u : from_v;
    const auto& theirs = expand_u ? from_v : from_u;
    std::int64_t& depth = expand_u ? depth_u : depth_v;
    ++depth;
    std::vector<TreeVertex> next;
    std::int64_t best = -1;
    for (const auto& x : front) {
      for (auto& y : tree_neighbors(x, values)) {
        if (mine.contains(y)) continue;
        if (auto it = theirs.find(y); it != theirs.end()) {
          const std::int64_t total = depth + it->second;
          if (best < 0 || total < best) best = total;
        }
        if (from_u.size() + from_v.size() >= budget)
          throw BudgetExceeded("tree search exceeded its frontier budget", budget);
        mine.emplace(y, depth);
        next.push_back(std::move(y));
      }
    }
    if (best >= 0) return best;
    front = std::move(next);
  }
  throw DomainError("vertices are not connected in the truncated tree");
}

bool product_distance_within(std::int64_t d_plus, std::int64_t d_minus, const std::vector<std::int64_t>& lamp_lengths,
                             const Rational& radius, const Rational& p) {
  if (p.denominator() == 1 && p.numerator() <= 16) {
    __extension__ typedef __int128 Wide;
    const auto q = p.numerator();
    bool overflow = false;
    auto power = [q, &overflow](Wide base) {
      Wide out = 1;
      for (std::int64_t i = 0; i < q; ++i) overflow |= __builtin_mul_overflow(out, base, &out);
      return out;
    };
    const Wide den_pow = power(radius.denominator());
    Wide lhs = power(d_plus);
    overflow |= __builtin_add_overflow(lhs, power(d_minus), &lhs);
    for (auto len : lamp_lengths) overflow |= __builtin_add_overflow(lhs, power(len), &lhs);
    Wide scaled = 0;
    overflow |= __builtin_mul_overflow(lhs, den_pow, &scaled);
    const Wide rhs = power(radius.numerator());
    if (!overflow) return scaled <= rhs;
  }
  const long double exponent = static_cast<long double>(to_double(p));
  long double lhs = std::pow(static_cast<long double>(d_plus), exponent) +
                    std::pow(static_cast<long double>(d_minus), exponent);
  for (auto len : lamp_lengths) lhs += std::pow(static_cast<long double>(len), exponent);
  const long double rhs = std::pow(static_cast<long double>(to_double(radius)), exponent);
  return lhs <= rhs * (1.0L + 1e-15L);
}

namespace {

void check_properness_args(const Rational& radius, const Rational& p) {
  if (radius < Rational(0)) throw DomainError("properness radius must be non-negative");
  if (p < Rational(1)) throw DomainError("l^p exponent must be at least 1");
}

std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

}  // namespace

PropernessReport properness_check(const GroupSpec& spec, const Rational& radius, const Rational& p) {
  check_properness_args(radius, p);
  PropernessReport report;
  report.radius = radius;
  report.p = p;
  report.space = spec.is_finite() ? "T+ x T- x l^p(Z; " + spec.to_string() + ", 1)" : "T+ x T- x l^p(Z; R, 0)";
  const std::int64_t bound = floor_of(radius);
  report.shift_bound = bound;
  report.support_bound = bound;
  report.value_ball = ball(spec, bound);
  report.superset_size = static_cast<long double>(2 * bound + 1) *
                         std::pow(static_cast<long double>(report.value_ball.size()), 2 * bound + 1);

  // Depth-first walk over lamp assignments at positions -bound..bound; a
  // partial assignment whose lamp part alone already exceeds the radius has
  // no admissible completion.
  std::vector<LampConfig::Entry> chosen;
  std::vector<std::int64_t> lamp_lengths;
  std::size_t count = 0;
  auto visit = [&](auto&& self, std::int64_t position) -> void {
    if (!product_distance_within(0, 0, lamp_lengths, radius, p)) return;
    if (position > bound) {
      const LampConfig lamps = LampConfig::from_entries(spec, chosen);
      for (std::int64_t n = -bound; n <= bound; ++n) {
        const WreathElement g(lamps, n);
        if (product_distance_within(dist_from_base(g, TreeSide::Plus), dist_from_base(g, TreeSide::Minus),
                                    lamp_lengths, radius, p))
          ++count;
      }
      return;
    }
    for (const auto& h : report.value_ball) {
      if (h.is_identity()) {
        self(self, position + 1);
        continue;
      }
      chosen.emplace_back(position, h.value());
      lamp_lengths.push_back(word_length(h));
      self(self, position + 1);
      chosen.pop_back();
      lamp_lengths.pop_back();
    }
  };
  visit(visit, -bound);
  report.count = count;
  return report;
}

std::int64_t properness_scan_radius(const GroupSpec& spec, const Rational& radius, const Rational& p) {
  check_properness_args(radius, p);
  const std::int64_t bound = floor_of(radius);
  const std::int64_t per_lamp = spec.is_finite() ? std::min(bound, spec.diameter()) : bound;
  const long double exponent = static_cast<long double>(to_double(p));
  const long double budget = std::pow(static_cast<long double>(to_double(radius)), exponent);
  std::int64_t best = 0;
  for (std::int64_t a = 0; a <= bound; ++a) {
    for (std::int64_t b = 0; b <= bound; ++b) {
      const long double rest =
          budget - std::pow(static_cast<long double>(a), exponent) - std::pow(static_cast<long double>(b), exponent);
      if (rest < -1e-9L) continue;
      // Each nontrivial lamp has 1 <= |l| <= |l|^p, so the lamp cost is at
      // most the remaining p-budget; at most a + b + 1 lamps fit.
      const auto by_budget = static_cast<std::int64_t>(std::floor(rest + 1e-9L));
      const std::int64_t by_count = (a + b + 1) * per_lamp;
      best = std::max(best, a + b + std::min(by_budget, by_count));
    }
  }
  return best;
}

std::size_t properness_exhaustive_count(const GroupSpec& spec, const Rational& radius, const Rational& p,
                                        std::size_t budget) {
  const std::int64_t scan = properness_scan_radius(spec, radius, p);
  const LengthMap lengths = cayley_bfs(spec, scan, budget);
  const TreeVertex base_plus = TreeVertex::base(TreeSide::Plus, spec);
  const TreeVertex base_minus = TreeVertex::base(TreeSide::Minus, spec);
  std::size_t count = 0;
  std::vector<std::int64_t> lamp_lengths;
  for (const auto& [g, len] : lengths) {
    lamp_lengths.clear();
    for (const auto& [pos, value] : g.lamps().entries()) lamp_lengths.push_back(spec.length(value));
    if (product_distance_within(dist(base_plus, vertex_of(g, TreeSide::Plus)),
                                dist(base_minus, vertex_of(g, TreeSide::Minus)), lamp_lengths, radius, p))
      ++count;
  }
  return count;
}

}  // namespace wreath
