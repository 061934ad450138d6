#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wreath/compression.hpp"
#include "wreath/embedding.hpp"
#include "wreath/error.hpp"
#include "wreath/literal.hpp"
#include "wreath/oracles.hpp"
#include "wreath/verify.hpp"

namespace wreath::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string group = "Z/2";
  std::string element;
  std::string to;
  std::string side = "plus";
  bool path = false;
  std::string tree_mode = "cocycle";
  std::string h_mode;
  std::string arith = "auto";
  bool quick = false;
  std::uint64_t seed = VerifyScale{}.seed;
  std::int64_t radius = 0;
  std::string rational_radius = "0";
  std::string p = "1";
  bool cross_check = false;
  std::int64_t scale = 1000;
  std::size_t count = 1000;
  std::size_t buckets = 0;
  std::string samples_csv;
  std::string envelope_csv;
  unsigned threads = 0;
};

TreeMode parse_tree_mode(const std::string& text) {
  if (text == "cocycle") return TreeMode::cocycle();
  if (text.rfind("guka:", 0) == 0) return TreeMode::guka(parse_rational(std::string_view(text).substr(5)));
  throw ParseError("expected 'cocycle' or 'guka:EPS'", text, 0);
}

HMode parse_h_mode(const std::string& text, const GroupSpec& spec) {
  if (text.empty()) return spec.is_finite() ? HMode::DiracSimplex : HMode::IdentityLine;
  if (text == "identity") return HMode::IdentityLine;
  if (text == "dirac") return HMode::DiracSimplex;
  throw ParseError("expected 'identity' or 'dirac'", text, 0);
}

TreeSide parse_side(const std::string& text) {
  if (text == "plus" || text == "+") return TreeSide::Plus;
  if (text == "minus" || text == "-") return TreeSide::Minus;
  throw ParseError("expected 'plus' or 'minus'", text, 0);
}

std::string fixed12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  return buf;
}

int cmd_length(const Options& o, std::ostream& out) {
  const GroupSpec spec = parse_group(o.group);
  const WreathElement x = parse_element(spec, o.element);
  if (o.format == "csv") out << "element,length\n" << '"' << format_element(x) << "\"," << word_length(x) << '\n';
  else out << word_length(x) << '\n';
  return kOk;
}

int cmd_tree_dist(const Options& o, std::ostream& out) {
  const GroupSpec spec = parse_group(o.group);
  const TreeSide side = parse_side(o.side);
  const WreathElement x = parse_element(spec, o.element);
  const TreeVertex from = o.to.empty() ? TreeVertex::base(side, spec) : vertex_of(x, side);
  const TreeVertex to = o.to.empty() ? vertex_of(x, side) : vertex_of(parse_element(spec, o.to), side);
  out << dist(from, to) << '\n';
  if (o.path)
    for (const auto& v : geodesic(from, to)) out << format_vertex(v) << '\n';
  return kOk;
}

template <typename S>
void print_vector(const SparseVector<S>& v, std::ostream& out) {
  out << dump(v);
  const S n2 = norm_squared(v);
  out << "norm2=" << format_scalar(n2) << '\n';
  out << "norm=" << fixed12(std::sqrt(to_double(n2))) << '\n';
}

int cmd_embed(const Options& o, std::ostream& out) {
  const GroupSpec spec = parse_group(o.group);
  const WreathElement x = parse_element(spec, o.element);
  const TreeMode tree = parse_tree_mode(o.tree_mode);
  const HMode h = parse_h_mode(o.h_mode, spec);
  const bool exact_possible = tree.kind() == TreeMode::Kind::Cocycle && h == HMode::IdentityLine;
  bool exact = exact_possible;
  if (o.arith == "exact") {
    if (!exact_possible) throw DomainError("exact arithmetic needs --tree-mode cocycle and --h-mode identity");
  } else if (o.arith == "float") {
    exact = false;
  } else if (o.arith != "auto") {
    throw ParseError("expected 'auto', 'exact' or 'float'", o.arith, 0);
  }
  if (exact) print_vector(sigma<Rational>(x, tree, h), out);
  else print_vector(sigma<double>(x, tree, h), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyScale scale = o.quick ? VerifyScale::quick() : VerifyScale::full();
  scale.seed = o.seed;
  scale.budget = element_budget_from_env();
  std::size_t passed = 0, failed = 0;
  for (const auto& r : run_suite(scale)) {
    (r.passed() ? passed : failed)++;
    out << (r.passed() ? "PASS" : "FAIL") << "  " << r.title << "  cases=" << r.cases << " failures=" << r.failures;
    if (!r.detail.empty()) out << "  [" << r.detail << "]";
    out << '\n';
  }
  out << "passed=" << passed << " failed=" << failed << '\n';
  return failed == 0 ? kOk : kFailure;
}

int cmd_ball(const Options& o, std::ostream& out) {
  const GroupSpec spec = parse_group(o.group);
  if (o.radius < 0) throw DomainError("radius must be non-negative");
  const auto reports = ball_reports(spec, o.radius, 0, element_budget_from_env());
  if (o.format == "csv") out << "radius,count\n";
  for (const auto& r : reports) {
    if (o.format == "csv") out << r.radius << ',' << r.element_count << '\n';
    else out << "radius=" << r.radius << " count=" << r.element_count << " generators=" << r.generators << '\n';
  }
  return kOk;
}

int cmd_properness(const Options& o, std::ostream& out) {
  const GroupSpec spec = parse_group(o.group);
  const Rational radius = parse_rational(o.rational_radius);
  const Rational p = parse_rational(o.p);
  const PropernessReport report = properness_check(spec, radius, p);
  std::string values;
  for (const auto& h : report.value_ball) values += (values.empty() ? "" : ",") + std::to_string(h.value());
  char superset[64];
  std::snprintf(superset, sizeof superset, "%.0Lf", report.superset_size);
  out << "group=" << spec.to_string() << '\n'
      << "space=" << report.space << '\n'
      << "R=" << format_scalar(report.radius) << '\n'
      << "p=" << format_scalar(report.p) << '\n'
      << "count=" << report.count << '\n'
      << "shift_bound=" << report.shift_bound << '\n'
      << "support_bound=" << report.support_bound << '\n'
      << "value_ball={" << values << "}\n"
      << "superset_size=" << superset << '\n';
  if (o.cross_check) {
    const std::size_t scanned = properness_exhaustive_count(spec, radius, p, element_budget_from_env());
    out << "scan_radius=" << properness_scan_radius(spec, radius, p) << '\n'
        << "exhaustive_count=" << scanned << '\n'
        << "agree=" << (scanned == report.count ? "true" : "false") << '\n';
    if (scanned != report.count) return kFailure;
  }
  return kOk;
}

int cmd_compress(const Options& o, std::ostream& out) {
  SampleConfig config;
  config.spec = parse_group(o.group);
  config.tree_mode = parse_tree_mode(o.tree_mode);
  config.h_mode = parse_h_mode(o.h_mode, config.spec);
  config.scale = o.scale;
  config.count = o.count;
  config.seed = o.seed;
  config.threads = o.threads;
  const auto samples = sample_pairs(config);
  const Bucketing bucketing = o.buckets == 0 ? Bucketing::exact() : Bucketing::log(o.buckets);

  auto write_samples = [&](std::ostream& s) {
    s << "wordLength,embeddedDist\n";
    for (const auto& d : samples) s << d.word_length << ',' << fixed12(d.embedded_dist) << '\n';
  };
  if (!o.samples_csv.empty()) {
    std::ofstream file(o.samples_csv);
    if (!file) throw Error("cannot write " + o.samples_csv);
    write_samples(file);
  }
  if (!o.envelope_csv.empty()) {
    std::ofstream file(o.envelope_csv);
    if (!file) throw Error("cannot write " + o.envelope_csv);
    file << "bucket,minDist\n";
    for (const auto& p : lower_envelope(samples, bucketing)) file << p.bucket << ',' << fixed12(p.min_dist) << '\n';
  }
  if (o.format == "csv") {
    write_samples(out);
    return kOk;
  }

  const AuditResult audit = audit_samples(samples, config.spec, config.tree_mode, config.h_mode);
  out << "group=" << config.spec.to_string() << '\n'
      << "tree_mode=" << config.tree_mode.to_string() << '\n'
      << "h_mode=" << to_string(config.h_mode) << '\n'
      << "seed=" << config.seed << '\n'
      << "scale=" << config.scale << '\n'
      << "count=" << config.count << '\n';
  try {
    const EnvelopeFit fit = fit_envelope(samples, bucketing);
    out << "alpha_hat=" << fixed12(fit.exponent) << '\n'
        << "intercept=" << fixed12(fit.intercept) << '\n'
        << "buckets=" << fit.bucket_count << '\n'
        << "length_range=" << fit.min_length << ".." << fit.max_length << '\n'
        << "method=" << fit.method << '\n';
  } catch (const DomainError& e) {
    out << "alpha_hat=undefined\n"
        << "fit_error=" << e.what() << '\n';
  }
  out << "lipschitz_constant=" << fixed12(audit.lipschitz_constant) << '\n'
      << "max_ratio=" << fixed12(audit.max_ratio) << '\n'
      << "lipschitz_violations=" << audit.lipschitz_violations << '\n'
      << "separation=" << fixed12(audit.separation) << '\n'
      << "separation_violations=" << audit.separation_violations << '\n';
  return audit.lipschitz_violations + audit.separation_violations + audit.zero_mismatches == 0 ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in wreath products H wr Z", "wreath"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv"}));

  auto* length = app.add_subcommand("length", "Word length of an element");
  auto* tree_dist = app.add_subcommand("tree-dist", "Distance in a Bass-Serre tree");
  auto* embed = app.add_subcommand("embed", "Dump the Hilbert-space embedding of an element");
  auto* verify = app.add_subcommand("verify", "Run every invariant suite");
  auto* ball_cmd = app.add_subcommand("ball", "Cayley ball sizes as radius,count");
  auto* properness = app.add_subcommand("properness", "Count {g : d(z, gz) <= R} for the product action");
  auto* compress = app.add_subcommand("compress", "Sample distortion of sigma and fit its envelope exponent");

  for (auto* sub : {length, tree_dist, embed, ball_cmd, properness, compress})
    sub->add_option("--group", o.group, "Base group: Z or Z/k")->capture_default_str();
  for (auto* sub : {length, tree_dist, embed})
    sub->add_option("element", o.element, "Element literal, e.g. (1@-1,1@1;0)")->required();
  tree_dist->add_option("--side", o.side, "plus or minus")->capture_default_str();
  tree_dist->add_option("--to", o.to, "Second element; default is the base vertex");
  tree_dist->add_flag("--path", o.path, "Also print the geodesic");
  for (auto* sub : {embed, compress}) {
    sub->add_option("--tree-mode", o.tree_mode, "cocycle or guka:EPS")->capture_default_str();
    sub->add_option("--h-mode", o.h_mode, "identity (H = Z) or dirac (H = Z/k)");
  }
  embed->add_option("--arith", o.arith, "auto, exact or float")->capture_default_str();
  verify->add_flag("--quick", o.quick, "Smaller suites");
  for (auto* sub : {verify, compress}) sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  ball_cmd->add_option("--radius", o.radius, "Largest radius")->required();
  properness->add_option("--radius", o.rational_radius, "Radius R (integer, p/q or decimal)")->required();
  properness->add_option("--p", o.p, "Exponent p >= 1")->capture_default_str();
  properness->add_flag("--cross-check", o.cross_check, "Also count by scanning a Cayley ball");
  compress->add_option("--scale", o.scale, "Random word lengths are drawn from [0, scale]")->capture_default_str();
  compress->add_option("--count", o.count, "Number of samples")->capture_default_str();
  compress->add_option("--buckets", o.buckets, "Log-spaced envelope buckets; 0 = one per length")
      ->capture_default_str();
  compress->add_option("--samples", o.samples_csv, "Write wordLength,embeddedDist CSV here");
  compress->add_option("--envelope", o.envelope_csv, "Write bucket,minDist CSV here");
  compress->add_option("--threads", o.threads, "Worker threads; 0 = all cores");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*length) return cmd_length(o, out);
    if (*tree_dist) return cmd_tree_dist(o, out);
    if (*embed) return cmd_embed(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*ball_cmd) return cmd_ball(o, out);
    if (*properness) return cmd_properness(o, out);
    if (*compress) return cmd_compress(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.annotated() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "; raise WREATH_ELEMENT_BUDGET to allow more\n";
    return kBudgetExceeded;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsageError;
}

}  // namespace wreath::cli
