#include "slopegap/errors.hpp"
#include "slopegap/report.hpp"
#include "slopegap/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

using namespace slopegap;

namespace {

// Exit codes. 1 is reserved for usage errors reported by the argument parser.
int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::NonTransitive: return 3;
    case ErrorKind::UnsupportedSurface: return 4;
    case ErrorKind::OrbitTooLarge: return 5;
    case ErrorKind::EmptySurface: return 6;
    default: return 7;
  }
}
constexpr int verification_failed = 8;

struct Options {
  std::string origami;
  std::string out = "json";
  std::string out_file;
  std::size_t orbit_cap = default_orbit_cap;
  std::size_t samples = 1000;
  double tmin = 0;
  double tmax = 20;
  bool csv = false;
  bool breakpoints = false;
  bool pieces = false;
  std::int64_t bound = 0;
  std::size_t bins = 100;
  double hist_tmax = 10;
  std::uint64_t seed = 1;
  std::size_t points = 200;
  bool all = false;
  bool dot = false;
  bool json = false;
};

std::ostream& sink(const Options& o, std::ofstream& file) {
  if (o.out_file.empty()) return std::cout;
  file.open(o.out_file);
  if (!file) throw std::runtime_error("cannot open " + o.out_file);
  return file;
}

bool want_csv(const Options& o) { return o.csv || o.out == "csv"; }

int cmd_analyze(const Options& opt) {
  auto report = analyze(Origami::parse(opt.origami), opt.orbit_cap);
  std::ofstream f;
  sink(opt, f) << to_json(report).dump(2) << '\n';
  return 0;
}

int cmd_pdf(const Options& opt) {
  auto report = analyze(Origami::parse(opt.origami), opt.orbit_cap);
  const auto& p = *report.pdf;
  std::ofstream f;
  std::ostream& os = sink(opt, f);
  if (opt.breakpoints) {
    Json j = Json::array();
    for (const auto& b : p.breakpoints()) j.push_back(to_json(b));
    os << j.dump() << '\n';
    return 0;
  }
  if (opt.pieces) {
    Json j = Json::array();
    for (const auto& piece : p.pieces()) j.push_back(to_json(piece, p.regions()));
    os << j.dump(2) << '\n';
    return 0;
  }
  const std::size_t n = std::max<std::size_t>(opt.samples, 1);
  const long double lo = opt.tmin, hi = opt.tmax;
  // With tmin = 0 the grid is tmax * i / n for i = 1..n, otherwise tmin..tmax inclusive.
  auto t_at = [&](std::size_t i) -> long double {
    if (lo <= 0 || n == 1) return hi * static_cast<long double>(i + 1) / static_cast<long double>(n);
    return lo + (hi - lo) * static_cast<long double>(i) / static_cast<long double>(n - 1);
  };
  if (want_csv(opt)) {
    os << "t,pdf,cdf\n";
    for (std::size_t i = 0; i < n; ++i) {
      long double t = t_at(i);
      os << format_decimal(t) << ',' << format_decimal(p.pdf(t)) << ',' << format_decimal(p.cdf(t)) << '\n';
    }
  } else {
    Json rows = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      long double t = t_at(i);
      rows.push_back({{"t", decimal(t)}, {"pdf", decimal(p.pdf(t))}, {"cdf", decimal(p.cdf(t))}});
    }
    os << rows.dump(2) << '\n';
  }
  return 0;
}

int cmd_histogram(const Options& opt) {
  const Origami o = canonical_form(Origami::parse(opt.origami));
  const bool ten = isomorphic(o, Origami::parse(fixtures::ten_tile));
  const std::int64_t R = opt.bound > 0 ? opt.bound : (ten ? 2000 : 300);
  const GapSample s = ten ? congruence_gaps_10tile(R) : empirical_gaps(o, R);
  const std::size_t bins = std::max<std::size_t>(opt.bins, 1);
  const double width = opt.hist_tmax / static_cast<double>(bins);
  std::vector<std::size_t> counts(bins, 0);
  for (double g : s.gaps) {
    if (g >= opt.hist_tmax) continue;
    counts[std::min(bins - 1, static_cast<std::size_t>(g / width))]++;
  }
  const double total = static_cast<double>(s.gaps.size());
  std::ofstream f;
  std::ostream& os = sink(opt, f);
  if (want_csv(opt)) {
    os << "bin_lo,bin_hi,density\n";
    for (std::size_t i = 0; i < bins; ++i)
      os << format_decimal(width * i) << ',' << format_decimal(width * (i + 1)) << ','
         << format_decimal(counts[i] / (total * width)) << '\n';
  } else {
    Json j;
    j["R"] = R;
    j["slope_count"] = s.slope_count;
    Json rows = Json::array();
    for (std::size_t i = 0; i < bins; ++i)
      rows.push_back({{"bin_lo", decimal(width * i)},
                      {"bin_hi", decimal(width * (i + 1))},
                      {"density", decimal(counts[i] / (total * width))}});
    j["bins"] = rows;
    os << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  VerifyOptions v;
  v.seed = opt.seed;
  v.bound = opt.bound;
  v.points_per_component = opt.points;
  v.orbit_cap = opt.orbit_cap;
  auto results = run_all_checks(Origami::parse(opt.origami), v);
  Json j = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    j.push_back(to_json(r));
    ok = ok && r.pass;
  }
  std::ofstream f;
  sink(opt, f) << j.dump(2) << '\n';
  return ok ? 0 : verification_failed;
}

int cmd_orbit(const Options& opt) {
  const OrbitGraph g = orbit_graph(canonical_form(Origami::parse(opt.origami)), opt.orbit_cap);
  std::ofstream f;
  std::ostream& os = sink(opt, f);
  if (opt.json)
    os << orbit_json(g).dump(2) << '\n';
  else
    os << orbit_dot(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slope gap distributions of square-tiled surfaces"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("-o,--origami", opt.origami, "Surface as \"(cycles of r)|(cycles of u)\"")->required();
  app.add_option("--orbit-cap", opt.orbit_cap, "Maximum SL(2,Z) orbit size")->capture_default_str();
  app.add_option("--out", opt.out, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--file", opt.out_file, "Write to a file instead of stdout");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report: orbit, cusps, transversal, breakpoints");

  auto* pdf_cmd = app.add_subcommand("pdf", "Sample the gap density and distribution function");
  pdf_cmd->add_option("--samples", opt.samples)->capture_default_str();
  pdf_cmd->add_option("--tmin", opt.tmin, "First sample; 0 starts one step above zero")->capture_default_str();
  pdf_cmd->add_option("--tmax", opt.tmax)->capture_default_str();
  pdf_cmd->add_flag("--csv", opt.csv);
  pdf_cmd->add_flag("--breakpoints", opt.breakpoints, "Print the exact breakpoints only");
  pdf_cmd->add_flag("--pieces", opt.pieces, "Print the frozen piece expressions");

  auto* hist_cmd = app.add_subcommand("histogram", "Empirical renormalized slope gaps");
  hist_cmd->add_option("--bound", opt.bound, "Enumeration bound R");
  hist_cmd->add_option("--bins", opt.bins)->capture_default_str();
  hist_cmd->add_option("--tmax", opt.hist_tmax)->capture_default_str();
  hist_cmd->add_flag("--csv", opt.csv);

  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle suites");
  verify_cmd->add_flag("--all", opt.all, "Run every suite (the default)");
  verify_cmd->add_option("--seed", opt.seed)->capture_default_str();
  verify_cmd->add_option("--points", opt.points, "Random points per component")->capture_default_str();
  verify_cmd->add_option("--bound", opt.bound, "Enumeration bound for the KS check");

  auto* orbit_cmd = app.add_subcommand("orbit", "SL(2,Z) orbit graph");
  orbit_cmd->add_flag("--dot", opt.dot, "Graphviz output (the default)");
  orbit_cmd->add_flag("--json", opt.json, "JSON with cusp data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(opt);
    if (*pdf_cmd) return cmd_pdf(opt);
    if (*hist_cmd) return cmd_histogram(opt);
    if (*verify_cmd) return cmd_verify(opt);
    if (*orbit_cmd) return cmd_orbit(opt);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 7;
  }
  return 1;
}
