#pragma once

#include "slopegap/gap_distribution.hpp"
#include "slopegap/transversal.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace slopegap {

// Winner at a section point by exhaustive search: the holonomy vector with 0 < a x + b y <= 1
// and minimal return time y / (a (a x + b y)), shortest among collinear ties.
class BruteWinner {
 public:
  // Default bound B = 20 * alpha_eff * max(x0, y0), on scaled components.
  explicit BruteWinner(const SectionComponent& comp, std::optional<Rational> bound = std::nullopt);

  Vec2 operator()(const Point& p) const;
  Rational bound() const { return bound_; }
  std::size_t candidate_count() const { return candidates_.size(); }

 private:
  const SectionComponent* comp_;
  Rational bound_;
  std::vector<LatticeVector> candidates_;  // unscaled
};

Vec2 brute_winner(const SectionComponent& comp, const Point& p, std::optional<Rational> bound = std::nullopt);

// Points strictly inside some region of `regions` (all from one component), with
// denominators at most 10^4.
std::vector<Point> random_interior_points(const SectionComponent& comp, const std::vector<WinnerRegion>& regions,
                                          std::size_t count, std::uint64_t seed);
const WinnerRegion* locate(const std::vector<WinnerRegion>& regions, const Point& p);

struct GapSample {
  std::int64_t R = 0;
  std::vector<double> gaps;  // sorted
  std::size_t slope_count = 0;
};

struct Slope {
  std::int64_t num, den;
};

// Distinct slopes in [0, 1] of holonomy vectors with max component <= R, plus 0 and 1.
std::vector<Slope> holonomy_slopes(const Origami& o, std::int64_t R);
std::vector<Slope> congruence_slopes_10tile(std::int64_t R);
GapSample gaps_from_slopes(std::vector<Slope> slopes, std::int64_t R);
GapSample empirical_gaps(const Origami& o, std::int64_t R);
GapSample congruence_gaps_10tile(std::int64_t R);

using RealFunction = std::function<long double(long double)>;

double ks_distance(const GapSample& sample, const RealFunction& cdf);
double ks_distance(const GapSample& sample, const PiecewisePdf& p);

// Inverse-cdf sampling by bisection.
GapSample sample_from_cdf(const RealFunction& cdf, std::size_t n, std::uint64_t seed);

struct HallValue {
  long double pdf, cdf;
};
HallValue hall_reference(long double t);

struct OneSidedDerivative {
  long double value = 0;
  bool divergent = false;
};

// Quotients over halving steps; divergence when three successive halvings each grow the
// quotient by more than 1.4x, otherwise Richardson extrapolation.
OneSidedDerivative one_sided_derivative(const RealFunction& f, long double t, int side, long double h0);

struct BreakpointClass {
  Rational tau;
  OneSidedDerivative left, right;
  bool smooth = true;
};

struct HallSignature {
  std::vector<Rational> nonsmooth_set;
  bool closure_ok = true;
  std::optional<Rational> witness;  // a point whose /4 and *4 partners are both smooth
  std::vector<BreakpointClass> classes;
};

HallSignature hall_signature(const RealFunction& pdf, const std::vector<Rational>& candidates);
HallSignature hall_signature(const PiecewisePdf& p);

// Independent oracle: swept area by adaptive quadrature of vertical slices of the polygon.
long double swept_area_quadrature(const WinnerRegion& r, long double t);

struct CheckResult {
  std::string check;
  bool pass = false;
  double metric = 0;
  std::optional<double> threshold;
  std::string detail;
};

struct VerifyOptions {
  std::size_t points_per_component = 200;
  std::int64_t bound = 0;  // 0 picks a default per surface
  std::uint64_t seed = 1;
  std::size_t orbit_cap = default_orbit_cap;
};

std::vector<CheckResult> run_all_checks(const Origami& o, const VerifyOptions& opts);

}  // namespace slopegap
