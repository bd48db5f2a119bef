#include "slopegap/verify.hpp"

#include "slopegap/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

namespace slopegap {

using ld = long double;

BruteWinner::BruteWinner(const SectionComponent& comp, std::optional<Rational> bound) : comp_(&comp) {
  bound_ = bound ? *bound : Rational(20) * comp.alpha_eff * std::max(comp.x0, comp.y0);
  const std::int64_t d = comp.d;
  const std::int64_t x_max = floor(bound_ * Rational(d));
  const std::int64_t y_max = floor(bound_ / Rational(d));
  HolonomyTester hol(comp.cusp.cusp_relative);
  for (std::int64_t y = 1; y <= y_max; ++y)
    for (std::int64_t x = -x_max; x <= x_max; ++x)
      if (hol(x, y)) candidates_.push_back({x, y});
}

Vec2 BruteWinner::operator()(const Point& p) const {
  // s = a X / d + b Y d = S / (da db d); return time is proportional to Y / S.
  const __int128 na = p.x.numerator(), da = p.x.denominator();
  const __int128 nb = p.y.numerator(), db = p.y.denominator();
  const __int128 d = comp_->d;
  const __int128 s_max = da * db * d;
  const LatticeVector* best = nullptr;
  __int128 best_s = 0;
  for (const auto& v : candidates_) {
    __int128 s = na * db * v.x + nb * da * v.y * d * d;
    if (s <= 0 || s > s_max) continue;
    if (best) {
      __int128 lhs = static_cast<__int128>(v.y) * best_s, rhs = static_cast<__int128>(best->y) * s;
      if (lhs > rhs || (lhs == rhs && v.y >= best->y)) continue;
    }
    best = &v;
    best_s = s;
  }
  if (!best) throw Error(ErrorKind::NoCandidate, "no holonomy vector within bound " + to_string(bound_));
  return comp_->scale(best->x, best->y);
}

Vec2 brute_winner(const SectionComponent& comp, const Point& p, std::optional<Rational> bound) {
  return BruteWinner(comp, bound)(p);
}

const WinnerRegion* locate(const std::vector<WinnerRegion>& regions, const Point& p) {
  for (const auto& r : regions)
    if (contains(r.polygon, p, true)) return &r;
  return nullptr;
}

std::vector<Point> random_interior_points(const SectionComponent& comp, const std::vector<WinnerRegion>& regions,
                                          std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> den(1000, 10000);
  std::vector<Point> out;
  while (out.size() < count) {
    std::int64_t da = den(rng), db = den(rng);
    Rational a(std::uniform_int_distribution<std::int64_t>(1, da - 1)(rng), da);
    Rational top = (Rational(1) - comp.x0 * a) / comp.y0;
    Rational bottom = top - comp.alpha_eff * a;
    std::int64_t lo = floor(bottom * Rational(db)) + 1, hi = ceil(top * Rational(db)) - 1;
    if (lo > hi) continue;
    Point p{a, Rational(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng), db)};
    if (locate(regions, p)) out.push_back(p);
  }
  return out;
}

namespace {

bool slope_less(const Slope& a, const Slope& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::vector<Slope> finish_slopes(std::vector<Slope> s) {
  s.push_back({0, 1});
  s.push_back({1, 1});
  std::sort(s.begin(), s.end(), slope_less);
  s.erase(std::unique(s.begin(), s.end(), [](const Slope& a, const Slope& b) { return !slope_less(a, b); }),
          s.end());
  return s;
}

}  // namespace

std::vector<Slope> holonomy_slopes(const Origami& o, std::int64_t R) {
  std::vector<Slope> s;
  for (const auto& v : enumerate_holonomy(o, R)) {
    std::int64_t g = std::gcd(v.x, v.y);
    s.push_back({v.y / g, v.x / g});
  }
  return finish_slopes(std::move(s));
}

std::vector<Slope> congruence_slopes_10tile(std::int64_t R) {
  // A reduced slope p/q is realized iff some multiple m q <= R is 0, 2 or 3 mod 5.
  std::vector<Slope> s;
  for (std::int64_t q = 1; q <= R; ++q) {
    bool ok = false;
    for (std::int64_t n = q; n <= R && !ok; n += q) ok = n % 5 == 0 || n % 5 == 2 || n % 5 == 3;
    if (!ok) continue;
    for (std::int64_t p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1) s.push_back({p, q});
  }
  return finish_slopes(std::move(s));
}

GapSample gaps_from_slopes(std::vector<Slope> slopes, std::int64_t R) {
  slopes = finish_slopes(std::move(slopes));
  GapSample g;
  g.R = R;
  g.slope_count = slopes.size();
  const double r2 = static_cast<double>(R) * static_cast<double>(R);
  for (std::size_t i = 0; i + 1 < slopes.size(); ++i) {
    const auto& a = slopes[i];
    const auto& b = slopes[i + 1];
    double num = static_cast<double>(b.num * a.den - a.num * b.den);
    g.gaps.push_back(r2 * num / (static_cast<double>(a.den) * static_cast<double>(b.den)));
  }
  std::sort(g.gaps.begin(), g.gaps.end());
  return g;
}

GapSample empirical_gaps(const Origami& o, std::int64_t R) { return gaps_from_slopes(holonomy_slopes(o, R), R); }

GapSample congruence_gaps_10tile(std::int64_t R) { return gaps_from_slopes(congruence_slopes_10tile(R), R); }

double ks_distance(const GapSample& sample, const RealFunction& cdf) {
  const auto& g = sample.gaps;
  const double n = static_cast<double>(g.size());
  double d = 0;
  for (std::size_t i = 0; i < g.size();) {
    std::size_t j = i;
    while (j < g.size() && g[j] == g[i]) ++j;
    double f = static_cast<double>(cdf(g[i]));
    d = std::max({d, std::abs(f - static_cast<double>(i) / n), std::abs(f - static_cast<double>(j) / n)});
    i = j;
  }
  return d;
}

double ks_distance(const GapSample& sample, const PiecewisePdf& p) {
  return ks_distance(sample, [&p](ld t) { return p.cdf(t); });
}

GapSample sample_from_cdf(const RealFunction& cdf, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  GapSample g;
  g.slope_count = n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    ld u = unif(rng);
    ld lo = 0, hi = 1;
    while (cdf(hi) < u) hi *= 2;
    for (int k = 0; k < 50; ++k) {
      ld mid = (lo + hi) / 2;
      (cdf(mid) < u ? lo : hi) = mid;
    }
    g.gaps.push_back(static_cast<double>((lo + hi) / 2));
  }
  std::sort(g.gaps.begin(), g.gaps.end());
  return g;
}

HallValue hall_reference(ld t) {
  if (!(t > 1)) return {0, 0};
  if (std::isinf(t)) return {0, 1};
  ld l = std::log(t);
  ld pdf = 2 * l / (t * t);
  ld cdf = 2 * (1 - (1 + l) / t);
  if (t > 4) {
    ld r = std::sqrt(1 - 4 / t);
    ld at = std::atanh(r);
    pdf -= 4 / (t * t) * at;
    cdf += 2 * (-r / 2 + 2 / t * at);
  }
  return {pdf, cdf};
}

OneSidedDerivative one_sided_derivative(const RealFunction& f, ld t, int side, ld h0) {
  const ld f0 = f(t);
  auto quotient = [&](ld h) { return side > 0 ? (f(t + h) - f0) / h : (f0 - f(t - h)) / h; };

  const ld h_min = 1e-10L * std::max<ld>(1, t);
  int growth = 0;
  ld prev = quotient(h0);
  for (ld h = h0 / 2; h >= h_min; h /= 2) {
    ld q = quotient(h);
    if (prev != 0 && std::abs(q) > 1.4L * std::abs(prev)) {
      if (++growth == 3) return {std::copysign(std::numeric_limits<ld>::infinity(), q), true};
    } else {
      growth = 0;
    }
    prev = q;
  }
  ld d0 = quotient(h0), d1 = quotient(h0 / 2), d2 = quotient(h0 / 4);
  ld r0 = 2 * d1 - d0, r1 = 2 * d2 - d1;
  return {(4 * r1 - r0) / 3, false};
}

HallSignature hall_signature(const RealFunction& pdf, const std::vector<Rational>& candidates) {
  std::vector<Rational> cs = candidates;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

  HallSignature sig;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    ld t = to_ld(cs[i]);
    ld gap = t;
    if (i > 0) gap = std::min(gap, t - to_ld(cs[i - 1]));
    if (i + 1 < cs.size()) gap = std::min(gap, to_ld(cs[i + 1]) - t);
    ld h0 = std::min(1e-3L * t, gap / 8);

    BreakpointClass c;
    c.tau = cs[i];
    c.left = one_sided_derivative(pdf, t, -1, h0);
    c.right = one_sided_derivative(pdf, t, +1, h0);
    if (c.left.divergent || c.right.divergent) {
      c.smooth = false;
    } else {
      ld scale = std::max({ld(1), std::abs(c.left.value), std::abs(c.right.value)});
      c.smooth = std::abs(c.left.value - c.right.value) <= 1e-6L * scale;
    }
    if (!c.smooth) sig.nonsmooth_set.push_back(c.tau);
    sig.classes.push_back(c);
  }

  std::set<Rational> set(sig.nonsmooth_set.begin(), sig.nonsmooth_set.end());
  for (const auto& tau : sig.nonsmooth_set) {
    if (!set.count(tau / Rational(4)) && !set.count(tau * Rational(4))) {
      sig.closure_ok = false;
      sig.witness = tau;
      break;
    }
  }
  return sig;
}

HallSignature hall_signature(const PiecewisePdf& p) {
  return hall_signature([&p](ld t) { return p.pdf(t); }, p.breakpoints());
}

ld swept_area_quadrature(const WinnerRegion& r, ld t) {
  const auto& poly = r.polygon;
  const ld k = to_ld(r.winner.x) / to_ld(r.winner.y);
  auto slice = [&](ld a) -> ld {
    ld lo = std::numeric_limits<ld>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& p = poly[i];
      const auto& q = poly[(i + 1) % poly.size()];
      ld ax = to_ld(p.x), bx = to_ld(q.x), ay = to_ld(p.y), by = to_ld(q.y);
      if (ax == bx) continue;
      if (a < std::min(ax, bx) || a > std::max(ax, bx)) continue;
      ld b = ay + (by - ay) * (a - ax) / (bx - ax);
      lo = std::min(lo, b);
      hi = std::max(hi, b);
    }
    if (!(hi > lo)) return 0;
    ld level = 1 / (a * t) - k * a;
    return std::max<ld>(0, hi - std::max(lo, level));
  };
  std::vector<ld> xs;
  for (const auto& p : poly) xs.push_back(to_ld(p.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  ld total = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    total += boost::math::quadrature::gauss_kronrod<ld, 61>::integrate(slice, xs[i], xs[i + 1], 20, 1e-15L);
  return total;
}

namespace {

CheckResult make(std::string name, double metric, std::optional<double> threshold, bool pass,
                 std::string detail = {}) {
  return {std::move(name), pass, metric, threshold, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> run_all_checks(const Origami& o, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const Origami base = canonical_form(o);
  const OrbitGraph g = orbit_graph(base, opts.orbit_cap);

  Word st6;
  for (int i = 0; i < 6; ++i) st6.insert(st6.end(), {Letter::S, Letter::T});
  int relation_failures = 0;
  for (const auto& v : g.vertices) {
    if (!isomorphic(act_word(v, power(Letter::S, 4)), v)) ++relation_failures;
    if (!isomorphic(act_word(v, st6), v)) ++relation_failures;
  }
  out.push_back(make("action_relations", relation_failures, 0, relation_failures == 0));

  const VertexClasses vc = vertex_classes(base);
  int turns = 0, excess = 0;
  for (const auto& c : vc.classes) {
    turns += c.angle_turns;
    excess += c.angle_turns - 1;
  }
  bool euler = excess == 2 * genus(base) - 2 && turns == base.size();
  out.push_back(make("cone_angles", std::abs(turns - base.size()), 0, euler));

  const auto cusps = cusp_data(g);
  int width_sum = 0;
  for (const auto& c : cusps) width_sum += c.width;
  out.push_back(make("cusp_width_sum", std::abs(width_sum - g.index()), 0, width_sum == g.index()));

  int parabolic_failures = 0;
  for (const Mat2& m : parabolic_generators(cusps))
    if (!isomorphic(act_word(base, decompose(m)), base)) ++parabolic_failures;
  out.push_back(make("parabolics_fix_base", parabolic_failures, 0, parabolic_failures == 0));

  const bool minus_identity = contains_minus_identity(base);
  out.push_back(make("contains_minus_identity", minus_identity ? 0 : 1, 0, minus_identity));
  if (!minus_identity) return out;

  const Transversal tr = build_transversal(cusps);
  Rational region_sum = 0;
  for (const auto& r : tr.regions) region_sum += signed_area(r.polygon);
  Rational triangle_sum = 0;
  for (const auto& c : tr.components) triangle_sum += signed_area(c.triangle);
  out.push_back(make("region_tiling", std::abs(to_double(region_sum - triangle_sum)), 0,
                     region_sum == triangle_sum, "total area " + to_string(tr.total_area)));

  std::size_t mismatches = 0, tested = 0;
  for (std::size_t i = 0; i < tr.components.size(); ++i) {
    std::vector<WinnerRegion> mine;
    for (const auto& r : tr.regions)
      if (r.component == static_cast<int>(i)) mine.push_back(r);
    BruteWinner brute(tr.components[i]);
    for (const auto& p : random_interior_points(tr.components[i], mine, opts.points_per_component, opts.seed + i)) {
      ++tested;
      if (!(brute(p) == locate(mine, p)->winner)) ++mismatches;
    }
  }
  out.push_back(make("brute_winner_agreement", static_cast<double>(mismatches), 0, mismatches == 0,
                     std::to_string(tested) + " points"));

  const PiecewisePdf pdf = total_pdf(tr);
  const ld expected = g.index() * std::numbers::pi_v<ld> * std::numbers::pi_v<ld> / 6;
  const CovolumeResult cov = covolume(tr.regions);
  double cov_err = static_cast<double>(std::abs(cov.value - expected) / expected);
  out.push_back(make("covolume", cov_err, 1e-8, cov_err <= 1e-8));

  const CovolumeResult mass = integrate_pdf(pdf);
  double mass_err = static_cast<double>(std::abs(mass.value - 1));
  out.push_back(make("pdf_normalization", mass_err, 1e-8, mass_err <= 1e-8));

  double min_pdf = 0;
  for (int i = 0; i <= 1000; ++i) {
    ld t = std::pow(10.0L, -1 + 3 * i / 1000.0L);
    min_pdf = std::min(min_pdf, static_cast<double>(pdf.pdf(t)));
  }
  out.push_back(make("pdf_nonnegative", -min_pdf, 0, min_pdf >= 0));

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> log_t(0.0, std::log(50.0));
  double fd_err = 0;
  const auto& bps = pdf.breakpoints();
  for (int n = 0; n < 20;) {
    ld t = std::exp(static_cast<ld>(log_t(rng)));
    ld delta = 1e-3L * t;
    bool near = std::any_of(bps.begin(), bps.end(), [&](const Rational& b) { return std::abs(to_ld(b) - t) < 4 * delta; });
    if (near) continue;
    ++n;
    ld expected_pdf = 0;
    for (const auto& r : tr.regions) {
      ld fd = (-swept_area_quadrature(r, t + 2 * delta) + 8 * swept_area_quadrature(r, t + delta) -
               8 * swept_area_quadrature(r, t - delta) + swept_area_quadrature(r, t - 2 * delta)) /
              (12 * delta);
      expected_pdf += fd;
    }
    expected_pdf /= to_ld(tr.total_area);
    fd_err = std::max(fd_err, static_cast<double>(std::abs(expected_pdf - pdf.pdf(t))));
  }
  out.push_back(make("pdf_vs_swept_area_quadrature", fd_err, 1e-8, fd_err <= 1e-8));

  double cdf_err = 0;
  for (ld t : {0.5L, 1.5L, 3.7L, 7.0L, 20.0L}) {
    ld acc = 0, lo = 0;
    for (const auto& b : bps) {
      ld hi = std::min(to_ld(b), t);
      if (hi > lo) acc += boost::math::quadrature::gauss_kronrod<ld, 61>::integrate(
                              [&](ld s) { return pdf.pdf(s); }, lo, hi, 20, 1e-15L);
      lo = std::max(lo, hi);
    }
    if (t > lo)
      acc += boost::math::quadrature::gauss_kronrod<ld, 61>::integrate([&](ld s) { return pdf.pdf(s); }, lo, t,
                                                                        20, 1e-15L);
    cdf_err = std::max(cdf_err, static_cast<double>(std::abs(acc - pdf.cdf(t))));
  }
  out.push_back(make("cdf_vs_integrated_pdf", cdf_err, 1e-10, cdf_err <= 1e-10));

  const HallSignature sig = hall_signature(pdf);
  bool subset = std::all_of(sig.nonsmooth_set.begin(), sig.nonsmooth_set.end(), [&](const Rational& r) {
    return std::binary_search(bps.begin(), bps.end(), r);
  });
  out.push_back(make("hall_signature", sig.closure_ok ? 1 : 0, std::nullopt, subset,
                     sig.closure_ok ? "closure holds (inconclusive)"
                                    : "not a sum of scaled Hall distributions, witness " + to_string(*sig.witness)));

  const bool ten = isomorphic(base, Origami::parse(fixtures::ten_tile));
  const std::int64_t bound = opts.bound > 0 ? opts.bound : (ten ? 2000 : 500);
  const GapSample sample = ten ? congruence_gaps_10tile(bound) : empirical_gaps(base, bound);
  double ks = ks_distance(sample, pdf);
  out.push_back(make("ks_empirical", ks, 0.02, ks <= 0.02, "R = " + std::to_string(bound)));
  return out;
}

}  // namespace slopegap
