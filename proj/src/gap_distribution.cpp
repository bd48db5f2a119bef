#include "slopegap/gap_distribution.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace slopegap {

namespace {

using ld = long double;

// Lower and upper boundary lines of a convex polygon over each slab between consecutive
// distinct u-coordinates. `swap` treats the second coordinate as u.
struct Slab {
  Rational u_lo, u_hi;
  EdgeLine lower, upper;
};

std::vector<Slab> slabs(const Polygon& poly, bool swap) {
  auto u = [&](const Point& p) { return swap ? p.y : p.x; };
  auto v = [&](const Point& p) { return swap ? p.x : p.y; };
  std::vector<Rational> us;
  for (const auto& p : poly) us.push_back(u(p));
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());
  std::vector<Slab> out;
  for (std::size_t i = 0; i + 1 < us.size(); ++i) {
    Rational mid = (us[i] + us[i + 1]) / 2;
    std::vector<EdgeLine> lines;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Point& p = poly[k];
      const Point& q = poly[(k + 1) % poly.size()];
      if (u(p) == u(q)) continue;
      Rational lo = std::min(u(p), u(q)), hi = std::max(u(p), u(q));
      if (!(lo <= us[i] && us[i + 1] <= hi)) continue;
      Rational m = (v(q) - v(p)) / (u(q) - u(p));
      lines.push_back({m, v(p) - m * u(p)});
    }
    if (lines.size() < 2) continue;
    auto at = [&](const EdgeLine& l) { return l.m * mid + l.c; };
    auto lower = *std::min_element(lines.begin(), lines.end(), [&](auto& x, auto& y) { return at(x) < at(y); });
    auto upper = *std::max_element(lines.begin(), lines.end(), [&](auto& x, auto& y) { return at(x) < at(y); });
    out.push_back({us[i], us[i + 1], lower, upper});
  }
  return out;
}

struct Root {
  ld value;
  int branch;
};

// Real roots of K a^2 + c a - 1/t = 0, each tagged with its branch.
std::vector<Root> roots(ld K, ld c, ld t) {
  const ld C = -1.0L / t;
  if (K == 0) {
    if (c == 0) return {};
    return {{-C / c, 0}};
  }
  ld disc = c * c - 4 * K * C;
  if (disc < 0) return {};
  ld sq = std::sqrt(disc);
  ld q = c >= 0 ? -(c + sq) / 2 : -(c - sq) / 2;
  // q/K takes the branch whose sqrt sign opposes c; C/q the other one.
  int q_branch = c >= 0 ? -1 : +1;
  std::vector<Root> out;
  if (q != 0) {
    out.push_back({q / K, q_branch});
    out.push_back({C / q, -q_branch});
  } else {
    out.push_back({0, q_branch});
  }
  return out;
}

std::optional<ld> root_value(ld K, ld c, int branch, ld t) {
  for (const Root& r : roots(K, c, t))
    if (r.branch == branch) return r.value;
  return std::nullopt;
}

ld pdf_of(const std::vector<ActiveInterval>& ivs, ld t, bool& ok) {
  ld sum = 0;
  for (const auto& iv : ivs) {
    auto a0 = iv.entry.eval(t);
    auto a1 = iv.exit.eval(t);
    if (!a0 || !a1 || *a0 <= 0 || *a1 <= 0) {
      ok = false;
      return 0;
    }
    sum += std::log(*a1) - std::log(*a0);
  }
  return sum / (t * t);
}

}  // namespace

std::optional<long double> Endpoint::eval(long double t) const {
  if (kind == Kind::Vertex) return to_ld(a);
  return root_value(to_ld(K), to_ld(c), branch, t);
}

std::string Endpoint::describe() const {
  if (kind == Kind::Vertex) return "vertex a=" + to_string(a);
  return std::string(upper ? "upper" : "lower") + " root K=" + to_string(K) + " c=" + to_string(c) +
         " branch=" + std::to_string(branch);
}

std::vector<Rational> region_breakpoints(const WinnerRegion& r) {
  const Rational& x = r.winner.x;
  const Rational& y = r.winner.y;
  std::vector<Rational> out;
  const Polygon& poly = r.polygon;
  for (const auto& v : poly) {
    Rational s = v.x * x + v.y * y;
    if (v.x > 0 && s > 0) out.push_back(y / (v.x * s));
  }
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point& p = poly[k];
    const Point& q = poly[(k + 1) % poly.size()];
    if (p.x == q.x) continue;
    Rational m = (q.y - p.y) / (q.x - p.x);
    Rational c = p.y - m * p.x;
    Rational K = m + x / y;
    if (!(K < 0) || c == 0) continue;
    Rational a_star = -c / (K * 2);
    if (std::min(p.x, q.x) < a_star && a_star < std::max(p.x, q.x)) out.push_back(K * -4 / (c * c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RegionEvaluator::RegionEvaluator(const WinnerRegion& r)
    : region_(r),
      area_(signed_area(r.polygon)),
      slope_(to_ld(r.winner.x / r.winner.y)),
      slope_exact_(r.winner.x / r.winner.y) {
  for (const Slab& s : slabs(r.polygon, false)) {
    Span sp{s.u_lo, s.u_hi, s.lower, s.upper, 0, 0, 0, 0, 0, 0, 0, 0};
    sp.lo = to_ld(s.u_lo);
    sp.hi = to_ld(s.u_hi);
    sp.ml = to_ld(s.lower.m);
    sp.cl = to_ld(s.lower.c);
    sp.mu = to_ld(s.upper.m);
    sp.cu = to_ld(s.upper.c);
    sp.kl = to_ld(s.lower.m + slope_exact_);
    sp.ku = to_ld(s.upper.m + slope_exact_);
    spans_.push_back(sp);
  }
}

bool RegionEvaluator::inside(const Span& s, long double a, long double t) {
  // h(a) - line(a) has the sign of 1/t - K a^2 - c a for a > 0.
  ld g_lo = 1.0L / t - s.kl * a * a - s.cl * a;
  ld g_hi = 1.0L / t - s.ku * a * a - s.cu * a;
  return g_lo > 0 && g_hi < 0;
}

std::vector<RegionEvaluator::Cut> RegionEvaluator::cuts(const Span& s, long double t) const {
  std::vector<Cut> out;
  Endpoint lo_end;
  lo_end.a = s.a_lo;
  out.push_back({s.lo, lo_end});
  for (int side = 0; side < 2; ++side) {
    const EdgeLine& line = side == 0 ? s.lower : s.upper;
    ld K = side == 0 ? s.kl : s.ku;
    ld c = side == 0 ? s.cl : s.cu;
    for (const Root& r : roots(K, c, t)) {
      if (r.value > s.lo && r.value < s.hi) {
        Endpoint e;
        e.kind = Endpoint::Kind::Root;
        e.K = line.m + slope_exact_;
        e.c = line.c;
        e.branch = r.branch;
        e.upper = side == 1;
        out.push_back({r.value, e});
      }
    }
  }
  Endpoint hi_end;
  hi_end.a = s.a_hi;
  out.push_back({s.hi, hi_end});
  std::sort(out.begin() + 1, out.end() - 1, [](const Cut& x, const Cut& y) { return x.a < y.a; });
  return out;
}

long double RegionEvaluator::pdf(long double t) const {
  if (!(t > 0)) return 0;
  ld sum = 0;
  for (const Span& s : spans_) {
    auto cs = cuts(s, t);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      ld a0 = cs[i].a, a1 = cs[i + 1].a;
      if (!(a1 > a0)) continue;
      if (inside(s, (a0 + a1) / 2, t)) sum += std::log(a1) - std::log(a0);
    }
  }
  return sum / (t * t);
}

long double RegionEvaluator::swept_area(long double t) const {
  if (!(t > 0)) return 0;
  ld area = 0;
  for (const Span& s : spans_) {
    auto cs = cuts(s, t);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      ld a0 = cs[i].a, a1 = cs[i + 1].a;
      if (!(a1 > a0)) continue;
      ld mid = (a0 + a1) / 2;
      ld g_lo = 1.0L / t - s.kl * mid * mid - s.cl * mid;
      ld sq = (a1 * a1 - a0 * a0) / 2;
      if (g_lo <= 0) {
        area += (s.mu - s.ml) * sq + (s.cu - s.cl) * (a1 - a0);
      } else if (inside(s, mid, t)) {
        area += s.ku * sq + s.cu * (a1 - a0) - std::log(a1 / a0) / t;
      }
    }
  }
  return area;
}

std::vector<ActiveInterval> RegionEvaluator::active(long double t) const {
  std::vector<ActiveInterval> out;
  bool open = false;
  ActiveInterval cur;
  for (const Span& s : spans_) {
    auto cs = cuts(s, t);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      ld a0 = cs[i].a, a1 = cs[i + 1].a;
      if (!(a1 > a0)) continue;
      bool in = inside(s, (a0 + a1) / 2, t);
      if (in && !open) {
        cur.entry = cs[i].end;
        open = true;
      } else if (!in && open) {
        cur.exit = cs[i].end;
        out.push_back(cur);
        open = false;
      }
      if (in) cur.exit = cs[i + 1].end;
    }
  }
  if (open) out.push_back(cur);
  return out;
}

long double region_pdf_eval(const WinnerRegion& r, long double t) { return RegionEvaluator(r).pdf(t); }

std::optional<long double> Piece::eval(long double t, long double total_area) const {
  bool ok = true;
  ld sum = 0;
  for (const auto& part : parts) sum += pdf_of(part.intervals, t, ok);
  if (!ok) return std::nullopt;
  return sum / total_area;
}

PiecewisePdf::PiecewisePdf(std::vector<WinnerRegion> regions, Rational total_area) : total_area_(total_area) {
  for (const auto& r : regions) {
    evaluators_.emplace_back(r);
    auto b = region_breakpoints(r);
    candidates_.insert(candidates_.end(), b.begin(), b.end());
  }
  std::sort(candidates_.begin(), candidates_.end());
  candidates_.erase(std::unique(candidates_.begin(), candidates_.end()), candidates_.end());

  // A candidate is kept only where the frozen expressions on its two sides differ.
  const ld area = to_ld(total_area_);
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    const Rational& tau = candidates_[i];
    Rational lo = i == 0 ? Rational(0) : candidates_[i - 1];
    std::optional<Rational> hi;
    if (i + 1 < candidates_.size()) hi = candidates_[i + 1];
    Piece left = freeze(lo, tau);
    Piece right = freeze(tau, hi);
    ld tl = to_ld(tau);
    ld width_left = tl - to_ld(lo);
    ld width_right = hi ? to_ld(*hi) - tl : tl;
    bool same = true;
    for (ld f : {1.0L / 3, 2.0L / 3}) {
      ld t_left = tl - f * width_left;
      ld t_right = tl + f * width_right;
      auto l_at_r = left.eval(t_right, area);
      auto r_at_l = right.eval(t_left, area);
      ld want_r = pdf(t_right), want_l = pdf(t_left);
      if (!l_at_r || !r_at_l || std::fabs(*l_at_r - want_r) > 1e-12L * (1 + std::fabs(want_r)) ||
          std::fabs(*r_at_l - want_l) > 1e-12L * (1 + std::fabs(want_l))) {
        same = false;
        break;
      }
    }
    if (!same) breakpoints_.push_back(tau);
  }
}

Piece PiecewisePdf::freeze(const Rational& lo, const std::optional<Rational>& hi) const {
  Piece p;
  p.t_lo = lo;
  p.t_hi = hi;
  ld t = hi ? (to_ld(lo) + to_ld(*hi)) / 2 : (lo > 0 ? 2 * to_ld(lo) : 1.0L);
  for (std::size_t k = 0; k < evaluators_.size(); ++k) {
    auto ivs = evaluators_[k].active(t);
    if (!ivs.empty()) p.parts.push_back({static_cast<int>(k), std::move(ivs)});
  }
  return p;
}

std::vector<Piece> PiecewisePdf::pieces() const {
  std::vector<Piece> out;
  Rational lo = 0;
  for (const auto& b : breakpoints_) {
    out.push_back(freeze(lo, b));
    lo = b;
  }
  out.push_back(freeze(lo, std::nullopt));
  return out;
}

long double PiecewisePdf::pdf(long double t) const {
  ld sum = 0;
  for (const auto& e : evaluators_) sum += e.pdf(t);
  return sum / to_ld(total_area_);
}

long double PiecewisePdf::cdf(long double t) const {
  if (!(t > 0)) return 0;
  if (std::isinf(t)) return 1;
  ld sum = 0;
  for (const auto& e : evaluators_) sum += e.swept_area(t);
  return sum / to_ld(total_area_);
}

PiecewisePdf total_pdf(const Transversal& tr) { return PiecewisePdf(tr.regions, tr.total_area); }

CovolumeResult covolume(const std::vector<WinnerRegion>& regions) {
  boost::math::quadrature::tanh_sinh<ld> integrator;
  CovolumeResult res;
  for (const auto& r : regions) {
    // (a, b) -> (a, s = a x + b y) has Jacobian y, turning the integrand into 1/(a s).
    Polygon mapped;
    for (const auto& v : r.polygon) mapped.push_back({v.x, v.x * r.winner.x + v.y * r.winner.y});
    for (const Slab& s : slabs(mapped, true)) {
      ld ml = to_ld(s.lower.m), cl = to_ld(s.lower.c), mu = to_ld(s.upper.m), cu = to_ld(s.upper.c);
      auto f = [&](ld sv) -> ld {
        ld a_lo = std::max(ml * sv + cl, std::numeric_limits<ld>::min());
        ld a_hi = mu * sv + cu;
        if (!(a_hi > a_lo)) return 0;
        return std::log(a_hi / a_lo) / sv;
      };
      ld err = 0;
      ld v = integrator.integrate(f, to_ld(s.u_lo), to_ld(s.u_hi), 1e-16L, &err);
      res.value += v;
      res.error_estimate += err;
    }
  }
  return res;
}

CovolumeResult integrate_pdf(const PiecewisePdf& p) {
  boost::math::quadrature::tanh_sinh<ld> integrator;
  CovolumeResult res;
  auto f = [&](ld t) { return p.pdf(t); };
  const auto& bps = p.breakpoints();
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    ld err = 0;
    ld v = integrator.integrate(f, to_ld(bps[i]), to_ld(bps[i + 1]), 1e-15L, &err);
    res.value += v;
    res.error_estimate += err;
  }
  if (!bps.empty()) {
    ld err = 0;
    ld v = integrator.integrate(f, to_ld(bps.back()), std::numeric_limits<ld>::infinity(), 1e-15L, &err);
    res.value += v;
    res.error_estimate += err;
  }
  return res;
}

}  // namespace slopegap
