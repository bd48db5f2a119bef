#include "slopegap/transversal.hpp"

#include "slopegap/errors.hpp"

#include <numeric>

namespace slopegap {

namespace {

constexpr std::int64_t max_search_levels = 100000;

// Larger x/y wins; among collinear vectors the shorter one.
bool better(const Vec2& a, const Vec2& b) {
  Rational lhs = a.x * b.y, rhs = b.x * a.y;
  if (lhs != rhs) return lhs > rhs;
  return a.y < b.y;
}

Vec2 shortest_collinear(const SectionComponent& comp, const HolonomyTester& hol, const Vec2& v) {
  LatticeVector w = comp.unscale(v);
  std::int64_t g = std::gcd(w.x < 0 ? -w.x : w.x, w.y);
  for (std::int64_t j = 1; j < g; ++j) {
    if (hol(w.x / g * j, w.y / g * j)) return comp.scale(w.x / g * j, w.y / g * j);
  }
  return v;
}

Vec2 initial_candidate(const SectionComponent& comp, const HolonomyTester& hol, const Rational& b) {
  const std::int64_t d = comp.d;
  for (std::int64_t y = 1; y <= max_search_levels; ++y) {
    // 0 <= X/d + b Y d < 1
    Rational shift = b * Rational(y * d * d);
    std::int64_t lo = ceil(-shift);
    std::int64_t hi = ceil(Rational(d) - shift) - 1;
    std::optional<Vec2> best;
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (!hol(x, y)) continue;
      Vec2 v = comp.scale(x, y);
      if (!best || better(v, *best)) best = v;
    }
    if (best) return *best;
  }
  throw Error(ErrorKind::CandidateSearchExhausted, "no holonomy vector strip contains b = " + to_string(b));
}

}  // namespace

LatticeVector SectionComponent::unscale(const Vec2& v) const {
  Rational x = v.x * Rational(d), y = v.y / Rational(d);
  return {x.numerator(), y.numerator()};
}

SectionComponent section_component(const CuspDatum& c) {
  SectionComponent comp;
  comp.cusp = c;
  comp.d = c.scaling_d;
  LatticeVector low = lowest_holonomy(c.cusp_relative, c.width);
  comp.x0 = Rational(low.x, comp.d);
  comp.y0 = Rational(low.y * comp.d);
  comp.alpha_eff = Rational(c.width, comp.d * comp.d);
  comp.triangle = {{0, Rational(1) / comp.y0}, {1, comp.b_bottom()}, {1, comp.b_top()}};
  return comp;
}

CandidateRegion candidate_region(const SectionComponent& comp, const Rational& b, const Vec2& candidate) {
  (void)comp;
  CandidateRegion r;
  r.b = b;
  r.candidate = candidate;
  const Rational& u = candidate.x;
  const Rational& v = candidate.y;
  if (b != 0) r.lower_slope = Rational(-1) / b;
  if (u != 0) r.upper_slope = v / u;
  Rational lead = u + b * v;
  if (lead == 0) {
    r.kind = RegionKind::Unbounded;
  } else {
    r.kind = RegionKind::Bounded;
    r.y_max = v / lead;
  }
  return r;
}

StripCertificate certify_strip_empty(const SectionComponent& comp, const HolonomyTester& hol, const Rational& b,
                                     const Vec2& candidate, std::size_t cap) {
  StripCertificate cert;
  LatticeVector w = comp.unscale(candidate);
  std::int64_t g = std::gcd(w.x < 0 ? -w.x : w.x, w.y);
  cert.p = w.x / g;
  cert.q = w.y / g;
  try {
    cert.direction_width = direction_width(hol.origami(), cert.p, cert.q, cap);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotCertifiable, e.what());
  }
  (void)b;
  const std::int64_t p = cert.p, q = cert.q;
  // The open strip 0 < x + b y < 1 is -q d < p Y - q X < 0 in unscaled coordinates.
  for (std::int64_t c = -1; c > -q * comp.d; --c) {
    std::int64_t y0 = -1;
    for (std::int64_t y = 1; y <= q; ++y) {
      if (((p * y - c) % q + q) % q == 0) {
        y0 = y;
        break;
      }
    }
    std::int64_t period = cert.direction_width * -c;
    cert.lines.push_back(c);
    cert.periods.push_back(period);
    for (std::int64_t j = 0; j < period; ++j) {
      std::int64_t y = y0 + j * q;
      std::int64_t x = (p * y - c) / q;
      cert.tested.push_back({x, y});
      if (hol(x, y)) {
        Vec2 v = comp.scale(x, y);
        if (!cert.witness || better(v, *cert.witness)) cert.witness = v;
        break;
      }
    }
  }
  return cert;
}

std::vector<EdgeInterval> partition_edge(const SectionComponent& comp) {
  HolonomyTester hol(comp.cusp.cusp_relative);
  const std::int64_t d = comp.d;
  std::vector<EdgeInterval> out;
  Rational b = comp.b_bottom();
  const Rational top = comp.b_top();
  while (b < top) {
    EdgeInterval iv;
    iv.b_lo = b;
    Vec2 cand = initial_candidate(comp, hol, b);
    for (;;) {
      SearchStep step;
      step.candidate = cand;
      step.region = candidate_region(comp, b, cand);
      if (step.region.kind == RegionKind::Bounded) {
        const Rational& u = cand.x;
        const Rational& v = cand.y;
        std::optional<Vec2> best;
        // y = Y d < y_max and u/v y < x < 1 - b y.
        for (std::int64_t y = 1; Rational(y * d) < *step.region.y_max; ++y) {
          Rational yd(y * d);
          std::int64_t lo = floor(u / v * yd * Rational(d)) + 1;
          std::int64_t hi = ceil((Rational(1) - b * yd) * Rational(d)) - 1;
          for (std::int64_t x = lo; x <= hi; ++x) {
            ++step.tested;
            if (!hol(x, y)) continue;
            Vec2 w = comp.scale(x, y);
            if (!best || better(w, *best)) best = w;
          }
        }
        step.beater = best;
      } else {
        StripCertificate cert = certify_strip_empty(comp, hol, b, cand);
        step.tested = cert.tested.size();
        step.beater = cert.witness;
        step.certificate = std::move(cert);
      }
      iv.transcript.push_back(step);
      if (!step.beater) break;
      cand = *step.beater;
    }
    iv.winner = shortest_collinear(comp, hol, cand);
    iv.b_hi = (Rational(1) - iv.winner.x) / iv.winner.y;
    if (iv.b_hi <= b)
      throw Error(ErrorKind::CandidateSearchExhausted, "winner strip does not advance past b = " + to_string(b));
    if (iv.b_hi > top) iv.b_hi = top;
    b = iv.b_hi;
    out.push_back(std::move(iv));
  }
  return out;
}

std::vector<WinnerRegion> winner_regions(const SectionComponent& comp, const std::vector<EdgeInterval>& partition,
                                         int component_index) {
  std::vector<WinnerRegion> out;
  Rational area = 0;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const Vec2& w = partition[k].winner;
    Polygon base = clip(comp.triangle, {w.x, w.y, 0});
    base = clip(base, {-w.x, -w.y, 1});
    std::vector<Polygon> pieces;
    if (!base.empty()) pieces.push_back(base);
    for (const auto& other : partition) {
      const Vec2& s = other.winner;
      if (!better(s, w) || s.x * w.y == w.x * s.y) continue;
      std::vector<Polygon> next;
      for (const auto& piece : pieces) {
        Polygon below = clip(piece, {-s.x, -s.y, 0});
        Polygon above = clip(piece, {s.x, s.y, -1});
        if (!below.empty()) next.push_back(std::move(below));
        if (!above.empty()) next.push_back(std::move(above));
      }
      pieces = std::move(next);
    }
    for (auto& piece : pieces) {
      area += signed_area(piece);
      out.push_back({w, std::move(piece), component_index, static_cast<int>(k)});
    }
  }
  if (area != comp.alpha_eff / 2)
    throw Error(ErrorKind::TilingGap,
                "region areas sum to " + to_string(area) + ", expected " + to_string(comp.alpha_eff / 2));
  return out;
}

Transversal build_transversal(const std::vector<CuspDatum>& cusps) {
  Transversal tr;
  tr.total_area = 0;
  for (std::size_t i = 0; i < cusps.size(); ++i) {
    SectionComponent comp = section_component(cusps[i]);
    auto part = partition_edge(comp);
    auto regions = winner_regions(comp, part, static_cast<int>(i));
    tr.total_area += comp.alpha_eff / 2;
    tr.regions.insert(tr.regions.end(), regions.begin(), regions.end());
    tr.partitions.push_back(std::move(part));
    tr.components.push_back(std::move(comp));
  }
  return tr;
}

}  // namespace slopegap
