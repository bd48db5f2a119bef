#pragma once

#include "slopegap/geometry.hpp"
#include "slopegap/origami.hpp"
#include "slopegap/veech.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace slopegap {

// One section triangle in the (a, b) plane. Holonomy vectors of the cusp-relative surface are
// scaled by diag(1/d, d), so an unscaled (X, Y) becomes (X/d, Y*d).
struct SectionComponent {
  CuspDatum cusp;
  std::int64_t d = 1;
  Rational x0, y0, alpha_eff;
  Polygon triangle;  // counterclockwise: (0, 1/y0), bottom of a = 1, top of a = 1

  Rational b_top() const { return (Rational(1) - x0) / y0; }
  Rational b_bottom() const { return b_top() - alpha_eff; }
  Vec2 scale(std::int64_t x, std::int64_t y) const { return {Rational(x, d), Rational(y * d)}; }
  LatticeVector unscale(const Vec2& v) const;
};

SectionComponent section_component(const CuspDatum& c);

enum class RegionKind { Bounded, Unbounded };

// Vectors that could beat `candidate` at the edge point (1, b): 0 <= x + b y < 1, y > 0 and
// x/y > u/v.
struct CandidateRegion {
  RegionKind kind = RegionKind::Bounded;
  Rational b;
  Vec2 candidate;
  std::optional<Rational> lower_slope;  // boundary y = s (x - 1), s = -1/b
  std::optional<Rational> upper_slope;  // boundary y = s x, s = v/u
  std::optional<Rational> y_max;        // bounded regions only
};

CandidateRegion candidate_region(const SectionComponent& comp, const Rational& b, const Vec2& candidate);

// Emptiness proof for an unbounded region. Along each lattice line p Y - q X = c the holonomy
// set is periodic with period width * |c| steps of (p, q), so one period per line decides it.
struct StripCertificate {
  std::int64_t p = 0, q = 0;  // unscaled primitive direction
  int direction_width = 0;
  std::vector<std::int64_t> lines;
  std::vector<std::int64_t> periods;
  std::vector<LatticeVector> tested;
  std::optional<Vec2> witness;  // best holonomy vector found, scaled

  bool empty() const { return !witness.has_value(); }
};

StripCertificate certify_strip_empty(const SectionComponent& comp, const HolonomyTester& hol, const Rational& b,
                                     const Vec2& candidate, std::size_t cap = default_orbit_cap);

struct SearchStep {
  Vec2 candidate;
  CandidateRegion region;
  std::size_t tested = 0;
  std::optional<Vec2> beater;
  std::optional<StripCertificate> certificate;
};

struct EdgeInterval {
  Rational b_lo, b_hi;  // [b_lo, b_hi) on the edge a = 1
  Vec2 winner;
  std::vector<SearchStep> transcript;
};

std::vector<EdgeInterval> partition_edge(const SectionComponent& comp);

struct WinnerRegion {
  Vec2 winner;
  Polygon polygon;  // counterclockwise
  int component = 0;
  int interval = 0;
};

std::vector<WinnerRegion> winner_regions(const SectionComponent& comp, const std::vector<EdgeInterval>& partition,
                                         int component_index = 0);

struct Transversal {
  std::vector<SectionComponent> components;
  std::vector<std::vector<EdgeInterval>> partitions;
  std::vector<WinnerRegion> regions;
  Rational total_area;
};

Transversal build_transversal(const std::vector<CuspDatum>& cusps);

}  // namespace slopegap
