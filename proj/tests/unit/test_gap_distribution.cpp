#include "slopegap/gap_distribution.hpp"
#include "slopegap/verify.hpp"

#include "../support/reference.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace slopegap;
using ld = long double;

namespace {

Transversal transversal_of(const char* f) { return build_transversal(cusp_data(orbit_graph(Origami::parse(f)))); }

const Transversal& ten() {
  static const Transversal tr = transversal_of(fixtures::ten_tile);
  return tr;
}

const PiecewisePdf& ten_pdf() {
  static const PiecewisePdf p = total_pdf(ten());
  return p;
}

WinnerRegion hall_region() {
  return WinnerRegion{{1, 1}, {{0, 1}, {1, -1}, {1, 0}}, 0, 0};
}

std::vector<Rational> rats(std::initializer_list<Rational> l) { return l; }

}  // namespace

TEST_CASE("region breakpoints") {
  CHECK(region_breakpoints(hall_region()) == rats({1, 4}));

  WinnerRegion omega4_first{{5, 1}, {{0, 1}, {1, -5}, {1, -4}}, 0, 0};
  auto bps = region_breakpoints(omega4_first);
  CHECK(std::find(bps.begin(), bps.end(), Rational(1)) != bps.end());

  // A vertex on the zero line of the strip contributes no breakpoint.
  WinnerRegion degenerate{{1, 1}, {{0, 0}, {1, -1}, {1, 0}}, 0, 0};
  for (const auto& b : region_breakpoints(degenerate)) CHECK(b > 0);
}

TEST_CASE("single Hall region") {
  WinnerRegion r = hall_region();
  CHECK(region_pdf_eval(r, 2) == doctest::Approx(std::log(2.0) / 4).epsilon(1e-15));
  CHECK(region_pdf_eval(r, 0.5L) == 0);
  RegionEvaluator e(r);
  for (ld t : {1.5L, 3.0L, 4.5L, 10.0L, 100.0L}) {
    HallValue h = hall_reference(t);
    CHECK(static_cast<double>(std::abs(2 * e.pdf(t) - h.pdf)) < 1e-15);
    CHECK(static_cast<double>(std::abs(2 * e.swept_area(t) - h.cdf)) < 1e-15);
  }
}

TEST_CASE("ten-tile pdf matches the frozen closed form") {
  const auto& p = ten_pdf();
  CHECK(p.breakpoints() == rats({1, 2, 3, 4, Rational(16, 3), 6, 8, 9, Rational(32, 3), 12, 16}));
  double worst = 0;
  for (int i = 1; i <= 1000; ++i) {
    ld t = std::pow(10.0L, -2 + 4.0L * i / 1000);
    worst = std::max(worst, static_cast<double>(std::abs(p.pdf(t) - testing::ten_tile_closed_form(t))));
  }
  CHECK(worst < 1e-12);
  ld below_two = 2 - 1e-12L;
  CHECK(static_cast<double>(p.pdf(below_two)) == doctest::Approx(8.0 / 33 * std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("continuity at the ten-tile breakpoints") {
  const auto& p = ten_pdf();
  for (const auto& b : p.breakpoints()) {
    ld t = to_ld(b);
    ld h = 1e-13L * t;
    // Square-root cusps allow a jump of order sqrt(h).
    CHECK(static_cast<double>(std::abs(p.pdf(t - h) - p.pdf(t + h))) < 1e-6);
  }
}

TEST_CASE("frozen pieces agree with direct evaluation") {
  const auto& p = ten_pdf();
  auto pieces = p.pieces();
  CHECK(pieces.size() == p.breakpoints().size() + 1);
  for (const auto& piece : pieces) {
    ld lo = to_ld(piece.t_lo);
    ld hi = piece.t_hi ? to_ld(*piece.t_hi) : lo * 4;
    if (lo == 0) lo = hi / 2;
    for (ld s : {0.25L, 0.5L, 0.75L}) {
      ld t = lo + s * (hi - lo);
      auto v = piece.eval(t, to_ld(p.total_area()));
      REQUIRE(v.has_value());
      CHECK(static_cast<double>(std::abs(*v - p.pdf(t))) < 1e-15);
    }
  }
}

TEST_CASE("pdf agrees with a finite difference of an independent swept-area quadrature") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(std::log(0.8), std::log(40.0));
  const auto& bps = ten_pdf().breakpoints();
  int tested = 0;
  for (const auto& r : ten().regions) {
    auto rb = region_breakpoints(r);
    for (int n = 0; n < 100;) {
      ld t = std::exp(static_cast<ld>(u(rng)));
      ld d = 1e-3L * t;
      bool near = false;
      for (const auto& b : rb) near = near || std::abs(to_ld(b) - t) < 4 * d;
      for (const auto& b : bps) near = near || std::abs(to_ld(b) - t) < 4 * d;
      if (near) continue;
      ++n;
      ld fd = (-swept_area_quadrature(r, t + 2 * d) + 8 * swept_area_quadrature(r, t + d) -
               8 * swept_area_quadrature(r, t - d) + swept_area_quadrature(r, t - 2 * d)) /
              (12 * d);
      ld mine = region_pdf_eval(r, t);
      CHECK(static_cast<double>(std::abs(fd - mine)) <= 1e-5 * std::max(1e-3, static_cast<double>(std::abs(mine))));
      ++tested;
    }
  }
  CHECK(tested == 100 * static_cast<int>(ten().regions.size()));
}

TEST_CASE("cdf agrees with the integrated pdf") {
  const auto& p = ten_pdf();
  auto integrate = [&](ld a, ld b) {
    return boost::math::quadrature::gauss_kronrod<ld, 61>::integrate([&](ld s) { return p.pdf(s); }, a, b, 12, 1e-14L);
  };
  for (ld t : {0.5L, 1.7L, 2.5L, 4.0L, 5.5L, 7.3L, 11.0L, 15.0L, 30.0L}) {
    ld acc = 0, lo = 0;
    for (const auto& b : p.breakpoints()) {
      ld hi = std::min(to_ld(b), t);
      if (hi > lo) acc += integrate(lo, hi);
      lo = std::max(lo, hi);
    }
    if (t > lo) acc += integrate(lo, t);
    CHECK(static_cast<double>(std::abs(acc - p.cdf(t))) < 1e-10);
  }
  CHECK(p.cdf(0) == 0);
  CHECK(static_cast<double>(p.cdf(1e12L)) == doctest::Approx(1).epsilon(1e-9));
}

TEST_CASE("torus and three-tile reproduce Hall") {
  for (const char* f : {fixtures::torus, fixtures::three_tile}) {
    auto p = total_pdf(transversal_of(f));
    CHECK(p.breakpoints() == rats({1, 4}));
    double worst = 0;
    for (int i = 1; i <= 1000; ++i) {
      ld t = 100.0L * i / 1000;
      HallValue h = hall_reference(t);
      worst = std::max(worst, static_cast<double>(std::abs(p.pdf(t) - h.pdf)));
      worst = std::max(worst, static_cast<double>(std::abs(p.cdf(t) - h.cdf)));
    }
    CHECK(worst < 1e-12);
  }
  auto torus = total_pdf(transversal_of(fixtures::torus));
  CHECK(static_cast<double>(torus.cdf(4)) == doctest::Approx(2 * (1 - (1 + std::log(4.0)) / 4)).epsilon(1e-15));
}

TEST_CASE("covolume and normalization") {
  const ld pi2 = std::numbers::pi_v<ld> * std::numbers::pi_v<ld>;
  struct Case {
    const char* f;
    int index;
  };
  for (Case c : {Case{fixtures::torus, 1}, {fixtures::three_tile, 3}, {fixtures::four_tile, 6}, {fixtures::ten_tile, 12}}) {
    auto tr = transversal_of(c.f);
    ld expect = c.index * pi2 / 6;
    CHECK(static_cast<double>(std::abs(covolume(tr.regions).value - expect) / expect) < 1e-12);
    auto p = total_pdf(tr);
    CHECK(static_cast<double>(std::abs(integrate_pdf(p).value - 1)) < 1e-10);
    for (int i = 0; i <= 400; ++i) CHECK(p.pdf(std::pow(10.0L, -1 + 3.0L * i / 400)) >= 0);
  }
}
