#include "slopegap/transversal.hpp"

#include <doctest.h>

#include <utility>

using namespace slopegap;

namespace {

struct Row {
  Rational b_lo, b_hi;
  Vec2 winner;
};

Vec2 v(Rational x, Rational y) { return {x, y}; }

const Transversal& ten() {
  static const Transversal tr = build_transversal(cusp_data(orbit_graph(Origami::parse(fixtures::ten_tile))));
  return tr;
}

// Components in cusp order: the identity cusp, S, T^3 S T^2, T^3 S T^2 S.
constexpr int omega1 = 0, omega2 = 1, omega4 = 2, omega3 = 3;

void check_partition(int idx, const std::vector<Row>& rows) {
  const auto& p = ten().partitions[static_cast<std::size_t>(idx)];
  REQUIRE(p.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(p[i].b_lo == rows[i].b_lo);
    CHECK(p[i].b_hi == rows[i].b_hi);
    CHECK(p[i].winner == rows[i].winner);
  }
}

// Certificate attached to the step that settled the winner.
bool has_certificate(const EdgeInterval& iv) {
  return !iv.transcript.empty() && iv.transcript.back().candidate == iv.winner &&
         iv.transcript.back().certificate.has_value();
}

}  // namespace

TEST_CASE("section components") {
  const auto& c = ten().components;
  REQUIRE(c.size() == 4);
  CHECK(c[omega4].x0 == 1);
  CHECK(c[omega4].y0 == 1);
  CHECK(c[omega4].alpha_eff == 5);
  CHECK(c[omega4].triangle == Polygon{{0, 1}, {1, -5}, {1, 0}});
  CHECK(c[omega1].d == 2);
  CHECK(c[omega1].x0 == 1);
  CHECK(c[omega1].y0 == 2);
  CHECK(c[omega1].alpha_eff == Rational(5, 4));
  CHECK(c[omega1].triangle == Polygon{{0, Rational(1, 2)}, {1, Rational(-5, 4)}, {1, 0}});

  auto torus = build_transversal(cusp_data(orbit_graph(Origami())));
  REQUIRE(torus.components.size() == 1);
  CHECK(torus.components[0].triangle == Polygon{{0, 1}, {1, -1}, {1, 0}});
  CHECK(torus.total_area == Rational(1, 2));
}

TEST_CASE("edge partitions reproduce the frozen winner tables") {
  check_partition(omega1, {{Rational(-5, 4), Rational(-3, 4), v(Rational(5, 2), 2)},
                           {Rational(-3, 4), Rational(-5, 8), v(Rational(7, 2), 4)},
                           {Rational(-5, 8), Rational(-1, 4), v(Rational(3, 2), 2)},
                           {Rational(-1, 4), 0, v(1, 2)}});
  check_partition(omega2, {{-1, Rational(-1, 2), v(2, 2)},
                           {Rational(-1, 2), Rational(-1, 3), v(2, 3)},
                           {Rational(-1, 3), 0, v(1, 2)}});
  check_partition(omega3, {{-1, 0, v(1, 1)}});
  check_partition(omega4, {{-5, -4, v(5, 1)},
                           {-4, -3, v(4, 1)},
                           {-3, Rational(-5, 2), v(6, 2)},
                           {Rational(-5, 2), -2, v(5, 2)},
                           {-2, Rational(-3, 2), v(4, 2)},
                           {Rational(-3, 2), Rational(-4, 3), v(5, 3)},
                           {Rational(-4, 3), Rational(-5, 4), v(6, 4)},
                           {Rational(-5, 4), -1, v(4, 3)},
                           {-1, 0, v(1, 1)}});
}

TEST_CASE("interval endpoints and monotone winners") {
  for (const auto& p : ten().partitions) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& w = p[i].winner;
      CHECK(p[i].b_hi == -(w.x - 1) / w.y);
      if (i > 0) CHECK(p[i - 1].b_hi == p[i].b_lo);
      if (i > 0) CHECK(p[i - 1].winner.y / p[i - 1].winner.x < w.y / w.x);
    }
  }
}

TEST_CASE("starred rows carry emptiness certificates") {
  const auto& p4 = ten().partitions[omega4];
  // A row is certified exactly when its candidate region at the interval start is a parallel strip.
  for (const auto& iv : p4) {
    auto r = candidate_region(ten().components[omega4], iv.b_lo, iv.winner);
    CHECK((r.kind == RegionKind::Unbounded) == has_certificate(iv));
  }
  CHECK(has_certificate(ten().partitions[omega3][0]));
  CHECK(has_certificate(ten().partitions[omega1][0]));
}

TEST_CASE("candidate regions") {
  const auto& c = ten().components;
  auto r4 = candidate_region(c[omega4], -4, v(4, 1));
  CHECK(r4.kind == RegionKind::Unbounded);
  CHECK(*r4.lower_slope == Rational(1, 4));
  CHECK(*r4.upper_slope == Rational(1, 4));

  auto r1 = candidate_region(c[omega1], Rational(-3, 4), v(Rational(7, 2), 4));
  CHECK(r1.kind == RegionKind::Bounded);
  CHECK(*r1.lower_slope == Rational(4, 3));
  CHECK(*r1.upper_slope == Rational(8, 7));
  REQUIRE(r1.y_max.has_value());
  CHECK(*r1.y_max > 0);
}

TEST_CASE("strip certificates") {
  const auto& c = ten().components;
  HolonomyTester h4(c[omega4].cusp.cusp_relative);
  auto cert = certify_strip_empty(c[omega4], h4, Rational(-5, 2), v(5, 2));
  CHECK(cert.empty());
  CHECK(cert.p == 5);
  CHECK(cert.q == 2);
  CHECK(cert.direction_width >= 1);
  CHECK(cert.lines.size() == cert.periods.size());

  HolonomyTester h1(c[omega1].cusp.cusp_relative);
  CHECK(certify_strip_empty(c[omega1], h1, Rational(-5, 4), v(Rational(5, 2), 2)).empty());

  HolonomyTester h3(c[omega3].cusp.cusp_relative);
  CHECK(certify_strip_empty(c[omega3], h3, -1, v(1, 1)).empty());
}

TEST_CASE("winner regions tile each triangle") {
  const auto& tr = ten();
  Rational total = 0;
  for (std::size_t i = 0; i < tr.components.size(); ++i) {
    Rational sum = 0;
    for (const auto& r : tr.regions)
      if (r.component == static_cast<int>(i)) sum += signed_area(r.polygon);
    CHECK(sum == tr.components[i].alpha_eff / 2);
    total += sum;
  }
  CHECK(total == Rational(33, 8));
  CHECK(tr.total_area == Rational(33, 8));

  std::vector<Polygon> omega2_regions, omega3_regions;
  for (const auto& r : tr.regions) {
    if (r.component == omega2 && r.winner == v(2, 3)) omega2_regions.push_back(r.polygon);
    if (r.component == omega3) omega3_regions.push_back(r.polygon);
  }
  REQUIRE(omega2_regions.size() == 1);
  CHECK(signed_area(omega2_regions[0]) == signed_area(Polygon{{Rational(1, 2), 0}, {1, Rational(-1, 2)}, {1, Rational(-1, 3)}}));
  for (const Point& p : {Point{Rational(1, 2), 0}, Point{1, Rational(-1, 3)}, Point{1, Rational(-1, 2)}}) {
    bool found = false;
    for (const auto& q : omega2_regions[0]) found = found || q == p;
    CHECK(found);
  }
  REQUIRE(omega3_regions.size() == 1);
  CHECK(omega3_regions[0].size() == 3);
  CHECK(signed_area(omega3_regions[0]) == Rational(1, 2));
}

TEST_CASE("geometry primitives") {
  Polygon sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(signed_area(sq) == 1);
  Polygon half = clip(sq, HalfPlane{-1, 0, Rational(1, 2)});
  CHECK(signed_area(half) == Rational(1, 2));
  CHECK(contains(sq, {Rational(1, 2), Rational(1, 2)}, true));
  CHECK_FALSE(contains(sq, {1, Rational(1, 2)}, true));
  CHECK(contains(sq, {1, Rational(1, 2)}, false));
  CHECK(simplify({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {2, 2}}) == Polygon{{0, 0}, {2, 0}, {2, 2}});
  CHECK(clip(sq, HalfPlane{0, -1, -2}).empty());
}
