#include "slopegap/errors.hpp"
#include "slopegap/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace slopegap;
using ld = long double;

namespace {

const Transversal& ten() {
  static const Transversal tr = build_transversal(cusp_data(orbit_graph(Origami::parse(fixtures::ten_tile))));
  return tr;
}

constexpr int omega1 = 0, omega4 = 2, omega3 = 3;

ld hall_pdf(ld t) { return hall_reference(t).pdf; }

bool same_slopes(const std::vector<Slope>& a, const std::vector<Slope>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].num != b[i].num || a[i].den != b[i].den) return false;
  return true;
}

}  // namespace

TEST_CASE("brute winner at table points") {
  const auto& c = ten().components;
  CHECK(brute_winner(c[omega4], {1, Rational(-9, 2)}) == Vec2{5, 1});
  CHECK(brute_winner(c[omega3], {1, Rational(-1, 10)}) == Vec2{1, 1});
  CHECK(brute_winner(c[omega1], {1, Rational(-1, 2)}) == Vec2{Rational(3, 2), 2});
  CHECK_THROWS_AS(brute_winner(c[omega4], {1, Rational(-9, 2)}, Rational(1, 2)), Error);
}

TEST_CASE("brute winner agrees with region labels") {
  const auto& tr = ten();
  for (std::size_t i = 0; i < tr.components.size(); ++i) {
    std::vector<WinnerRegion> mine;
    for (const auto& r : tr.regions)
      if (r.component == static_cast<int>(i)) mine.push_back(r);
    BruteWinner brute(tr.components[i]);
    int mismatches = 0;
    for (const auto& p : random_interior_points(tr.components[i], mine, 200, 100 + i))
      if (!(brute(p) == locate(mine, p)->winner)) ++mismatches;
    CHECK(mismatches == 0);
  }
}

TEST_CASE("Hall reference values") {
  CHECK(hall_reference(1).pdf == 0);
  CHECK(static_cast<double>(hall_reference(std::numbers::e_v<ld>).pdf) ==
        doctest::Approx(2 / (std::numbers::e * std::numbers::e)).epsilon(1e-15));
  CHECK(static_cast<double>(hall_reference(1e15L).cdf) == doctest::Approx(1).epsilon(1e-12));
  // The cdf is continuous at 4 and its derivative is the pdf.
  CHECK(static_cast<double>(std::abs(hall_reference(4 - 1e-15L).cdf - hall_reference(4 + 1e-15L).cdf)) < 1e-7);
  for (ld t : {1.5L, 3.0L, 5.0L, 20.0L}) {
    ld h = 1e-5L;
    ld fd = (hall_reference(t + h).cdf - hall_reference(t - h).cdf) / (2 * h);
    CHECK(static_cast<double>(std::abs(fd - hall_reference(t).pdf)) < 1e-8);
  }
}

TEST_CASE("one-sided derivative anchors of the Hall density") {
  const RealFunction f = hall_pdf;
  auto l1 = one_sided_derivative(f, 1, -1, 1e-3L);
  auto r1 = one_sided_derivative(f, 1, +1, 1e-3L);
  auto l4 = one_sided_derivative(f, 4, -1, 4e-3L);
  auto r4 = one_sided_derivative(f, 4, +1, 4e-3L);
  CHECK_FALSE(l1.divergent);
  CHECK(static_cast<double>(std::abs(l1.value)) < 1e-6);
  CHECK_FALSE(r1.divergent);
  CHECK(static_cast<double>(std::abs(r1.value - 2)) < 1e-6);
  CHECK_FALSE(l4.divergent);
  CHECK(static_cast<double>(std::abs(l4.value - (1 - 4 * std::log(2.0L)) / 32)) < 1e-6);
  CHECK(r4.divergent);
  CHECK(std::isinf(r4.value));
  CHECK(r4.value < 0);
}

TEST_CASE("Hall signature") {
  auto hall = hall_signature(hall_pdf, {1, 4});
  CHECK(hall.nonsmooth_set == std::vector<Rational>{1, 4});
  CHECK(hall.closure_ok);

  auto sum = hall_signature([](ld t) { return hall_pdf(t) + hall_pdf(t / 4) / 4; }, {1, 4, 16});
  CHECK(sum.nonsmooth_set == std::vector<Rational>{1, 4, 16});
  CHECK(sum.closure_ok);

  // Finite sums of scaled Hall densities with scales in {1/4, ..., 8}.
  const std::vector<Rational> scales = {Rational(1, 4), Rational(1, 2), 1, Rational(3, 2), 2, 3, 4, 8};
  for (std::size_t i = 0; i < scales.size(); ++i)
    for (std::size_t j = i + 1; j < scales.size(); ++j) {
      Rational a = scales[i], b = scales[j];
      ld ta = to_ld(a), tb = to_ld(b);
      auto f = [=](ld t) { return hall_pdf(t / ta) / ta + 2 * hall_pdf(t / tb) / tb; };
      auto s = hall_signature(f, {a, a * 4, b, b * 4});
      CHECK(s.closure_ok);
      for (const auto& c : s.classes)
        if (c.tau == a || c.tau == b) CHECK_FALSE(c.smooth);
    }

  auto ten_sig = hall_signature(total_pdf(ten()));
  CHECK_FALSE(ten_sig.closure_ok);
  REQUIRE(ten_sig.witness.has_value());
  CHECK(*ten_sig.witness == Rational(16, 3));
  auto has = [&](Rational r) {
    return std::find(ten_sig.nonsmooth_set.begin(), ten_sig.nonsmooth_set.end(), r) != ten_sig.nonsmooth_set.end();
  };
  CHECK(has(Rational(16, 3)));
  CHECK_FALSE(has(Rational(4, 3)));
  CHECK_FALSE(has(Rational(64, 3)));
}

TEST_CASE("gap samples") {
  GapSample g = empirical_gaps(Origami(), 50);
  CHECK(g.gaps.size() + 1 == g.slope_count);
  CHECK(std::is_sorted(g.gaps.begin(), g.gaps.end()));
  CHECK(g.gaps.front() >= 1);  // Farey neighbours p/q, r/s satisfy R^2 / (q s) >= 1
  for (double x : g.gaps) CHECK(x >= 0);

  CHECK(empirical_gaps(Origami::parse(fixtures::ten_tile), 60).gaps == congruence_gaps_10tile(60).gaps);
}

TEST_CASE("congruence slopes match direct enumeration for every small bound") {
  const Origami ten_o = Origami::parse(fixtures::ten_tile);
  for (std::int64_t R = 2; R <= 100; ++R) CHECK(same_slopes(holonomy_slopes(ten_o, R), congruence_slopes_10tile(R)));
}

TEST_CASE("KS distance") {
  GapSample s;
  s.gaps = {1, 2, 2, 3};
  auto uniform = [](ld t) { return std::clamp<ld>(t / 4, 0, 1); };
  CHECK(ks_distance(s, uniform) == doctest::Approx(0.25));

  auto cdf = [](ld t) { return hall_reference(t).cdf; };
  GapSample synthetic = sample_from_cdf(cdf, 100000, 42);
  CHECK(ks_distance(synthetic, cdf) <= 0.006);

  auto ten_p = total_pdf(ten());
  GapSample ten_synthetic = sample_from_cdf([&](ld t) { return ten_p.cdf(t); }, 20000, 43);
  CHECK(ks_distance(ten_synthetic, ten_p) <= 0.0122);  // 1.73 / sqrt(n): 99.9% Kolmogorov quantile
}
