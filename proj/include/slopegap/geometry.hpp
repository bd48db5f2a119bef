#pragma once

#include "slopegap/rational.hpp"

#include <vector>

namespace slopegap {

using Point = Vec2;  // (a, b)
using Polygon = std::vector<Point>;

// alpha * a + beta * b + gamma >= 0
struct HalfPlane {
  Rational alpha, beta, gamma;
  Rational eval(const Point& p) const { return alpha * p.x + beta * p.y + gamma; }
};

Rational signed_area(const Polygon& poly);
// Clip a convex polygon; collinear and repeated vertices are dropped from the result.
Polygon clip(const Polygon& poly, const HalfPlane& h);
Polygon simplify(const Polygon& poly);
// Closed containment; `strict` excludes the boundary.
bool contains(const Polygon& poly, const Point& p, bool strict = false);

}  // namespace slopegap
