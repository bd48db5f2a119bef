#include "slopegap/geometry.hpp"

namespace slopegap {

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Rational signed_area(const Polygon& poly) {
  Rational twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2;
}

Polygon simplify(const Polygon& poly) {
  Polygon pts;
  for (const auto& p : poly)
    if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
  while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point& prev = pts[(i + pts.size() - 1) % pts.size()];
      const Point& next = pts[(i + 1) % pts.size()];
      if (cross(prev, pts[i], next) == 0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (pts.size() < 3) return {};
  return pts;
}

Polygon clip(const Polygon& poly, const HalfPlane& h) {
  Polygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    Rational fp = h.eval(p), fq = h.eval(q);
    if (fp >= 0) out.push_back(p);
    if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
      Rational s = fp / (fp - fq);
      out.push_back({p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)});
    }
  }
  return simplify(out);
}

bool contains(const Polygon& poly, const Point& p, bool strict) {
  if (poly.size() < 3) return false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Rational c = cross(poly[i], poly[(i + 1) % poly.size()], p);
    if (c < 0 || (strict && c == 0)) return false;
  }
  return true;
}

}  // namespace slopegap
