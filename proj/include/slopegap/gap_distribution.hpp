#pragma once

#include "slopegap/transversal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slopegap {

// Return time on a region is t(a, b) = y / (a (a x + b y)); its level set at time t is the
// hyperbola b = 1/(a t) - (x/y) a.
std::vector<Rational> region_breakpoints(const WinnerRegion& r);

// Straight line b = m a + c over a span of a.
struct EdgeLine {
  Rational m, c;
};

// Endpoint of an a-interval where the level hyperbola lies inside a region. Either a fixed
// vertex abscissa, or a root of K a^2 + c a - 1/t = 0 with K = m + x/y of a boundary edge.
struct Endpoint {
  enum class Kind { Vertex, Root } kind = Kind::Vertex;
  Rational a;       // Vertex
  Rational K, c;    // Root
  int branch = 0;   // Root: sign in (-c +- sqrt(c^2 + 4K/t)) / 2K, 0 when K = 0
  bool upper = false;

  std::optional<long double> eval(long double t) const;
  std::string describe() const;
};

struct ActiveInterval {
  Endpoint entry, exit;
};

// Precomputed vertical slabs of one region.
class RegionEvaluator {
 public:
  explicit RegionEvaluator(const WinnerRegion& r);

  long double pdf(long double t) const;          // dA/dt
  long double swept_area(long double t) const;   // area where b >= level hyperbola
  std::vector<ActiveInterval> active(long double t) const;
  const WinnerRegion& region() const { return region_; }
  Rational area() const { return area_; }

 private:
  struct Span {
    Rational a_lo, a_hi;
    EdgeLine lower, upper;
    long double lo, hi, ml, cl, mu, cu, kl, ku;
  };
  struct Cut {
    long double a;
    Endpoint end;
  };
  std::vector<Cut> cuts(const Span& s, long double t) const;
  static bool inside(const Span& s, long double a, long double t);

  WinnerRegion region_;
  Rational area_;
  long double slope_;  // x / y
  Rational slope_exact_;
  std::vector<Span> spans_;
};

long double region_pdf_eval(const WinnerRegion& r, long double t);

// Frozen combinatorics of one open interval between breakpoints.
struct Piece {
  Rational t_lo;
  std::optional<Rational> t_hi;  // empty for the last, unbounded piece
  struct RegionPart {
    int region = 0;
    std::vector<ActiveInterval> intervals;
  };
  std::vector<RegionPart> parts;

  // Analytic continuation of the frozen expression; empty where a root is not real.
  std::optional<long double> eval(long double t, long double total_area) const;
};

class PiecewisePdf {
 public:
  PiecewisePdf(std::vector<WinnerRegion> regions, Rational total_area);

  long double pdf(long double t) const;
  long double cdf(long double t) const;
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& candidate_breakpoints() const { return candidates_; }
  Rational total_area() const { return total_area_; }
  const std::vector<RegionEvaluator>& regions() const { return evaluators_; }
  std::vector<Piece> pieces() const;

 private:
  Piece freeze(const Rational& lo, const std::optional<Rational>& hi) const;

  std::vector<RegionEvaluator> evaluators_;
  Rational total_area_;
  std::vector<Rational> candidates_;
  std::vector<Rational> breakpoints_;
};

PiecewisePdf total_pdf(const Transversal& tr);

struct CovolumeResult {
  long double value = 0;
  long double error_estimate = 0;
};

CovolumeResult covolume(const std::vector<WinnerRegion>& regions);

// Integral of the pdf over (0, inf), piecewise between breakpoints.
CovolumeResult integrate_pdf(const PiecewisePdf& p);

}  // namespace slopegap
