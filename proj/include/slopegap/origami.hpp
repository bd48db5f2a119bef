#pragma once

#include "slopegap/rational.hpp"
#include "slopegap/sl2z.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slopegap {

// Tiles are 0-based internally; the text format and all exports are 1-based.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_inverse(const Perm& p);
Perm perm_compose(const Perm& a, const Perm& b);  // x -> a[b[x]]
// One-line form, 1-based images.
Perm perm_from_one_line(const std::vector<int>& images);
// Cycle notation without fixed points, cycles led by their least label.
std::string perm_to_cycles(const Perm& p);

class Origami {
 public:
  // The square torus.
  Origami() : r_{0}, u_{0} {}

  // Pads the shorter permutation with fixed points, then checks connectivity.
  static Origami from_perms(Perm right, Perm up);
  // "(c1)(c2)...|(d1)(d2)..." with comma-separated 1-based labels.
  static Origami parse(std::string_view text);

  int size() const { return static_cast<int>(r_.size()); }
  const Perm& right() const { return r_; }
  const Perm& up() const { return u_; }
  Perm left() const { return perm_inverse(r_); }
  Perm down() const { return perm_inverse(u_); }

  std::string to_string() const;

  friend auto operator<=>(const Origami&, const Origami&) = default;
  friend bool operator==(const Origami&, const Origami&) = default;

 private:
  Origami(Perm r, Perm u) : r_(std::move(r)), u_(std::move(u)) {}
  Perm r_;
  Perm u_;
};

Origami validate(Perm right, Perm up);
Origami relabel(const Origami& o, const Perm& sigma);  // tile t becomes sigma[t]
Origami canonical_form(const Origami& o);
bool isomorphic(const Origami& a, const Origami& b);

Origami act_T(const Origami& o);
Origami act_S(const Origami& o);
Origami act_T_inv(const Origami& o);
Origami act_S_inv(const Origami& o);
Origami act(const Origami& o, Letter l);
// Matrix product w * o: the rightmost letter acts first.
Origami act_word(const Origami& o, const Word& w);

// Reflections across the vertical axis and across the diagonal.
Origami mirror_horizontal(const Origami& o);
Origami mirror_diagonal(const Origami& o);

struct ConePoint {
  std::vector<int> representatives;  // tiles whose lower-left corner is this vertex
  int angle_turns = 1;
};

struct VertexClasses {
  std::vector<int> class_of;       // tile -> class of its lower-left corner
  std::vector<ConePoint> classes;  // all vertices, cone or not
  bool is_cone(int tile) const { return classes[class_of[tile]].angle_turns > 1; }
};

VertexClasses vertex_classes(const Origami& o);
std::vector<ConePoint> cone_points(const Origami& o);
bool has_cone_points(const Origami& o);
int genus(const Origami& o);

enum class TraceStatus { LandedOnConePoint, LandedOnRegularPoint, HitConePoint };

struct TraceRecord {
  TraceStatus status;
  int end_tile;           // tile containing the stop point, as a lower-left corner
  std::int64_t dx, dy;    // displacement travelled before stopping
  Rational end_x, end_y;  // stop point inside end_tile
};

// Straight line from the lower-left corner of start_tile with integer displacement (p, q),
// p > 0, q >= 0. Corners are detected exactly.
TraceRecord trace(const Origami& o, const VertexClasses& vc, int start_tile, std::int64_t p, std::int64_t q);
TraceRecord trace(const Origami& o, int start_tile, std::int64_t p, std::int64_t q);

// Membership in the holonomy set, any octant. Precomputes the reflected frames once.
class HolonomyTester {
 public:
  explicit HolonomyTester(const Origami& o);

  bool operator()(std::int64_t x, std::int64_t y) const;
  bool operator()(const Vec2& v) const;  // integer components required
  bool cone_free() const { return cone_free_; }
  const Origami& origami() const { return upright_.o; }

 private:
  struct Frame {
    Origami o;
    VertexClasses vc;
    std::vector<int> starts;
  };
  static Frame make_frame(const Origami& o);
  static bool test(const Frame& f, std::int64_t x, std::int64_t y);

  Frame upright_;
  Frame flipped_;  // (r, u^-1): y -> -y
  Frame swapped_;  // (u, r): x <-> y
  bool cone_free_;
};

bool is_holonomy(const Origami& o, std::int64_t x, std::int64_t y);

struct LatticeVector {
  std::int64_t x, y;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

// Holonomy vectors with 0 < x, 0 <= y, max(x, y) <= bound and slope y/x in [slope_lo, slope_hi].
// One walk per primitive direction and start corner serves all collinear multiples.
std::vector<LatticeVector> enumerate_holonomy(const Origami& o, std::int64_t bound, Rational slope_lo = 0,
                                              Rational slope_hi = 1);

namespace fixtures {
inline constexpr const char* torus = "(1)|(1)";
inline constexpr const char* three_tile = "(1,2)|(1,3,2)";
inline constexpr const char* four_tile = "(1,2)(3,4)|(2,3)";
inline constexpr const char* ten_tile = "(1,2,3,4,5)(6,7,8,9,10)|(1,9)(2,10)";
}  // namespace fixtures

}  // namespace slopegap
