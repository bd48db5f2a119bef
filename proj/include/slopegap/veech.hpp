#pragma once

#include "slopegap/origami.hpp"
#include "slopegap/sl2z.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace slopegap {

inline constexpr std::size_t default_orbit_cap = 1'000'000;

struct OrbitGraph {
  std::vector<Origami> vertices;  // canonical forms, BFS discovery order
  std::vector<int> s_edges;
  std::vector<int> t_edges;
  int base = 0;

  int index() const { return static_cast<int>(vertices.size()); }
};

OrbitGraph orbit_graph(const Origami& o, std::size_t cap = default_orbit_cap);

struct CuspDatum {
  Word word;               // C with cusp_relative = C^-1 * base
  int width = 1;           // T-cycle length
  Origami cusp_relative;   // canonical
  std::int64_t scaling_d = 1;
  int vertex = 0;          // orbit vertex of cusp_relative
  std::vector<int> cycle;  // T-cycle starting at vertex
};

// One datum per T-cycle. Inside a cycle the representative is the member that is
// isomorphic to its horizontal mirror image, then the one with the smallest positive
// offset of its lowest holonomy vector, then the first reached by the word search.
std::vector<CuspDatum> cusp_data(const OrbitGraph& g);

bool contains_minus_identity(const Origami& o);

Mat2 parabolic_generator(const CuspDatum& c);
std::vector<Mat2> parabolic_generators(const std::vector<CuspDatum>& cusps);

// Smallest k >= 1 with T^k o isomorphic to o.
int t_period(const Origami& o, std::size_t cap = default_orbit_cap);

// Shortest horizontal holonomy length (1 on cone-free surfaces).
std::int64_t horizontal_scaling(const Origami& o);

// Lowest holonomy vector above the horizontal: minimal y >= 1, then minimal x > 0 at that
// height. `width` is a T-period of o, which bounds the search at each height.
LatticeVector lowest_holonomy(const Origami& o, int width);

// Cusp width of the primitive direction (p, q) on o: the T-period of M^-1 o, where M in
// SL(2,Z) has first column (p, q).
int direction_width(const Origami& o, std::int64_t p, std::int64_t q, std::size_t cap = default_orbit_cap);

}  // namespace slopegap
