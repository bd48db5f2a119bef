#include "slopegap/veech.hpp"

#include "slopegap/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace slopegap {

OrbitGraph orbit_graph(const Origami& o, std::size_t cap) {
  OrbitGraph g;
  std::map<Origami, int> index;
  auto intern = [&](const Origami& x) {
    Origami c = canonical_form(x);
    auto it = index.find(c);
    if (it != index.end()) return it->second;
    if (g.vertices.size() >= cap)
      throw Error(ErrorKind::OrbitTooLarge, "orbit exceeds " + std::to_string(cap) + " vertices");
    int id = static_cast<int>(g.vertices.size());
    index.emplace(c, id);
    g.vertices.push_back(std::move(c));
    return id;
  };
  g.base = intern(o);
  for (std::size_t head = 0; head < g.vertices.size(); ++head) {
    Origami v = g.vertices[head];
    int s = intern(act_S(v));
    int t = intern(act_T(v));
    g.s_edges.push_back(s);
    g.t_edges.push_back(t);
  }
  return g;
}

LatticeVector lowest_holonomy(const Origami& o, int width) {
  HolonomyTester hol(o);
  for (std::int64_t y = 1;; ++y) {
    // T^width fixes o, so holonomy at height y repeats with period width * y in x.
    for (std::int64_t x = 1; x <= width * y; ++x)
      if (hol(x, y)) return {x, y};
    if (y > static_cast<std::int64_t>(o.size()) * 4 + 4)
      throw Error(ErrorKind::CandidateSearchExhausted, "no holonomy vector found above the horizontal");
  }
}

std::int64_t horizontal_scaling(const Origami& o) {
  HolonomyTester hol(o);
  for (std::int64_t x = 1; x <= o.size(); ++x)
    if (hol(x, 0)) return x;
  throw Error(ErrorKind::CandidateSearchExhausted, "no horizontal holonomy vector");
}

std::vector<CuspDatum> cusp_data(const OrbitGraph& g) {
  const int n = g.index();
  std::vector<std::vector<int>> t_pre(static_cast<std::size_t>(n)), s_pre(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    t_pre[static_cast<std::size_t>(g.t_edges[static_cast<std::size_t>(v)])].push_back(v);
    s_pre[static_cast<std::size_t>(g.s_edges[static_cast<std::size_t>(v)])].push_back(v);
  }
  // Words along inverse edges: stepping v -> T^-1 v appends T, so vertex = word^-1 * base.
  std::vector<Word> word(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> queue{g.base};
  order[static_cast<std::size_t>(g.base)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (auto [pre, letter] : {std::pair{&t_pre, Letter::T}, std::pair{&s_pre, Letter::S}}) {
      for (int w : (*pre)[static_cast<std::size_t>(v)]) {
        if (order[static_cast<std::size_t>(w)] >= 0) continue;
        order[static_cast<std::size_t>(w)] = static_cast<int>(queue.size());
        word[static_cast<std::size_t>(w)] = word[static_cast<std::size_t>(v)];
        word[static_cast<std::size_t>(w)].push_back(letter);
        queue.push_back(w);
      }
    }
  }

  std::vector<CuspDatum> out;
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int v0 : queue) {
    if (done[static_cast<std::size_t>(v0)]) continue;
    std::vector<int> cycle;
    for (int v = v0; !done[static_cast<std::size_t>(v)]; v = g.t_edges[static_cast<std::size_t>(v)]) {
      done[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    const int width = static_cast<int>(cycle.size());
    std::tuple<int, std::int64_t, int> best_key{2, 0, 0};
    int best = -1;
    for (int v : cycle) {
      const Origami& x = g.vertices[static_cast<std::size_t>(v)];
      int asymmetric = canonical_form(mirror_horizontal(x)) == x ? 0 : 1;
      std::int64_t offset = lowest_holonomy(x, width).x;
      std::tuple<int, std::int64_t, int> key{asymmetric, offset, order[static_cast<std::size_t>(v)]};
      if (best < 0 || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    auto pos = std::find(cycle.begin(), cycle.end(), best);
    std::rotate(cycle.begin(), pos, cycle.end());
    CuspDatum c;
    c.word = word[static_cast<std::size_t>(best)];
    c.width = width;
    c.cusp_relative = g.vertices[static_cast<std::size_t>(best)];
    c.scaling_d = horizontal_scaling(c.cusp_relative);
    c.vertex = best;
    c.cycle = std::move(cycle);
    out.push_back(std::move(c));
  }
  return out;
}

bool contains_minus_identity(const Origami& o) { return isomorphic(act_S(act_S(o)), o); }

Mat2 parabolic_generator(const CuspDatum& c) {
  Mat2 w = to_matrix(c.word);
  Mat2 tw = to_matrix(power(Letter::T, c.width));
  return w * tw * w.inverse();
}

std::vector<Mat2> parabolic_generators(const std::vector<CuspDatum>& cusps) {
  std::vector<Mat2> out;
  out.reserve(cusps.size());
  for (const auto& c : cusps) out.push_back(parabolic_generator(c));
  return out;
}

int t_period(const Origami& o, std::size_t cap) {
  const Origami start = canonical_form(o);
  Origami cur = o;
  for (std::size_t k = 1; k <= cap; ++k) {
    cur = act_T(cur);
    if (canonical_form(cur) == start) return static_cast<int>(k);
  }
  throw Error(ErrorKind::NotCertifiable, "T-period exceeds cap");
}

int direction_width(const Origami& o, std::int64_t p, std::int64_t q, std::size_t cap) {
  Mat2 m = complete_column(p, q);
  return t_period(act_word(o, decompose(m.inverse())), cap);
}

}  // namespace slopegap
