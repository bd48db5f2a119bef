#include "slopegap/origami.hpp"

#include "slopegap/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>

namespace slopegap {

Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_inverse(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Perm perm_from_one_line(const std::vector<int>& images) {
  Perm p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i] - 1;
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::Parse, "one-line form is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
    p[i] = v;
  }
  return p;
}

std::string perm_to_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  if (out.empty()) out = "(1)";
  return out;
}

namespace {

bool transitive(const Perm& r, const Perm& u) {
  std::vector<bool> seen(r.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int nb : {r[static_cast<std::size_t>(t)], u[static_cast<std::size_t>(t)]}) {
      if (!seen[static_cast<std::size_t>(nb)]) {
        seen[static_cast<std::size_t>(nb)] = true;
        ++count;
        stack.push_back(nb);
      }
    }
  }
  return count == r.size();
}

// Cycles of one side of the text format, 1-based labels.
std::vector<std::vector<int>> parse_cycles(std::string_view s) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') throw Error(ErrorKind::Parse, "expected '(' in '" + std::string(s) + "'");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
      if (i >= s.size()) throw Error(ErrorKind::Parse, "unterminated cycle");
      if (s[i] == ')') {
        ++i;
        break;
      }
      int label = 0;
      auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), label);
      if (ec != std::errc() || ptr == s.data() + i) throw Error(ErrorKind::Parse, "bad tile label");
      if (label < 1) throw Error(ErrorKind::Parse, "tile labels start at 1");
      i = static_cast<std::size_t>(ptr - s.data());
      cycle.push_back(label);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
  Perm p = perm_identity(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto from = static_cast<std::size_t>(c[k] - 1);
      if (used[from]) throw Error(ErrorKind::Parse, "label " + std::to_string(c[k]) + " repeated");
      used[from] = true;
      p[from] = c[(k + 1) % c.size()] - 1;
    }
  }
  return p;
}

}  // namespace

Origami Origami::from_perms(Perm right, Perm up) {
  std::size_t n = std::max(right.size(), up.size());
  if (n == 0) throw Error(ErrorKind::EmptySurface, "no tiles");
  for (Perm* p : {&right, &up}) {
    std::vector<bool> seen(p->size(), false);
    for (int v : *p) {
      if (v < 0 || v >= static_cast<int>(p->size()) || seen[static_cast<std::size_t>(v)])
        throw Error(ErrorKind::Parse, "not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t i = p->size(); i < n; ++i) p->push_back(static_cast<int>(i));
  }
  if (!transitive(right, up)) throw Error(ErrorKind::NonTransitive, "tiles do not form a connected surface");
  return Origami(std::move(right), std::move(up));
}

Origami Origami::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw Error(ErrorKind::Parse, "expected exactly one '|' separating the two permutations");
  auto rc = parse_cycles(text.substr(0, bar));
  auto uc = parse_cycles(text.substr(bar + 1));
  int n = 0;
  for (const auto* cs : {&rc, &uc})
    for (const auto& c : *cs)
      for (int v : c) n = std::max(n, v);
  if (n == 0) throw Error(ErrorKind::EmptySurface, "no tiles");
  return from_perms(perm_from_cycles(rc, n), perm_from_cycles(uc, n));
}

std::string Origami::to_string() const { return perm_to_cycles(r_) + "|" + perm_to_cycles(u_); }

Origami validate(Perm right, Perm up) { return Origami::from_perms(std::move(right), std::move(up)); }

Origami relabel(const Origami& o, const Perm& sigma) {
  Perm r(o.right().size()), u(o.up().size());
  for (std::size_t t = 0; t < r.size(); ++t) {
    r[static_cast<std::size_t>(sigma[t])] = sigma[static_cast<std::size_t>(o.right()[t])];
    u[static_cast<std::size_t>(sigma[t])] = sigma[static_cast<std::size_t>(o.up()[t])];
  }
  return Origami::from_perms(std::move(r), std::move(u));
}

Origami canonical_form(const Origami& o) {
  const int n = o.size();
  const Perm& r = o.right();
  const Perm& u = o.up();
  Perm best_r, best_u;
  Perm label(static_cast<std::size_t>(n));
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    label[static_cast<std::size_t>(start)] = 0;
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head) {
      int t = order[head];
      for (int nb : {r[static_cast<std::size_t>(t)], u[static_cast<std::size_t>(t)]}) {
        if (label[static_cast<std::size_t>(nb)] < 0) {
          label[static_cast<std::size_t>(nb)] = static_cast<int>(order.size());
          order.push_back(nb);
        }
      }
    }
    Perm cr(static_cast<std::size_t>(n)), cu(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      int t = order[static_cast<std::size_t>(k)];
      cr[static_cast<std::size_t>(k)] = label[static_cast<std::size_t>(r[static_cast<std::size_t>(t)])];
      cu[static_cast<std::size_t>(k)] = label[static_cast<std::size_t>(u[static_cast<std::size_t>(t)])];
    }
    if (best_r.empty() || std::tie(cr, cu) < std::tie(best_r, best_u)) {
      best_r = std::move(cr);
      best_u = std::move(cu);
    }
  }
  return Origami::from_perms(std::move(best_r), std::move(best_u));
}

bool isomorphic(const Origami& a, const Origami& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

Origami act_T(const Origami& o) { return Origami::from_perms(o.right(), perm_compose(o.up(), o.left())); }
Origami act_T_inv(const Origami& o) { return Origami::from_perms(o.right(), perm_compose(o.up(), o.right())); }
Origami act_S(const Origami& o) { return Origami::from_perms(o.down(), o.right()); }
Origami act_S_inv(const Origami& o) { return Origami::from_perms(o.up(), o.left()); }

Origami act(const Origami& o, Letter l) {
  switch (l) {
    case Letter::S: return act_S(o);
    case Letter::SInv: return act_S_inv(o);
    case Letter::T: return act_T(o);
    case Letter::TInv: return act_T_inv(o);
  }
  return o;
}

Origami act_word(const Origami& o, const Word& w) {
  Origami cur = o;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act(cur, *it);
  return cur;
}

Origami mirror_horizontal(const Origami& o) { return Origami::from_perms(o.left(), o.up()); }
Origami mirror_diagonal(const Origami& o) { return Origami::from_perms(o.up(), o.right()); }

VertexClasses vertex_classes(const Origami& o) {
  const int n = o.size();
  const Perm l = o.left();
  const Perm d = o.down();
  const Perm& r = o.right();
  const Perm& u = o.up();
  // Going once around a lower-left corner: left, down, right, up.
  auto around = [&](int t) {
    auto s = [](int v) { return static_cast<std::size_t>(v); };
    return u[s(r[s(d[s(l[s(t)])])])];
  };
  VertexClasses vc;
  vc.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int t = 0; t < n; ++t) {
    if (vc.class_of[static_cast<std::size_t>(t)] >= 0) continue;
    ConePoint cp;
    int cur = t;
    do {
      vc.class_of[static_cast<std::size_t>(cur)] = static_cast<int>(vc.classes.size());
      cp.representatives.push_back(cur);
      cur = around(cur);
    } while (cur != t);
    std::sort(cp.representatives.begin(), cp.representatives.end());
    cp.angle_turns = static_cast<int>(cp.representatives.size());
    vc.classes.push_back(std::move(cp));
  }
  return vc;
}

std::vector<ConePoint> cone_points(const Origami& o) {
  std::vector<ConePoint> out;
  for (auto& c : vertex_classes(o).classes)
    if (c.angle_turns > 1) out.push_back(std::move(c));
  return out;
}

bool has_cone_points(const Origami& o) { return !cone_points(o).empty(); }

int genus(const Origami& o) {
  // V - E + F = 2 - 2g with F = n, E = 2n.
  auto v = static_cast<int>(vertex_classes(o).classes.size());
  return (2 - v + o.size()) / 2;
}

TraceRecord trace(const Origami& o, const VertexClasses& vc, int start_tile, std::int64_t p, std::int64_t q) {
  const Perm& r = o.right();
  const Perm& u = o.up();
  auto s = [](int v) { return static_cast<std::size_t>(v); };
  int t = start_tile;
  if (q == 0) {
    for (std::int64_t i = 1; i <= p; ++i) {
      int next = r[s(t)];
      bool cone = vc.is_cone(next);
      if (i == p) return {cone ? TraceStatus::LandedOnConePoint : TraceStatus::LandedOnRegularPoint, next, p, 0, 0, 0};
      if (cone) return {TraceStatus::HitConePoint, next, i, 0, 0, 0};
      t = next;
    }
  }
  // Crossings of vertical edges happen at parameter i/p, of horizontal edges at j/q.
  std::int64_t i = 1, j = 1;
  for (;;) {
    __int128 lhs = static_cast<__int128>(i) * q;
    __int128 rhs = static_cast<__int128>(j) * p;
    if (lhs == rhs) {
      int next = u[s(r[s(t)])];
      bool cone = vc.is_cone(next);
      if (i == p) return {cone ? TraceStatus::LandedOnConePoint : TraceStatus::LandedOnRegularPoint, next, p, q, 0, 0};
      if (cone) return {TraceStatus::HitConePoint, next, i, j, 0, 0};
      t = next;
      ++i;
      ++j;
    } else if (lhs < rhs) {
      t = r[s(t)];
      ++i;
    } else {
      t = u[s(t)];
      ++j;
    }
  }
}

TraceRecord trace(const Origami& o, int start_tile, std::int64_t p, std::int64_t q) {
  return trace(o, vertex_classes(o), start_tile, p, q);
}

HolonomyTester::Frame HolonomyTester::make_frame(const Origami& o) {
  Frame f{o, vertex_classes(o), {}};
  for (int t = 0; t < o.size(); ++t)
    if (f.vc.is_cone(t)) f.starts.push_back(t);
  return f;
}

HolonomyTester::HolonomyTester(const Origami& o)
    : upright_(make_frame(o)),
      flipped_(make_frame(Origami::from_perms(o.right(), o.down()))),
      swapped_(make_frame(mirror_diagonal(o))),
      cone_free_(upright_.starts.empty()) {}

bool HolonomyTester::test(const Frame& f, std::int64_t x, std::int64_t y) {
  for (int start : f.starts)
    if (trace(f.o, f.vc, start, x, y).status == TraceStatus::LandedOnConePoint) return true;
  return false;
}

bool HolonomyTester::operator()(std::int64_t x, std::int64_t y) const {
  if (x == 0 && y == 0) return false;
  if (cone_free_) return true;
  if (x < 0 || (x == 0 && y < 0)) {
    x = -x;
    y = -y;
  }
  if (x == 0) return test(swapped_, y, 0);
  if (y < 0) return test(flipped_, x, -y);
  return test(upright_, x, y);
}

bool HolonomyTester::operator()(const Vec2& v) const {
  if (v.x.denominator() != 1 || v.y.denominator() != 1) return false;
  return (*this)(v.x.numerator(), v.y.numerator());
}

bool is_holonomy(const Origami& o, std::int64_t x, std::int64_t y) { return HolonomyTester(o)(x, y); }

std::vector<LatticeVector> enumerate_holonomy(const Origami& o, std::int64_t bound, Rational slope_lo,
                                              Rational slope_hi) {
  if (bound < 1) return {};
  if (slope_lo < 0) slope_lo = 0;
  const VertexClasses vc = vertex_classes(o);
  std::vector<int> starts;
  for (int t = 0; t < o.size(); ++t)
    if (vc.is_cone(t)) starts.push_back(t);

  std::vector<LatticeVector> out;
  for (std::int64_t p = 1; p <= bound; ++p) {
    std::int64_t q_lo = ceil(slope_lo * Rational(p));
    std::int64_t q_hi = std::min(bound, floor(slope_hi * Rational(p)));
    for (std::int64_t q = q_lo; q <= q_hi; ++q) {
      if (std::gcd(p, q) != 1) continue;
      std::int64_t kmax = bound / std::max(p, q);
      if (starts.empty()) {
        for (std::int64_t k = 1; k <= kmax; ++k) out.push_back({k * p, k * q});
        continue;
      }
      std::set<std::int64_t> ks;
      for (int start : starts) {
        int t = start;
        for (std::int64_t k = 1; k <= kmax; ++k) {
          TraceRecord rec = trace(o, vc, t, p, q);
          if (rec.status == TraceStatus::LandedOnConePoint) {
            ks.insert(k);
            break;
          }
          t = rec.end_tile;
        }
      }
      for (std::int64_t k : ks) out.push_back({k * p, k * q});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace slopegap
