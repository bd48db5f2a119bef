#include "slopegap/report.hpp"

#include "slopegap/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace slopegap {

std::string format_decimal(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", v);
  return buf;
}

Json decimal(long double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return std::stod(format_decimal(v));
}

AnalysisReport analyze(const Origami& o, std::size_t orbit_cap) {
  AnalysisReport r;
  r.origami = canonical_form(o);
  if (!contains_minus_identity(r.origami))
    throw Error(ErrorKind::UnsupportedSurface, "-I is not in the Veech group of " + r.origami.to_string());
  r.orbit = orbit_graph(r.origami, orbit_cap);
  r.cusps = cusp_data(r.orbit);
  r.transversal = build_transversal(r.cusps);
  r.pdf = std::make_shared<PiecewisePdf>(total_pdf(r.transversal));
  r.covolume = covolume(r.transversal.regions);
  r.signature = hall_signature(*r.pdf);
  return r;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vec2& v) { return Json::array({to_string(v.x), to_string(v.y)}); }

Json to_json(const CuspDatum& c) {
  Mat2 p = parabolic_generator(c);
  Json j;
  j["word"] = to_string(c.word);
  j["width"] = c.width;
  j["scaling_d"] = c.scaling_d;
  j["cusp_relative"] = c.cusp_relative.to_string();
  j["parabolic"] = Json::array({Json::array({p.a, p.b}), Json::array({p.c, p.d})});
  return j;
}

Json to_json(const SectionComponent& c, const std::vector<EdgeInterval>& partition,
             const std::vector<WinnerRegion>& regions) {
  Json j;
  j["word"] = to_string(c.cusp.word);
  j["scaling_d"] = c.d;
  j["x0"] = to_json(c.x0);
  j["y0"] = to_json(c.y0);
  j["alpha_eff"] = to_json(c.alpha_eff);
  Json tri = Json::array();
  for (const auto& p : c.triangle) tri.push_back(to_json(p));
  j["triangle"] = tri;
  Json ivs = Json::array();
  for (const auto& iv : partition) {
    bool starred = false;
    for (const auto& s : iv.transcript) starred = starred || s.certificate.has_value();
    ivs.push_back({{"b_lo", to_json(iv.b_lo)},
                   {"b_hi", to_json(iv.b_hi)},
                   {"winner", to_json(iv.winner)},
                   {"certified_unbounded", starred}});
  }
  j["intervals"] = ivs;
  Json regs = Json::array();
  for (const auto& r : regions) {
    Json poly = Json::array();
    for (const auto& p : r.polygon) poly.push_back(to_json(p));
    regs.push_back({{"winner", to_json(r.winner)}, {"area", to_json(signed_area(r.polygon))}, {"vertices", poly}});
  }
  j["regions"] = regs;
  return j;
}

Json to_json(const HallSignature& s) {
  Json j;
  Json set = Json::array();
  for (const auto& t : s.nonsmooth_set) set.push_back(to_json(t));
  j["nonsmooth_set"] = set;
  j["closure_ok"] = s.closure_ok;
  j["witness"] = s.witness ? to_json(*s.witness) : Json(nullptr);
  Json cls = Json::array();
  for (const auto& c : s.classes)
    cls.push_back({{"t", to_json(c.tau)},
                   {"left_derivative", decimal(c.left.value)},
                   {"right_derivative", decimal(c.right.value)},
                   {"smooth", c.smooth}});
  j["breakpoints"] = cls;
  return j;
}

Json to_json(const Piece& p, const std::vector<RegionEvaluator>& regions) {
  Json j;
  j["t_lo"] = to_json(p.t_lo);
  j["t_hi"] = p.t_hi ? to_json(*p.t_hi) : Json("inf");
  Json parts = Json::array();
  for (const auto& part : p.parts) {
    Json ivs = Json::array();
    for (const auto& iv : part.intervals) ivs.push_back({{"entry", iv.entry.describe()}, {"exit", iv.exit.describe()}});
    parts.push_back({{"region", part.region},
                     {"winner", to_json(regions[static_cast<std::size_t>(part.region)].region().winner)},
                     {"intervals", ivs}});
  }
  j["terms"] = parts;
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["origami"] = r.origami.to_string();
  j["index"] = r.orbit.index();
  j["genus"] = genus(r.origami);
  Json cones = Json::array();
  for (const auto& c : cone_points(r.origami)) cones.push_back(c.angle_turns);
  j["cone_angles"] = cones;
  Json cusps = Json::array();
  for (const auto& c : r.cusps) cusps.push_back(to_json(c));
  j["cusps"] = cusps;
  Json comps = Json::array();
  const auto& tr = r.transversal;
  for (std::size_t i = 0; i < tr.components.size(); ++i) {
    std::vector<WinnerRegion> mine;
    for (const auto& reg : tr.regions)
      if (reg.component == static_cast<int>(i)) mine.push_back(reg);
    comps.push_back(to_json(tr.components[i], tr.partitions[i], mine));
  }
  j["components"] = comps;
  j["total_area"] = to_json(tr.total_area);
  Json bps = Json::array();
  for (const auto& b : r.pdf->breakpoints()) bps.push_back(to_json(b));
  j["breakpoints"] = bps;
  j["covolume"] = decimal(r.covolume.value);
  j["hall_signature"] = to_json(r.signature);
  return j;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["check"] = c.check;
  j["status"] = c.pass ? "pass" : "fail";
  j["metric"] = decimal(c.metric);
  j["threshold"] = c.threshold ? decimal(*c.threshold) : Json(nullptr);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

std::string orbit_dot(const OrbitGraph& g) {
  std::ostringstream os;
  os << "digraph orbit {\n";
  for (int v = 0; v < g.index(); ++v)
    os << "  " << v + 1 << " [label=\"" << g.vertices[static_cast<std::size_t>(v)].to_string() << "\"];\n";
  for (int v = 0; v < g.index(); ++v) {
    os << "  " << v + 1 << " -> " << g.s_edges[static_cast<std::size_t>(v)] + 1 << " [label=\"S\"];\n";
    os << "  " << v + 1 << " -> " << g.t_edges[static_cast<std::size_t>(v)] + 1 << " [label=\"T\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json orbit_json(const OrbitGraph& g) {
  Json j;
  j["index"] = g.index();
  j["base"] = g.base + 1;
  Json vs = Json::array();
  for (int v = 0; v < g.index(); ++v)
    vs.push_back({{"id", v + 1},
                  {"origami", g.vertices[static_cast<std::size_t>(v)].to_string()},
                  {"S", g.s_edges[static_cast<std::size_t>(v)] + 1},
                  {"T", g.t_edges[static_cast<std::size_t>(v)] + 1}});
  j["vertices"] = vs;
  Json cusps = Json::array();
  for (const auto& c : cusp_data(g)) cusps.push_back(to_json(c));
  j["cusps"] = cusps;
  return j;
}

}  // namespace slopegap
