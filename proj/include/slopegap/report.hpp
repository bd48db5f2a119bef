#pragma once

#include "slopegap/gap_distribution.hpp"
#include "slopegap/transversal.hpp"
#include "slopegap/verify.hpp"
#include "slopegap/veech.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace slopegap {

using Json = nlohmann::ordered_json;

struct AnalysisReport {
  Origami origami;  // canonical
  OrbitGraph orbit;
  std::vector<CuspDatum> cusps;
  Transversal transversal;
  std::shared_ptr<PiecewisePdf> pdf;
  CovolumeResult covolume;
  HallSignature signature;
};

// Full pipeline. Throws UnsupportedSurface when -I is not in the Veech group.
AnalysisReport analyze(const Origami& o, std::size_t orbit_cap = default_orbit_cap);

// Decimal with 15 significant digits, as a JSON number.
Json decimal(long double v);
std::string format_decimal(long double v);

Json to_json(const Rational& q);
Json to_json(const Vec2& v);
Json to_json(const CuspDatum& c);
Json to_json(const SectionComponent& c, const std::vector<EdgeInterval>& partition,
             const std::vector<WinnerRegion>& regions);
Json to_json(const HallSignature& s);
Json to_json(const Piece& p, const std::vector<RegionEvaluator>& regions);
Json to_json(const AnalysisReport& r);
Json to_json(const CheckResult& c);

// Graphviz text with S and T edge labels.
std::string orbit_dot(const OrbitGraph& g);
Json orbit_json(const OrbitGraph& g);

}  // namespace slopegap
