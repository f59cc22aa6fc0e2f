#include "affhecke/report.hpp"

#include <algorithm>
#include <sstream>

#include "affhecke/error.hpp"

namespace affhecke::report {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "table") return Format::table;
  throw DomainError("unknown output format '" + name + "'");
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string emit(const Json& j, Format f) {
  if (f == Format::json) return j.dump(2) + "\n";
  if (!j.is_object()) return cell(j) + "\n";
  std::size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  std::ostringstream out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out << it.key() << std::string(width - it.key().size() + 2, ' ') << cell(it.value()) << "\n";
  return out.str();
}

Json rational(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

Json multisegment(const Multisegment& m) {
  Json out = Json::array();
  std::vector<Segment> order;
  for (const auto& [s, k] : m.mults()) order.push_back(s);
  std::sort(order.begin(), order.end(), segment_less);
  for (const Segment& s : order) out.push_back({{"i", s.i}, {"j", s.j}, {"mult", m.mult(s)}});
  return out;
}

Json expansion(const DualExpansion& e) {
  Json out = Json::array();
  for (const auto& [m, c] : e)
    out.push_back({{"multisegment", multisegment(m)}, {"text", m.to_string()}, {"coeff", rational(c)}});
  return out;
}

Json kmatrix(const KMatrix& K) {
  Json index = Json::array();
  for (const auto& m : K.index) index.push_back(m.to_string());
  Json rows = Json::array();
  for (const auto& r : K.entries) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x.to_string());
    rows.push_back(row);
  }
  return {{"weight", weight_to_string(K.weight)}, {"index", index}, {"entries", rows}};
}

Json hook_verdict(const Partition& lambda, const std::vector<int>& points, const HookVerdict& v) {
  Json viol = Json::array();
  for (const auto& w : v.violations) viol.push_back({w.a_first, w.a_second, w.hook});
  return {{"lambda", lambda.to_string()}, {"points", points}, {"simple", v.simple}, {"violations", viol}};
}

namespace {

Json singularity_list(const std::vector<Singularity>& xs) {
  Json out = Json::array();
  for (const auto& s : xs) {
    Json e = {{"value", rational(s.value)}};
    e["u_exponent"] = s.u_exponent ? rational(*s.u_exponent) : Json(nullptr);
    out.push_back(e);
  }
  return out;
}

}  // namespace

Json singularities(const SingularityReport& r) {
  Json degenerate = Json::array();
  for (const auto& x : r.degenerate_samples) degenerate.push_back(rational(x));
  return {{"lambda", r.lambda.to_string()},
          {"N", r.params.N},
          {"v", rational(r.params.v)},
          {"u", rational(r.params.u())},
          {"normalization", r.normalization},
          {"degree_bound", r.degree_bound},
          {"fit_points", r.fit_points},
          {"held_out_points", r.held_out_points},
          {"held_out_ok", r.held_out_ok},
          {"degenerate_samples", degenerate},
          {"poles", singularity_list(r.poles)},
          {"zeros", singularity_list(r.zeros)},
          {"unmatched", r.unmatched},
          {"det", r.det.to_string("z")},
          {"contained", r.contained}};
}

}  // namespace affhecke::report
