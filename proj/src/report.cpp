#include "kstab/report.hpp"

namespace kstab {

namespace {

Json samples_json(const std::vector<std::pair<std::int64_t, Rational>>& samples) {
  Json out = Json::array();
  for (const auto& [g, f] : samples) out.push_back({{"gamma", g}, {"futaki", to_json(f)}});
  return out;
}

Json rationals(const std::vector<Rational>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const LatticeVector& v) { return std::vector<std::int64_t>(v.begin(), v.end()); }

Json to_json(const PointSupport& q) {
  Json support = Json::array();
  for (const auto& u : q.support) support.push_back(to_json(u));
  return {{"level", q.level}, {"support", support}};
}

Json to_json(const ToricTestConfig& tc) {
  Json vertices = Json::array(), pieces = Json::array();
  for (const auto& v : tc.polytope().vertices()) vertices.push_back(to_json(v));
  for (const auto& p : tc.function().pieces()) {
    Json row = to_json(p.linear);
    row.push_back(p.constant);
    pieces.push_back(row);
  }
  return {{"dimension", tc.dim()}, {"vertices", vertices}, {"pl_pieces", pieces}};
}

Json to_json(const DFReport& r) {
  return {{"futaki", to_json(r.futaki)},
          {"futaki_laurent", to_json(r.futaki_laurent)},
          {"futaki_oracle", to_json(r.futaki_oracle)},
          {"a0", to_json(r.a0)},
          {"a1", to_json(r.a1)},
          {"b0", to_json(r.b0)},
          {"b1", to_json(r.b1)},
          {"is_product", r.is_product},
          {"is_trivial", r.is_trivial},
          {"period", r.period},
          {"verdict", std::string(to_string(r.verdict))}};
}

Json to_json(const ChowWeightReport& r) {
  Json spec = Json::array();
  for (const auto& u : r.specialization_support) spec.push_back(to_json(u));
  return {{"level", r.level},
          {"hm_weight", r.hm_weight_raw},
          {"chow_weight", to_json(r.chow_weight)},
          {"specialization_support", spec}};
}

Json to_json(const ChowCandidate& c) {
  Json out = {{"kind", std::string(to_string(c.kind))}};
  if (c.kind == CandidateKind::kVertex) out["vertex"] = to_json(c.vertex);
  out["point"] = to_json(c.point);
  out["report"] = to_json(c.report);
  return out;
}

Json to_json(const BlowupExpansionReport& r) {
  Json df = Json::array();
  for (const auto& s : r.df_values) df.push_back({{"gamma", s.gamma}, {"futaki", to_json(s.futaki)}});
  Json out = {{"dimension", r.dim},
              {"vertex", to_json(r.vertex)},
              {"chow_level", r.chow_level},
              {"futaki_base", to_json(r.futaki_base)},
              {"chow", to_json(r.chow)},
              {"fitted_c", to_json(r.fitted_c)},
              {"window_estimates", rationals(r.window_estimates)}};
  out["exact_c"] = r.exact_c ? to_json(*r.exact_c) : Json(nullptr);
  out["expansion"] = rationals(r.expansion);
  out["predicted_c"] = to_json(r.predicted_c);
  out["predicted_c_alt"] = r.predicted_c_alt ? to_json(*r.predicted_c_alt) : Json(nullptr);
  out["predicted_c_volume"] = to_json(r.predicted_c_volume);
  out["residual_bound"] = to_json(r.residual_bound);
  out["residual_order_ok"] = r.residual_order_ok;
  out["matched_variant"] = r.matched_variant;
  out["df_values"] = df;
  return out;
}

Json to_json(const DestabilizationCertificate& c) {
  return {{"input_hash", c.input_hash},
          {"df_input", to_json(c.df_input)},
          {"chosen_point", to_json(c.chosen_point)},
          {"vertex", to_json(c.vertex)},
          {"chow", to_json(c.chow)},
          {"gamma_star", c.gamma_star},
          {"df_blowup_at_gamma_star", to_json(c.df_blowup_at_gamma_star)},
          {"df_blowup_samples", samples_json(c.df_blowup_samples)}};
}

Json to_json(const DestabilizeResult& r) {
  Json attempts = Json::array();
  for (const auto& a : r.attempts)
    attempts.push_back({{"kind", std::string(to_string(a.kind))},
                        {"point", to_json(a.point)},
                        {"chow", to_json(a.chow)},
                        {"outcome", a.outcome},
                        {"samples", samples_json(a.samples)}});
  Json out = {{"status", std::string(to_string(r.status))}, {"df_input", to_json(r.df_input)}};
  out["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  out["attempts"] = attempts;
  return out;
}

Json to_json(const SearchResult& r) {
  Json hits = Json::array();
  for (const auto& h : r.hits) hits.push_back({{"config", to_json(h.config)}, {"df", to_json(h.df)}});
  return {{"examined", r.examined}, {"rejected", r.rejected}, {"hit_count", r.hits.size()}, {"hits", hits}};
}

}  // namespace kstab
