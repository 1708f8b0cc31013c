#include "snr/json_io.hpp"

#include <fstream>

namespace snr {

Json words_to_json(const LatticeParams& params, const std::vector<Word>& words) {
  Json list = Json::array();
  for (const Word& w : words) list.push_back(w.to_string());
  return Json{{"n", params.n}, {"r", params.r}, {"count", words.size()}, {"words", std::move(list)}};
}

Json diagram_to_json(const HasseDiagram& diagram) {
  Json levels = Json::array();
  for (const auto& level : diagram.levels) {
    Json row = Json::array();
    for (const Word& w : level) row.push_back(w.to_string());
    levels.push_back(std::move(row));
  }
  Json edges = Json::array();
  for (const auto& [lower, upper] : diagram.edges) edges.push_back(Json::array({lower.to_string(), upper.to_string()}));
  return Json{{"params", {{"n", diagram.params.n}, {"r", diagram.params.r}}},
              {"order", std::string(to_string(diagram.order))},
              {"levels", std::move(levels)},
              {"edges", std::move(edges)}};
}

Json function_to_json(const NrFunction& f) {
  Json tilde = Json::array();
  Json bar = Json::array();
  for (int i = 1; i <= f.params().r; ++i) tilde.push_back(format_rational(f.tilde(i)));
  for (int j = 1; j <= f.params().negatives(); ++j) bar.push_back(format_rational(f.bar(j)));
  return Json{{"n", f.params().n}, {"r", f.params().r}, {"tilde", std::move(tilde)}, {"bar", std::move(bar)}};
}

NrFunction function_from_json(const Json& j) {
  try {
    CandidateValues c{LatticeParams(j.at("n").get<int>(), j.at("r").get<int>()), {}, {}, 0};
    for (const auto& v : j.at("tilde")) c.tilde.push_back(parse_rational(v.get<std::string>()));
    for (const auto& v : j.at("bar")) c.bar.push_back(parse_rational(v.get<std::string>()));
    return validate(c);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed function description: ") + e.what());
  }
}

NrFunction load_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
  return function_from_json(j);
}

Json map_to_json(const BooleanMap& map) {
  Json p_set = Json::array();
  for (const Word& w : map.p_set()) p_set.push_back(w.to_string());
  return Json{{"p_set", std::move(p_set)}};
}

namespace {

Json extremal_to_json(const std::optional<ExtremalValue>& v) {
  if (!v) return nullptr;
  Json out = map_to_json(v->minimizer);
  if (v->witness) out["witness"] = function_to_json(*v->witness);
  return out;
}

}  // namespace

Json report_to_json(const GammaReport& report, bool complete) {
  Json out{{"n", report.params.n}, {"r", report.params.r}};
  if (report.d) out["d"] = *report.d;
  out["complete"] = complete;
  out["gamma_tilde"] = report.gamma_tilde ? Json(report.gamma_tilde->value) : Json(nullptr);
  out["gamma"] = report.gamma ? Json(report.gamma->value) : Json(nullptr);
  out["minimizer"] = extremal_to_json(report.gamma);
  out["minimizer_tilde"] = extremal_to_json(report.gamma_tilde);
  out["wb_count"] = report.wb_count;
  out["rwb_count"] = report.rwb_count;
  Json non_rep = Json::array();
  for (const BooleanMap& m : report.non_representable) non_rep.push_back(map_to_json(m));
  out["non_representable"] = std::move(non_rep);
  if (report.bm_count) {
    out["bm_count"] = *report.bm_count;
    out["rb_count"] = report.rb_count.value_or(0);
    Json non_rep_bm = Json::array();
    for (const BooleanMap& m : report.non_representable_bm) non_rep_bm.push_back(map_to_json(m));
    out["non_representable_bm"] = std::move(non_rep_bm);
  }
  return out;
}

Json weights_eval_to_json(const NrFunction& f, std::optional<int> d) {
  Json table = Json::array();
  for (const Word& w : enumerate(f.params())) {
    table.push_back(Json{{"word", w.to_string()}, {"sigma", format_rational(sigma(f, w))}});
  }
  Json out{{"function", function_to_json(f)},
           {"weight", f.is_weight()},
           {"total", format_rational(f.total())},
           {"alpha_count", alpha_count(f)}};
  if (d) {
    const std::uint64_t phi = phi_count(f, *d);
    out["d"] = *d;
    out["phi_count"] = phi;
    // A weight function only ever certifies an upper bound on the minimum.
    if (f.is_weight()) out["gamma_d_upper_bound"] = phi;
  }
  if (f.is_weight()) out["gamma_upper_bound"] = alpha_count(f);
  out["sigma"] = std::move(table);
  return out;
}

}  // namespace snr
