#pragma once

#include "phasekit/direct_problem.hpp"
#include "phasekit/inverse_problem.hpp"
#include "phasekit/model_catalog.hpp"
#include "phasekit/rashomon.hpp"
#include "phasekit/stochastic.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace phasekit {

using json = nlohmann::json;

inline json to_json(const ModelId& m) { return m.name(); }

inline json to_json(const PhaseTypeParams& p) { return {{"lambda", p.lambda}, {"A", p.A}}; }

inline PhaseTypeParams params_from_json(const json& j) {
  PhaseTypeParams p;
  p.lambda = j.at("lambda").get<std::vector<double>>();
  p.A = j.at("A").get<std::vector<double>>();
  if (p.lambda.size() != p.A.size() || p.lambda.empty())
    throw Error(ErrorCode::WrongArity, "lambda and A must be nonempty and of equal length");
  return p;
}

inline json to_json(const SymmetricMoments& m) { return {{"L", m.L}, {"S", m.S}}; }

inline json to_json(const ValidationReport& r) {
  return {{"c1_ok", r.c1_ok},
          {"c2_ok", r.c2_ok},
          {"strongly_connected", r.strongly_connected},
          {"s_equals_N", r.s_equals_N},
          {"messages", r.messages}};
}

inline json to_json(const InverseSolution& s) {
  json fp = json::array();
  for (const auto& [name, v] : s.free_params) fp.push_back({{"name", name}, {"value", v}});
  return {{"model", s.model.name()},
          {"rates", s.rates},
          {"all_positive", s.all_positive},
          {"branch", s.branch},
          {"root", s.root},
          {"free_params", fp},
          {"residual", s.residual}};
}

inline json to_json(const BranchDiagnostic& d) {
  return {{"system", d.system},
          {"matched", d.matched},
          {"worst_violation", d.worst_violation},
          {"pruned_complex", d.pruned_complex},
          {"pruned_inequation", d.pruned_inequation},
          {"pruned_initial", d.pruned_initial},
          {"solutions", d.solutions}};
}

inline json to_json(const Markers& m) { return {{"T", m.T_life}, {"p", m.p}}; }

inline json to_json(const FitResult& f) {
  return {{"params", to_json(f.params)},
          {"log_likelihood", f.log_likelihood},
          {"converged", f.converged},
          {"n_restarts_used", f.n_restarts_used}};
}

inline json to_json(const VariantReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j = {{"solution", to_json(e.solution)}, {"valid", e.valid}};
    j["markers"] = e.markers ? to_json(*e.markers) : json(nullptr);
    entries.push_back(j);
  }
  json maps = json::array();
  for (const auto& m : r.mappings)
    maps.push_back({{"map", m.map},
                    {"source", m.source},
                    {"image_entry", m.image_entry ? json(*m.image_entry) : json(nullptr)},
                    {"moment_residual", m.moment_residual},
                    {"T_spread", m.T_spread},
                    {"ok", m.ok}});
  return {{"moments", to_json(r.moments)},
          {"entries", entries},
          {"diagnostics", r.diagnostics},
          {"n_valid", r.n_valid},
          {"delta_p", r.delta_p},
          {"delta_log10_T", r.delta_log10_T},
          {"k5_spread", r.k5_spread},
          {"T3_spread", r.T3_spread},
          {"p3_spread", r.p3_spread},
          {"constraints_ok", r.constraints_ok},
          {"mappings", maps},
          {"mappings_ok", r.mappings_ok}};
}

inline json to_json(const ExperimentConfig& c) {
  json models = json::array();
  for (const auto& m : c.models) models.push_back(m.name());
  return {{"n_samples", c.n_samples},
          {"seed", c.seed},
          {"log10_lambda_min", c.log10_lambda_min},
          {"log10_lambda_max", c.log10_lambda_max},
          {"admission", to_string(c.admission)},
          {"zero_tol", c.zero_tol},
          {"bins", c.bins},
          {"models", models}};
}

inline ExperimentConfig experiment_config_from_json(const json& j, ExperimentConfig c = {}) {
  if (j.contains("n_samples")) c.n_samples = j.at("n_samples").get<std::int64_t>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("log10_lambda_min")) c.log10_lambda_min = j.at("log10_lambda_min").get<double>();
  if (j.contains("log10_lambda_max")) c.log10_lambda_max = j.at("log10_lambda_max").get<double>();
  if (j.contains("admission")) c.admission = parse_admission(j.at("admission").get<std::string>());
  if (j.contains("zero_tol")) c.zero_tol = j.at("zero_tol").get<double>();
  if (j.contains("bins")) c.bins = j.at("bins").get<int>();
  if (j.contains("models")) {
    c.models.clear();
    for (const auto& m : j.at("models")) c.models.push_back(ModelId::parse(m.get<std::string>()));
  }
  return c;
}

inline json to_json(const ExperimentReport& r) {
  json hist = json::array();
  for (const auto& h : r.histograms) hist.push_back({{"marker", h.marker}, {"edges", h.edges}, {"counts", h.counts}});
  json zero = json::object();
  for (int k = 0; k < 4; ++k) zero[marker_names()[k]] = r.zero_fraction[k];
  json by_model = json::object();
  const char* names[5] = {"M2", "M3", "M4", "M8", "M9"};
  for (int k = 0; k < 5; ++k)
    if (k != 1) by_model[names[k]] = r.retained_by_model[k];
  return {{"config", to_json(r.config)},
          {"n_samples", r.n_samples},
          {"n_redrawn", r.n_redrawn},
          {"n_retained", r.n_retained},
          {"retained_fraction", r.retained_fraction},
          {"zero_discrimination_fraction", zero},
          {"retained_by_model", by_model},
          {"histograms", hist}};
}

// Model and rates {"model":"M9","rates":[...]}.
struct ModelRates {
  ModelId model;
  std::vector<double> rates;
};

inline ModelRates model_rates_from_json(const json& j) {
  return {ModelId::parse(j.at("model").get<std::string>()), j.at("rates").get<std::vector<double>>()};
}

}  // namespace phasekit
