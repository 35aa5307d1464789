#include "uncertainty/errors.hpp"
#include "uncertainty/io.hpp"
#include "uncertainty/recovery.hpp"

namespace uncertainty {

nlohmann::json to_json(const SolverConfig& cfg) {
  return {{"max_iterations", cfg.max_iterations},
          {"abs_tolerance", cfg.abs_tolerance},
          {"rel_tolerance", cfg.rel_tolerance},
          {"penalty", cfg.penalty},
          {"seed", cfg.seed}};
}

SolverConfig solver_config_from_json(const nlohmann::json& j) {
  SolverConfig cfg;
  try {
    cfg.max_iterations = j.value("max_iterations", cfg.max_iterations);
    cfg.abs_tolerance = j.value("abs_tolerance", cfg.abs_tolerance);
    cfg.rel_tolerance = j.value("rel_tolerance", cfg.rel_tolerance);
    cfg.penalty = j.value("penalty", cfg.penalty);
    cfg.seed = j.value("seed", cfg.seed);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("solver config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

nlohmann::json to_json(const SeparationProblem& prob) {
  nlohmann::json j = {{"A", matrix_to_json(prob.a.matrix())},
                      {"B", prob.b ? matrix_to_json(prob.b->matrix()) : nlohmann::json(nullptr)},
                      {"w", vector_to_json(prob.w)},
                      {"sparsity_s", prob.sparsity_s}};
  if (prob.planted_y || prob.planted_z) {
    nlohmann::json planted = nlohmann::json::object();
    if (prob.planted_y) planted["y"] = vector_to_json(*prob.planted_y);
    if (prob.planted_z) planted["z"] = vector_to_json(*prob.planted_z);
    j["planted"] = std::move(planted);
  }
  return j;
}

SeparationProblem separation_problem_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("separation problem must be a JSON object");
  for (const char* key : {"A", "w"}) {
    if (!j.contains(key)) throw ParseError(std::string("separation problem is missing '") + key + "'");
  }
  std::size_t s = 0;
  if (j.contains("sparsity_s")) {
    if (!j["sparsity_s"].is_number_unsigned()) throw ParseError("sparsity_s must be a nonnegative integer");
    s = j["sparsity_s"].get<std::size_t>();
  }
  std::optional<Dictionary> b;
  if (j.contains("B") && !j["B"].is_null()) b = Dictionary(matrix_from_json(j["B"]));
  SeparationProblem prob{Dictionary(matrix_from_json(j["A"])), std::move(b), vector_from_json(j["w"]), s,
                         std::nullopt, std::nullopt};
  if (j.contains("planted") && j["planted"].is_object()) {
    const auto& pl = j["planted"];
    if (pl.contains("y")) prob.planted_y = vector_from_json(pl["y"]);
    if (pl.contains("z")) prob.planted_z = vector_from_json(pl["z"]);
  }
  prob.validate();
  return prob;
}

nlohmann::json to_json(const SeparationSolution& sol) {
  nlohmann::json j = {{"y", vector_to_json(sol.y)},
                      {"z", vector_to_json(sol.z)},
                      {"objective", sol.objective},
                      {"feasibility_residual", sol.feasibility_residual},
                      {"solver_status", to_string(sol.status)},
                      {"iterations", sol.iterations}};
  j["support"] = sol.support ? nlohmann::json(*sol.support) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SolverTrace& trace) {
  return {{"primal_residual", trace.primal_residual}, {"dual_residual", trace.dual_residual}};
}

nlohmann::json to_json(const ThresholdCheck& t) { return {{"holds", t.holds}, {"lhs", t.lhs}, {"rhs", t.rhs}}; }

}  // namespace uncertainty
