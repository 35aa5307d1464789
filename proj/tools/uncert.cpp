// uncert: command-line front end for the uncertainty toolkit.
//
// Exit codes: 0 success, 1 validation or parse error (and failed checks),
// 2 solver did not converge, 3 internal error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "uncertainty/bounds.hpp"
#include "uncertainty/errors.hpp"
#include "uncertainty/experiments.hpp"
#include "uncertainty/io.hpp"
#include "uncertainty/recovery.hpp"
#include "uncertainty/verify.hpp"

namespace unc = uncertainty;
using unc::json;

namespace {

enum Exit : int { kOk = 0, kValidation = 1, kSolver = 2, kInternal = 3 };

struct Globals {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out;
  std::string format = "json";
  std::string trace;
  bool no_timestamp = false;
};

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw unc::ValidationError("cannot open output file '" + g.out + "'");
  f << text;
}

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
  } else if (j.is_string()) {
    os << prefix << ',' << j.get<std::string>() << '\n';
  } else if (j.is_number_float()) {
    os << prefix << ',' << unc::format_real(j.get<double>()) << '\n';
  } else {
    os << prefix << ',' << j.dump() << '\n';
  }
}

// JSON reports get a timestamp unless --no-timestamp; CSV is the flattened
// key,value form.
void emit(const Globals& g, json j) {
  if (!g.no_timestamp && j.is_object()) j["generated_at"] = timestamp();
  if (g.format == "csv") {
    std::ostringstream os;
    os << "key,value\n";
    flatten(j, "", os);
    write_text(g, os.str());
  } else {
    write_text(g, j.dump(2) + "\n");
  }
}

void emit_vector(const Globals& g, const unc::ComplexVector& v, json meta) {
  if (g.format == "csv") {
    std::ostringstream os;
    unc::write_vector_csv(os, v);
    write_text(g, os.str());
    return;
  }
  meta["vector"] = unc::vector_to_json(v);
  emit(g, std::move(meta));
}

void write_trace(const Globals& g, const unc::SolverTrace& trace) {
  if (g.trace.empty()) return;
  std::ofstream f(g.trace, std::ios::binary);
  if (!f) throw unc::ValidationError("cannot open trace file '" + g.trace + "'");
  f << unc::to_json(trace).dump(2) << '\n';
}

unc::SolverConfig solver_config(const Globals& g, const std::string& path, std::optional<std::size_t> max_iter) {
  unc::SolverConfig cfg;
  if (!path.empty()) cfg = unc::solver_config_from_json(unc::read_json_file(path));
  cfg.seed = g.seed;
  if (g.tol) cfg.abs_tolerance = *g.tol;
  if (max_iter) cfg.max_iterations = *max_iter;
  cfg.validate();
  return cfg;
}

struct UnitarySource {
  std::optional<std::size_t> dft;
  std::string path;

  void add(CLI::App* cmd) {
    auto* d = cmd->add_option("--dft", dft, "use the unitary DFT of this size");
    auto* u = cmd->add_option("--U", path, "unitary matrix file (.json or CSV)");
    d->excludes(u);
  }
  unc::UnitaryMatrix load(std::optional<double> tol) const {
    if (dft) return unc::UnitaryMatrix::dft(*dft);
    if (path.empty()) throw unc::ValidationError("one of --dft or --U is required");
    return unc::UnitaryMatrix(unc::read_matrix_file(path), tol.value_or(1e-10));
  }
};

struct DictionarySource {
  std::optional<std::size_t> dft;
  std::string path;
  bool renormalize = false;

  unc::Dictionary load(const char* what) const {
    if (dft) return unc::Dictionary(unc::dft_matrix(*dft));
    if (path.empty()) throw unc::ValidationError(std::string("a dictionary for ") + what + " is required");
    return unc::Dictionary(unc::read_matrix_file(path),
                           renormalize ? unc::ColumnPolicy::Renormalize : unc::ColumnPolicy::Validate);
  }
};

int status_exit(unc::SolverStatus s) { return s == unc::SolverStatus::Converged ? kOk : kSolver; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uncertainty relations and sparse signal recovery toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "root seed for all random streams")->default_val(0);
  app.add_option("--tol", g.tol, "absolute tolerance override");
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}))->default_val("json");
  app.add_option("--trace", g.trace, "write solver residual trace to this JSON file");
  app.add_flag("--no-timestamp", g.no_timestamp, "omit timestamps and wall times (byte-stable output)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "uncertainty functionals and their bounds");
  UnitarySource b_u;
  b_u.add(bounds);
  std::string b_p, b_q, b_a, b_b;
  double eps_p = 0.0, eps_q = 0.0;
  bounds->add_option("--P", b_p, "set spec: list, picket:m/n or interval:l+n")->default_val("");
  bounds->add_option("--Q", b_q, "set spec: list, picket:m/n or interval:l+n")->default_val("");
  bounds->add_option("--A", b_a, "dictionary A (pair bounds)");
  bounds->add_option("--B", b_b, "dictionary B (pair bounds)");
  bounds->add_option("--eps-p", eps_p, "concentration of the A coefficients")->default_val(0.0);
  bounds->add_option("--eps-q", eps_q, "concentration of the B coefficients")->default_val(0.0);

  // recover
  auto* recover = app.add_subcommand("recover", "stable linear recovery or l1 denoising");
  UnitarySource r_u;
  r_u.add(recover);
  std::string r_method = "stable", r_p, r_q, r_y, r_solver;
  std::optional<std::size_t> r_max_iter;
  recover->add_option("--method", r_method)->check(CLI::IsMember({"stable", "denoise"}))->default_val("stable");
  recover->add_option("--Q", r_q, "signal band")->required();
  recover->add_option("--P", r_p, "erased set (stable method)")->default_val("");
  recover->add_option("--y", r_y, "observation vector file")->required();
  recover->add_option("--solver", r_solver, "solver config JSON");
  recover->add_option("--max-iter", r_max_iter);

  // separate
  auto* separate = app.add_subcommand("separate", "sparse signal separation");
  std::string s_problem, s_algorithm = "p1", s_solver;
  std::optional<std::size_t> s_max_support, s_max_iter;
  separate->add_option("--problem", s_problem, "SeparationProblem JSON")->required();
  separate->add_option("--algorithm", s_algorithm)->check(CLI::IsMember({"p0", "p1"}))->default_val("p1");
  separate->add_option("--max-support", s_max_support, "P0 support size limit (default: sparsity s)");
  separate->add_option("--solver", s_solver, "solver config JSON");
  separate->add_option("--max-iter", s_max_iter);

  // verify
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  std::string v_suite = "all";
  bool v_list = false;
  verify->add_option("--suite", v_suite, "all, a suite name, or a comma list")->default_val("all");
  verify->add_flag("--list", v_list, "print suite names and exit");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "seeded experiments");
  std::string e_name, e_config;
  experiment->add_option("name", e_name)
      ->required()
      ->check(CLI::IsMember({"counterexample", "injectivity", "com-mc", "sieve", "boxdim"}));
  experiment->add_option("--config", e_config, "JSON parameter overrides");

  // gen
  auto* gen = app.add_subcommand("gen", "scenario and construction generators");
  gen->require_subcommand(1);
  auto* gen_clip = gen->add_subcommand("clip", "clipping scenario restricted to the clipped entries");
  auto* gen_inpaint = gen->add_subcommand("inpaint", "missing-entries scenario");
  auto* gen_picket = gen->add_subcommand("picket", "picket fence index set");
  auto* gen_comb = gen->add_subcommand("comb", "comb vector d^(a)");
  DictionarySource g_a;
  std::string g_y, g_missing;
  std::size_t g_sparsity = 1;
  double g_level = 0.0;
  bool g_real = false;
  for (auto* cmd : {gen_clip, gen_inpaint}) {
    auto* d = cmd->add_option("--dft", g_a.dft, "A = unitary DFT of this size");
    auto* a = cmd->add_option("--A", g_a.path, "dictionary A file");
    d->excludes(a);
    cmd->add_flag("--renormalize", g_a.renormalize, "normalize the columns of A");
    cmd->add_option("--y", g_y, "coefficient vector file (default: random)");
    cmd->add_option("--sparsity", g_sparsity, "nonzeros of the random y")->default_val(1);
  }
  std::optional<std::size_t> g_clip_count;
  auto* level_opt = gen_clip->add_option("--level", g_level, "clip level a > 0");
  auto* count_opt = gen_clip->add_option("--clip-count", g_clip_count, "set the level so exactly k entries clip");
  level_opt->excludes(count_opt);
  gen_clip->add_flag("--real", g_real, "clip real values instead of moduli");
  gen_inpaint->add_option("--missing", g_missing, "set spec of missing entries")->required();
  std::size_t gp_m = 0, gp_n = 0, gc_m = 0, gc_a = 0;
  gen_picket->add_option("--m", gp_m)->required();
  gen_picket->add_option("--n", gp_n)->required();
  gen_comb->add_option("--m", gc_m)->required();
  gen_comb->add_option("--a", gc_a)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*bounds) {
      if (!b_a.empty() || !b_b.empty()) {
        if (b_a.empty() || b_b.empty()) throw unc::ValidationError("pair bounds need both --A and --B");
        const unc::Dictionary a(unc::read_matrix_file(b_a));
        const unc::Dictionary b(unc::read_matrix_file(b_b));
        const unc::IndexSet p = unc::parse_index_set(b_p, a.cols());
        const unc::IndexSet q = unc::parse_index_set(b_q, b.cols());
        json j = unc::to_json(unc::pair_bounds(a, b, p, q, eps_p, eps_q));
        j["P"] = unc::format_index_set(p);
        j["Q"] = unc::format_index_set(q);
        emit(g, std::move(j));
        return kOk;
      }
      const unc::UnitaryMatrix u = b_u.load(g.tol);
      const unc::IndexSet p = unc::parse_index_set(b_p, u.dim());
      const unc::IndexSet q = unc::parse_index_set(b_q, u.dim());
      json j = unc::to_json(unc::bound_report(u, p, q));
      j["P"] = unc::format_index_set(p);
      j["Q"] = unc::format_index_set(q);
      emit(g, std::move(j));
      return kOk;
    }

    if (*recover) {
      const unc::UnitaryMatrix u = r_u.load(std::nullopt);
      const unc::IndexSet q = unc::parse_index_set(r_q, u.dim());
      const unc::ComplexVector y = unc::read_vector_file(r_y);
      if (r_method == "stable") {
        const unc::IndexSet p = unc::parse_index_set(r_p, u.dim());
        const unc::StableRecovery r = unc::stable_linear_recovery(u, q, p, y);
        emit_vector(g, r.p_hat, {{"method", "stable"}, {"delta", r.delta}, {"constant_c", r.constant_c}});
        return kOk;
      }
      const unc::SolverConfig cfg = solver_config(g, r_solver, r_max_iter);
      unc::SolverTrace trace;
      const unc::DenoiseResult r = unc::l1_subspace_denoise(u, q, y, cfg, g.trace.empty() ? nullptr : &trace);
      write_trace(g, trace);
      emit_vector(g, r.estimate,
                  {{"method", "denoise"},
                   {"coefficients", unc::vector_to_json(r.coefficients)},
                   {"objective", r.objective},
                   {"status", unc::to_string(r.status)},
                   {"iterations", r.iterations}});
      return status_exit(r.status);
    }

    if (*separate) {
      const unc::SeparationProblem prob = unc::separation_problem_from_json(unc::read_json_file(s_problem));
      const unc::SolverConfig cfg = solver_config(g, s_solver, s_max_iter);
      unc::SolverTrace trace;
      const unc::SeparationSolution sol =
          s_algorithm == "p0" ? unc::separate_p0(prob, s_max_support.value_or(prob.sparsity_s), cfg)
                              : unc::separate_p1(prob, cfg, g.trace.empty() ? nullptr : &trace);
      if (s_algorithm == "p1") write_trace(g, trace);
      json j = unc::to_json(sol);
      j["algorithm"] = s_algorithm;
      j["solver"] = unc::to_json(cfg);
      if (prob.b) {
        // q is the planted sparsity of z when known, else every column of B.
        const std::size_t q = prob.planted_z ? unc::count_nonzero(*prob.planted_z) : prob.b->cols();
        j["threshold"] = unc::to_json(unc::separation_threshold(prob.a, *prob.b, prob.sparsity_s, q));
      } else {
        j["threshold"] = nullptr;
      }
      if (prob.planted_y) {
        j["planted_y_error"] = unc::norm2([&] {
          unc::ComplexVector d(sol.y.size());
          for (std::size_t i = 0; i < d.size(); ++i) d[i] = sol.y[i] - (*prob.planted_y)[i];
          return d;
        }());
      }
      emit(g, std::move(j));
      return status_exit(sol.status);
    }

    if (*verify) {
      if (v_list) {
        for (const auto& n : unc::verify_suite_names()) std::cout << n << '\n';
        return kOk;
      }
      const auto reports = unc::run_verify(v_suite, g.seed);
      json suites = json::array();
      bool all = true;
      for (const auto& r : reports) {
        suites.push_back(r.to_json(!g.no_timestamp));
        all = all && r.passed();
      }
      emit(g, {{"seed", g.seed}, {"suites", std::move(suites)}, {"passed", all}});
      return all ? kOk : kValidation;
    }

    if (*experiment) {
      const json config = e_config.empty() ? json::object() : unc::read_json_file(e_config);
      unc::ExperimentReport rep;
      if (e_name == "counterexample") rep = unc::run_counterexample_experiment(config, g.seed);
      if (e_name == "injectivity") rep = unc::run_injectivity_experiment(config, g.seed);
      if (e_name == "com-mc") rep = unc::run_com_mc_experiment(config, g.seed);
      if (e_name == "sieve") rep = unc::run_sieve_experiment(config, g.seed);
      if (e_name == "boxdim") rep = unc::run_boxdim_experiment(config, g.seed);
      emit(g, rep.to_json(!g.no_timestamp));
      return rep.passed() ? kOk : kValidation;
    }

    if (*gen) {
      if (*gen_picket) {
        const unc::IndexSet p = unc::picket_fence(gp_m, gp_n);
        if (g.format == "csv") {
          std::ostringstream os;
          for (std::size_t i : p.members()) os << i << '\n';
          write_text(g, os.str());
        } else {
          emit(g, {{"m", gp_m}, {"n", gp_n}, {"members", p.members()}});
        }
        return kOk;
      }
      if (*gen_comb) {
        emit_vector(g, unc::comb_vector(gc_m, gc_a), {{"m", gc_m}, {"a", gc_a}});
        return kOk;
      }
      const unc::Dictionary a = g_a.load("A");
      unc::ComplexVector y;
      if (!g_y.empty()) {
        y = unc::read_vector_file(g_y);
      } else {
        if (g_sparsity == 0 || g_sparsity > a.cols()) throw unc::ValidationError("--sparsity must be in 1..cols(A)");
        unc::Rng rng = unc::make_named_stream(g.seed, "gen/y");
        y.assign(a.cols(), 0.0);
        const unc::IndexSet support = unc::random_subset(rng, a.cols(), g_sparsity);
        for (std::size_t i : support.members()) {
          y[i - 1] = g_real ? unc::cd{unc::complex_gaussian(rng).real()} : unc::complex_gaussian(rng);
        }
      }
      auto scenario = [&]() -> unc::SeparationProblem {
        if (*gen_inpaint) return unc::make_inpainting_scenario(y, a, unc::parse_index_set(g_missing, a.rows()));
        double level = g_level;
        if (g_clip_count) {
          // Midway between the k-th and (k+1)-th largest moduli.
          std::vector<double> mod;
          for (unc::cd v : a.matrix() * std::span<const unc::cd>(y)) mod.push_back(std::abs(v));
          std::sort(mod.rbegin(), mod.rend());
          const std::size_t k = *g_clip_count;
          if (k == 0 || k >= mod.size()) throw unc::ValidationError("--clip-count must be in 1..rows(A)-1");
          if (mod[k - 1] - mod[k] <= 1e-9 * mod[0]) throw unc::ValidationError("no level clips exactly that many entries");
          level = 0.5 * (mod[k - 1] + mod[k]);
        } else if (!(level > 0.0)) {
          throw unc::ValidationError("gen clip needs --level or --clip-count");
        }
        const unc::SeparationProblem full = unc::make_clipping_scenario(y, a, level, g_real);
        if (unc::count_nonzero(*full.planted_z) == 0) {
          throw unc::ValidationError("clip level leaves every entry unclipped");
        }
        return unc::restrict_to_known_support(full, unc::clipped_support(full.w, level));
      };
      const unc::SeparationProblem prob = scenario();
      emit(g, unc::to_json(prob));
      return kOk;
    }
  } catch (const unc::NotRecoverableError& e) {
    std::cerr << "error: " << e.what() << " (delta = " << e.delta() << ")\n";
    return kValidation;
  } catch (const unc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
