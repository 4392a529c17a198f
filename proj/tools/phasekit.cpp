// phasekit command-line tool.
#include "phasekit/phasekit.hpp"
#include "phasekit/io.hpp"

#include <CLI11.hpp>
#include <boost/crc.hpp>

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace phasekit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitNoSolution = 3;

struct Manifest {
  std::vector<std::string> command_line;
  std::map<std::string, std::uint64_t> seeds;
  std::map<std::string, std::string> checksums;
  bool record_time = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  json to_json() const {
    json j = {{"tool", "phasekit"},
              {"version", PHASEKIT_VERSION},
              {"command_line", command_line},
              {"seeds", seeds},
              {"input_checksums", checksums}};
    if (record_time)
      j["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return j;
  }
};

Manifest g_manifest;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string data = ss.str();
  boost::crc_32_type crc;
  crc.process_bytes(data.data(), data.size());
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", crc.checksum());
  g_manifest.checksums[path] = std::string("crc32:") + buf;
  return data;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size())
      throw Error(ErrorCode::InvalidInput, flag + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidInput, flag + ": empty list");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

// JSON artifact with the manifest embedded.
void emit_json(const std::string& path, json body) {
  body["manifest"] = g_manifest.to_json();
  write_text(path, body.dump(2) + "\n");
}

// CSV artifact with a sidecar manifest next to it.
void emit_csv(const std::string& path, const std::string& csv) {
  write_text(path, csv);
  write_text(path + ".manifest.json", g_manifest.to_json().dump(2) + "\n");
}

json moments_json(const SymmetricMoments& m) { return to_json(m); }

// Input as either (lambda, A) or flattened moments; moments are canonical.
struct Input {
  std::optional<PhaseTypeParams> params;
  SymmetricMoments moments;
};

Input read_input(const std::string& lambda, const std::string& A, const std::string& mom, const std::string& file) {
  Input in;
  const int given = !lambda.empty() + !mom.empty() + !file.empty();
  if (given != 1 || lambda.empty() != A.empty())
    throw Error(ErrorCode::InvalidInput, "give exactly one of --lambda/--A, --moments or --input");
  if (!file.empty()) {
    const json j = json::parse(read_file(file));
    if (j.contains("lambda")) {
      in.params = params_from_json(j);
    } else if (j.contains("moments")) {
      in.moments.L = j.at("moments").at("L").get<std::vector<double>>();
      in.moments.S = j.at("moments").at("S").get<std::vector<double>>();
    } else {
      throw Error(ErrorCode::InvalidInput, "input file needs 'lambda'/'A' or 'moments'");
    }
  } else if (!lambda.empty()) {
    in.params = PhaseTypeParams{parse_list(lambda, "--lambda"), parse_list(A, "--A")};
    if (in.params->lambda.size() != in.params->A.size())
      throw Error(ErrorCode::WrongArity, "--lambda and --A differ in length");
  } else {
    const auto v = parse_list(mom, "--moments");
    if (v.size() % 2 == 0) throw Error(ErrorCode::WrongArity, "--moments needs 2N-1 values (L_1..L_N, S_1..S_{N-1})");
    const std::size_t n = (v.size() + 1) / 2;
    in.moments.L.assign(v.begin(), v.begin() + n);
    in.moments.S.assign(v.begin() + n, v.end());
  }
  if (in.params) {
    in.moments = moments_cast<double>(moments(params_cast<quad>(*in.params)));
  }
  if (in.moments.S.size() + 1 != in.moments.L.size())
    throw Error(ErrorCode::WrongArity, "moments need N values of L and N-1 of S");
  return in;
}

std::vector<double> rates_from(const ModelId& model, const std::string& text) {
  auto k = parse_list(text, "--rates");
  if (static_cast<int>(k.size()) != model.n_rates())
    throw Error(ErrorCode::WrongArity,
                model.name() + " takes " + std::to_string(model.n_rates()) + " rates, got " + std::to_string(k.size()));
  return k;
}

// Lets list values start with '-' (e.g. --moments -15,27): joins them to the flag.
std::vector<std::string> normalise_args(int argc, char** argv) {
  static const char* list_flags[] = {"--moments", "--lambda", "--A", "--rates", "--k3-grid"};
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    bool joined = false;
    for (const char* f : list_flags)
      if (a == f && i + 1 < argc && argv[i + 1][0] == '-' &&
          (std::isdigit(static_cast<unsigned char>(argv[i + 1][1])) || argv[i + 1][1] == '.')) {
        out.push_back(a + "=" + argv[++i]);
        joined = true;
        break;
      }
    if (!joined) out.push_back(a);
  }
  return out;
}

json solutions_json(const std::vector<InverseSolution>& sols) {
  json a = json::array();
  for (const auto& s : sols) a.push_back(to_json(s));
  return a;
}

std::string marker_table(const VariantReport& rep) {
  std::string csv = "entry,model,root,valid,T1,T2,T3,p1,p2,p3\n";
  char buf[512];
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const auto& e = rep.entries[i];
    if (!e.markers) continue;
    const auto& m = *e.markers;
    std::snprintf(buf, sizeof buf, "%zu,%s,%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", i,
                  e.solution.model.name().c_str(), e.solution.root, e.valid ? 1 : 0, m.T_life[0], m.T_life[1],
                  m.T_life[2], m.p[0], m.p[1], m.p[2]);
    csv += buf;
  }
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_manifest.command_line.emplace_back(argv[i]);

  CLI::App app{"phasekit: phase-type models of time-to-event data"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(PHASEKIT_VERSION));

  std::string out_path = "-";
  bool record_time = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output file ('-' for stdout)");
    sub->add_flag("--record-time", record_time, "Record wall time in the manifest");
  };

  // direct
  std::string model_name, rates_text, survival_csv;
  double tmax = 0;
  int points = 201;
  auto* direct = app.add_subcommand("direct", "Phase-type parameters and moments of a model");
  direct->add_option("--model", model_name, "M2, M3, M4, M8, M9 or chain:N")->required();
  direct->add_option("--rates", rates_text, "Comma-separated rates")->required();
  direct->add_option("--survival-csv", survival_csv, "Write the survival and density curve to this CSV");
  direct->add_option("--tmax", tmax, "Curve end time (default: 5 mean times)");
  direct->add_option("--points", points, "Curve points")->check(CLI::PositiveNumber);
  common(direct);

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Structural checks of a model");
  validate_cmd->add_option("--model", model_name)->required();
  validate_cmd->add_option("--rates", rates_text)->required();
  common(validate_cmd);

  // simulate
  std::int64_t n_events = 0;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  auto* simulate = app.add_subcommand("simulate", "Simulate inter-event gaps of the return process");
  simulate->add_option("--model", model_name)->required();
  simulate->add_option("--rates", rates_text)->required();
  simulate->add_option("--n", n_events, "Number of events")->required();
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--threads", threads, "Worker threads (default PHASEKIT_THREADS)");
  simulate->add_option("--out", out_path, "Gap CSV")->required();
  simulate->add_flag("--record-time", record_time);

  // fit
  std::string trace_path;
  int components = 3;
  FitConfig fit_cfg;
  auto* fit = app.add_subcommand("fit", "Maximum-likelihood multi-exponential fit of a gap CSV");
  fit->add_option("--trace", trace_path, "Gap CSV")->required();
  fit->add_option("--components", components, "Number of exponentials")->check(CLI::PositiveNumber);
  fit->add_option("--restarts", fit_cfg.restarts);
  fit->add_option("--seed", fit_cfg.seed);
  fit->add_option("--threads", fit_cfg.threads);
  common(fit);

  // invert
  std::string lambda_text, A_text, moments_text, input_path, k3_text;
  bool force_thomas = false;
  double tol = 1e-9;
  auto* invert = app.add_subcommand("invert", "Rates of a model reproducing given phase-type data");
  invert->add_option("--model", model_name)->required();
  invert->add_option("--lambda", lambda_text, "Comma-separated eigenvalues");
  invert->add_option("--A", A_text, "Comma-separated amplitudes");
  invert->add_option("--moments", moments_text, "L_1..L_N,S_1..S_{N-1}");
  invert->add_option("--input", input_path, "JSON with lambda/A or moments (e.g. direct output)");
  invert->add_flag("--thomas", force_thomas, "Search every simple system");
  invert->add_option("--k3-grid", k3_text, "M3 family evaluation points");
  invert->add_option("--tol", tol, "Branch tolerance");
  common(invert);

  // variants
  std::string markers_csv;
  auto* variants = app.add_subcommand("variants", "All catalog variants reproducing given phase-type data");
  variants->add_option("--lambda", lambda_text);
  variants->add_option("--A", A_text);
  variants->add_option("--moments", moments_text);
  variants->add_option("--input", input_path);
  variants->add_option("--k3-grid", k3_text);
  variants->add_option("--markers-csv", markers_csv, "Write the marker table to this CSV");
  common(variants);

  // experiment
  std::string config_path, histogram_csv, admission;
  std::int64_t samples = 0;
  int bins = 0;
  std::optional<std::uint64_t> exp_seed;
  auto* experiment = app.add_subcommand("experiment", "Random discrimination experiment");
  experiment->add_option("--config", config_path, "JSON experiment config");
  experiment->add_option("--samples", samples);
  experiment->add_option("--seed", exp_seed);
  experiment->add_option("--admission", admission, "real-part or strict");
  experiment->add_option("--bins", bins);
  experiment->add_option("--threads", threads);
  experiment->add_option("--histogram-csv", histogram_csv, "Write the histograms to this CSV");
  common(experiment);

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "Simulate, fit and enumerate variants");
  pipeline->add_option("--model", model_name)->required();
  pipeline->add_option("--rates", rates_text)->required();
  pipeline->add_option("--n", n_events)->required();
  pipeline->add_option("--seed", seed);
  pipeline->add_option("--fit-seed", fit_cfg.seed);
  pipeline->add_option("--threads", threads);
  common(pipeline);

  std::vector<std::string> args = normalise_args(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }
  g_manifest.record_time = record_time;

  try {
    if (direct->parsed()) {
      const ModelId model = ModelId::parse(model_name);
      const auto k = rates_from(model, rates_text);
      const auto g = build_generator(model, k);
      json out = {{"model", model.name()}, {"rates", k}, {"validation", to_json(validate(g))}};
      const PhaseTypeParams p = precise_phase_type_params(g);
      out["lambda"] = p.lambda;
      out["A"] = p.A;
      out["moments"] = moments_json(moments_cast<double>(moments(params_cast<quad>(p))));
      out["mean_time"] = mean_time(p);
      try {
        out["markers"] = to_json(markers(model, k));
      } catch (const Error&) {
        out["markers"] = nullptr;
      }
      if (!survival_csv.empty()) {
        std::ostringstream csv;
        write_survival_csv(csv, p, tmax > 0 ? tmax : 5 * mean_time(p), points);
        emit_csv(survival_csv, csv.str());
      }
      emit_json(out_path, out);
    } else if (validate_cmd->parsed()) {
      const ModelId model = ModelId::parse(model_name);
      const auto r = validate(build_generator(model, rates_from(model, rates_text)));
      json out = to_json(r);
      out["model"] = model.name();
      out["ok"] = r.all_ok();
      emit_json(out_path, out);
    } else if (simulate->parsed()) {
      const ModelId model = ModelId::parse(model_name);
      const auto k = rates_from(model, rates_text);
      g_manifest.seeds["simulation"] = seed;
      SimulationOptions opt;
      opt.threads = threads;
      auto tr = simulate_events(build_generator(model, k), n_events, seed, opt);
      std::ostringstream csv;
      write_trace_csv(csv, tr);
      emit_csv(out_path, csv.str());
    } else if (fit->parsed()) {
      std::istringstream in(read_file(trace_path));
      const auto tr = read_trace_csv(in);
      g_manifest.seeds["fit"] = fit_cfg.seed;
      const auto f = fit_multiexp(tr, components, fit_cfg);
      json out = to_json(f);
      out["n_events"] = tr.gaps.size();
      out["moments"] = moments_json(moments_cast<double>(moments(params_cast<quad>(f.params))));
      emit_json(out_path, out);
    } else if (invert->parsed()) {
      const ModelId model = ModelId::parse(model_name);
      const Input in = read_input(lambda_text, A_text, moments_text, input_path);
      json out = {{"model", model.name()}, {"moments", moments_json(in.moments)}};
      std::vector<InverseSolution> sols;
      json diagnostics = json::array();
      std::string method;
      if (!model.is_catalog3()) {
        if (!in.params) throw Error(ErrorCode::InvalidInput, "chain inversion needs --lambda/--A");
        sols.push_back(invert_unbranched(model.states(), *in.params));
        method = "recursion";
      } else {
        GenericOptions gopt;
        gopt.tol = tol;
        if (!k3_text.empty()) gopt.k3_grid = parse_list(k3_text, "--k3-grid");
        ThomasOptions topt;
        topt.tol = tol;
        if (!k3_text.empty()) topt.free_grid = gopt.k3_grid;
        auto thomas = [&] {
          const auto r = invert_thomas(model, in.moments, topt);
          for (const auto& d : r.diagnostics) diagnostics.push_back(to_json(d));
          method = "thomas";
          return r.solutions;
        };
        if (force_thomas) {
          sols = thomas();
        } else {
          try {
            sols = invert_generic(model, in.moments, gopt);
            method = "generic";
          } catch (const Error& e) {
            if (e.code() != ErrorCode::GenericBranchMiss) throw;
            sols = thomas();
          }
        }
      }
      out["method"] = method;
      out["solutions"] = solutions_json(sols);
      out["diagnostics"] = diagnostics;
      emit_json(out_path, out);
    } else if (variants->parsed()) {
      const Input in = read_input(lambda_text, A_text, moments_text, input_path);
      VariantOptions opt;
      if (!k3_text.empty()) opt.k3_grid = parse_list(k3_text, "--k3-grid");
      const auto rep = enumerate_variants(in.moments, opt);
      if (!markers_csv.empty()) emit_csv(markers_csv, marker_table(rep));
      emit_json(out_path, to_json(rep));
    } else if (experiment->parsed()) {
      ExperimentConfig cfg;
      if (!config_path.empty()) cfg = experiment_config_from_json(json::parse(read_file(config_path)));
      if (samples > 0) cfg.n_samples = samples;
      if (exp_seed) cfg.seed = *exp_seed;
      if (!admission.empty()) cfg.admission = parse_admission(admission);
      if (bins > 0) cfg.bins = bins;
      cfg.threads = threads;
      g_manifest.seeds["experiment"] = cfg.seed;
      const auto rep = discrimination_experiment(cfg);
      if (!histogram_csv.empty()) {
        std::ostringstream csv;
        write_histogram_csv(csv, rep);
        emit_csv(histogram_csv, csv.str());
      }
      emit_json(out_path, to_json(rep));
    } else if (pipeline->parsed()) {
      const ModelId model = ModelId::parse(model_name);
      const auto k = rates_from(model, rates_text);
      const auto g = build_generator(model, k);
      g_manifest.seeds["simulation"] = seed;
      g_manifest.seeds["fit"] = fit_cfg.seed;
      SimulationOptions sopt;
      sopt.threads = threads;
      fit_cfg.threads = threads;
      const auto tr = simulate_events(g, n_events, seed, sopt);
      const auto f = fit_multiexp(tr, model.states(), fit_cfg);
      double mean = 0;
      for (double x : tr.gaps) mean += x;
      mean /= static_cast<double>(tr.gaps.size());
      json trace = {{"n_events", tr.gaps.size()}, {"mean_gap", mean}};
      json out = {{"model", model.name()}, {"rates", k}, {"trace", trace}, {"fit", to_json(f)}};
      try {
        const PhaseTypeParams truth = precise_phase_type_params(g);
        out["trace"]["ks_vs_truth"] = ks_statistic(tr, truth);
      } catch (const Error&) {
        out["trace"]["ks_vs_truth"] = nullptr;
      }
      if (model.is_catalog3()) {
        VariantOptions opt;
        opt.models = {ModelId::m2(), ModelId::m3(), ModelId::m4(), ModelId::m8(), ModelId::m9()};
        const auto rep = enumerate_variants(f.params, opt);
        out["variants"] = to_json(rep);
        double best = 1e300;
        json best_entry = nullptr;
        for (std::size_t i = 0; i < rep.entries.size(); ++i) {
          const auto& s = rep.entries[i].solution;
          if (!(s.model == model)) continue;
          double e = 0;
          for (std::size_t r = 0; r < k.size(); ++r) e = std::max(e, std::abs(s.rates[r] - k[r]) / std::abs(k[r]));
          if (e < best) {
            best = e;
            best_entry = i;
          }
        }
        const bool solvable = model.kind != ModelKind::M3;
        out["ground_truth"] = {{"solvable", solvable},
                               {"best_entry", best_entry},
                               {"best_rel_err", best_entry.is_null() ? json(nullptr) : json(best)},
                               {"within_15_percent", solvable && !best_entry.is_null() && best <= 0.15}};
        if (!solvable) {
          // fitted moments miss the hypersurface; the family is that of the exact moments
          const auto exact = moments_cast<double>(moments_from_rates<quad>(model, vector_cast<quad>(k)));
          GenericOptions gopt;
          gopt.k3_grid.push_back(k[2]);  // include the provenance member
          std::sort(gopt.k3_grid.begin(), gopt.k3_grid.end());
          gopt.k3_grid.erase(std::unique(gopt.k3_grid.begin(), gopt.k3_grid.end()), gopt.k3_grid.end());
          out["ground_truth"]["family"] = solutions_json(invert_generic(model, exact, gopt));
        }
      } else {
        const auto s = invert_unbranched(model.states(), f.params);
        double e = 0;
        for (std::size_t r = 0; r < k.size(); ++r) e = std::max(e, std::abs(s.rates[r] - k[r]) / std::abs(k[r]));
        out["inverse"] = to_json(s);
        out["ground_truth"] = {{"solvable", true}, {"best_rel_err", e}, {"within_15_percent", e <= 0.15}};
      }
      emit_json(out_path, out);
    }
  } catch (const Error& e) {
    const bool none = is_no_solution(e.code());
    json err = {{"error", to_string(e.code())}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return none ? kExitNoSolution : kExitDomain;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
