#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypercut/cheeger.hpp"
#include "hypercut/generator.hpp"
#include "hypercut/graph_oracle.hpp"
#include "hypercut/hypergraph.hpp"
#include "hypercut/io.hpp"
#include "hypercut/spectral.hpp"

using json = nlohmann::ordered_json;
using namespace hypercut;

namespace {

struct GlobalFlags {
  bool tsv = false;
  bool timing = false;
};

double sig12(double value) { return round_significant(value, 12); }

int default_limit() {
  if (const char* env = std::getenv("HYPERCUT_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      fail(ErrorCode::UsageError, std::string("HYPERCUT_LIMIT is not an integer: ") + env);
    }
  }
  return 24;
}

json report_envelope(const std::string& command, const std::string& input_bytes) {
  json report;
  report["command"] = command;
  report["input_digest"] = "fnv1a64:" + fnv1a_digest(input_bytes);
  report["index_base"] = 0;
  return report;
}

void flatten_tsv(const json& node, const std::string& prefix, std::ostream& out) {
  auto scalar = [](const json& value) -> std::string {
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
  };
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten_tsv(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array()) {
    bool all_scalar = true;
    for (const auto& value : node)
      if (value.is_structured()) all_scalar = false;
    if (all_scalar) {
      out << prefix;
      for (const auto& value : node) out << '\t' << scalar(value);
      out << '\n';
    } else {
      int index = 0;
      for (const auto& value : node) flatten_tsv(value, prefix + "." + std::to_string(index++), out);
    }
  } else {
    out << prefix << '\t' << scalar(node) << '\n';
  }
}

void emit(const json& report, const GlobalFlags& flags) {
  if (flags.tsv)
    flatten_tsv(report, "", std::cout);
  else
    std::cout << report.dump(2) << "\n";
}

json cheeger_report_json(const CheegerReport& report) {
  json out;
  out["method"] = cut_method_name(report.method);
  out["h"] = sig12(report.h.value());
  out["h_exact"] = {{"num", report.h.num}, {"den", report.h.den}};
  out["witness"] = report.witness.members();
  out["k"] = report.k;
  out["lambda_second"] = sig12(report.lambda_second);
  out["eigen_multiplicity"] = report.eigen_multiplicity;
  out["gap"] = sig12(report.bounds.gap);
  out["lower_bound"] = sig12(report.bounds.lower_bound);
  out["upper_bound"] = sig12(report.bounds.upper_bound);
  out["bounds_hold"] = {{"lower", report.bounds.lower_holds}, {"upper", report.bounds.upper_holds}};
  return out;
}

json vertex_report_json(const VertexCutReport& report) {
  json out;
  out["d"] = report.d;
  out["h_star"] = sig12(report.h_star.value());
  out["h_star_exact"] = {{"num", report.h_star.num}, {"den", report.h_star.den}};
  out["witness_edges"] = report.witness_edges;
  out["dual"] = cheeger_report_json(report.dual_report);
  return out;
}

struct LoadedInput {
  std::string bytes;
  ParsedFile parsed;
};

LoadedInput load(const std::string& path) {
  std::string bytes = read_file(path);
  return {bytes, parse_hypergraph(bytes)};
}

using Clock = std::chrono::steady_clock;

void attach_timing(json& report, const GlobalFlags& flags, Clock::time_point start) {
  if (!flags.timing) return;
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  report["timing_ms"] = ms;
}

int run_info(const std::string& path, const GlobalFlags& flags) {
  const auto start = Clock::now();
  LoadedInput input = load(path);
  const OrientedHypergraph& g = input.parsed.graph;

  json report = report_envelope("info", input.bytes);
  report["n"] = g.vertex_count();
  report["m"] = g.edge_count();
  report["degrees"] = g.degrees();
  auto k = g.uniformity();
  report["uniform"] = k.has_value();
  report["k"] = k ? json(*k) : json(nullptr);
  auto d = g.regularity();
  report["regular"] = d.has_value();
  report["d"] = d ? json(*d) : json(nullptr);
  report["classical"] = g.all_signs_positive();
  auto components = g.connected_components();
  report["component_count"] = components.size();
  report["components"] = components;
  report["degree_assumption"] = g.degree_assumption_holds();
  attach_timing(report, flags, start);
  emit(report, flags);
  return 0;
}

int run_spectrum(const std::string& path, bool eigenfunctions, const GlobalFlags& flags) {
  const auto start = Clock::now();
  LoadedInput input = load(path);
  const OrientedHypergraph& g = input.parsed.graph;
  Spectrum spec = spectrum(g);

  json report = report_envelope("spectrum", input.bytes);
  report["n"] = g.vertex_count();
  report["m"] = g.edge_count();
  auto k = g.uniformity();
  report["k"] = k ? json(*k) : json(nullptr);
  json values = json::array();
  for (double lambda : spec.eigenvalues) values.push_back(sig12(lambda));
  report["eigenvalues"] = values;
  if (spec.size() >= 2) report["lambda_second"] = sig12(spec.eigenvalues[spec.size() - 2]);
  if (eigenfunctions) {
    json functions = json::array();
    for (const auto& f : spec.eigenfunctions) {
      json row = json::array();
      for (double x : f) row.push_back(sig12(x));
      functions.push_back(row);
    }
    report["eigenfunctions"] = functions;
  }
  attach_timing(report, flags, start);
  emit(report, flags);
  return 0;
}

int run_cheeger(const std::string& path, bool spectral, int limit, int threads,
                const GlobalFlags& flags) {
  const auto start = Clock::now();
  LoadedInput input = load(path);
  ClassicalView view(input.parsed.graph);

  json report = report_envelope("cheeger", input.bytes);
  report["n"] = view.graph().vertex_count();
  report["m"] = view.graph().edge_count();
  report["k"] = view.require_uniform();
  json reports;
  if (spectral) {
    SpectralCutResult cuts = spectral_cut(view);
    reports["sign"] = cheeger_report_json(cuts.sign);
    reports["sweep"] = cheeger_report_json(cuts.sweep);
  } else {
    SearchOptions options{limit, threads};
    reports["exact"] = cheeger_report_json(cheeger_exact(view, options));
  }
  report["reports"] = reports;
  attach_timing(report, flags, start);
  emit(report, flags);
  return 0;
}

int run_dual(const std::string& path, const std::string& out_path, const GlobalFlags& flags) {
  const auto start = Clock::now();
  LoadedInput input = load(path);
  ClassicalView view(input.parsed.graph);
  DualMapping mapping = dual(view);

  write_file(out_path, write_hypergraph(mapping.dual));
  json sidecar;
  sidecar["vertex_to_dual_edge"] = mapping.vertex_to_dual_edge;
  sidecar["edge_to_dual_vertex"] = mapping.edge_to_dual_vertex;
  const std::string map_path = out_path + ".map.json";
  write_file(map_path, sidecar.dump(2) + "\n");

  json report = report_envelope("dual", input.bytes);
  report["out"] = out_path;
  report["map_out"] = map_path;
  report["dual_n"] = mapping.dual.vertex_count();
  report["dual_m"] = mapping.dual.edge_count();
  attach_timing(report, flags, start);
  emit(report, flags);
  return 0;
}

int run_vertex_cut(const std::string& path, bool spectral, int limit, int threads,
                   const GlobalFlags& flags) {
  const auto start = Clock::now();
  LoadedInput input = load(path);
  ClassicalView view(input.parsed.graph);

  json report = report_envelope("vertex_cut", input.bytes);
  report["n"] = view.graph().vertex_count();
  report["m"] = view.graph().edge_count();
  VertexCutReport result = spectral
                               ? vertex_cut(view)
                               : vertex_cheeger_exact(view, SearchOptions{limit, threads});
  report["method"] = spectral ? "spectral" : "exact";
  report.update(vertex_report_json(result));
  attach_timing(report, flags, start);
  emit(report, flags);
  return 0;
}

int run_gen(int n, int k, int m, std::uint64_t seed, bool connected,
            const std::string& out_path) {
  GenOptions options;
  options.n = n;
  options.k = k;
  options.m = m;
  options.seed = seed;
  options.connected = connected;
  OrientedHypergraph g = generate_uniform(options);
  std::string text = "# hypercut gen n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " m=" + std::to_string(m) + " seed=" + std::to_string(seed) +
                     (connected ? " connected" : "") + "\n" + write_hypergraph(g);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

int run_verify(const std::string& path, int limit, int threads, std::optional<double> expect_h,
               std::optional<double> expect_lambda, const GlobalFlags& flags) {
  const auto start = Clock::now();
  LoadedInput input = load(path);
  const OrientedHypergraph& g = input.parsed.graph;
  auto uniformity = g.uniformity();
  if (!uniformity) fail(ErrorCode::NotUniform, "verify requires a uniform hypergraph");
  const int k = *uniformity;

  json checks = json::array();
  bool all_pass = true;
  auto add_check = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"name", name}, {"status", pass ? "pass" : "fail"}, {"detail", detail}});
    if (!pass) all_pass = false;
  };
  auto add_skip = [&](const std::string& name, const std::string& why) {
    checks.push_back({{"name", name}, {"status", "skipped"}, {"detail", why}});
  };

  Spectrum spec = spectrum(g);
  const int n = spec.size();

  add_check("eigenvalues_nonnegative", spec.eigenvalues[0] >= -1e-9,
            "lambda_1 = " + std::to_string(spec.eigenvalues[0]));

  {
    NormalizedLaplacian lap = normalized_laplacian(g);
    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      for (int row = 0; row < n; ++row) {
        double lhs = 0.0;
        for (int col = 0; col < n; ++col) lhs += lap.entries[row][col] * spec.eigenfunctions[i][col];
        const double residual = std::abs(lhs - spec.eigenvalues[i] * spec.eigenfunctions[i][row]);
        worst = std::max(worst, residual / (1.0 + std::abs(spec.eigenvalues[i])));
      }
    }
    ok = worst <= 1e-8;
    add_check("eigen_residuals", ok, "max scaled residual " + std::to_string(worst));
  }

  const auto components = g.connected_components();
  {
    int at_k = 0;
    for (double lambda : spec.eigenvalues)
      if (std::abs(lambda - k) <= 1e-7) ++at_k;
    add_check("multiplicity_of_k_equals_components", at_k == static_cast<int>(components.size()),
              "eigenvalues at k: " + std::to_string(at_k) +
                  ", components: " + std::to_string(components.size()));
  }

  std::optional<CheegerReport> exact;
  if (components.size() != 1) {
    add_skip("cheeger_bounds", "hypergraph is disconnected");
  } else if (k < 2) {
    add_skip("cheeger_bounds", "k = 1 degenerates the bounds");
  } else if (!g.degree_assumption_holds()) {
    add_skip("cheeger_bounds", "degree assumption fails");
  } else if (g.vertex_count() > limit) {
    add_skip("cheeger_bounds", "vertex count exceeds the exhaustive limit");
  } else {
    ClassicalView view(g);
    exact = cheeger_exact(view, SearchOptions{limit, threads});
    add_check("cheeger_lower_bound", exact->bounds.lower_holds,
              "h^2/(2(k-1)) = " + std::to_string(exact->bounds.lower_bound) + " vs gap " +
                  std::to_string(exact->bounds.gap));
    add_check("cheeger_upper_bound", exact->bounds.upper_holds,
              "gap " + std::to_string(exact->bounds.gap) + " vs 2(k-1)h = " +
                  std::to_string(exact->bounds.upper_bound));

    SpectralCutResult cuts = spectral_cut(view);
    const bool chain = !(cuts.sweep.h < exact->h) && !(cuts.sign.h < cuts.sweep.h);
    add_check("cut_ordering_chain", chain,
              "exact " + std::to_string(exact->h.value()) + " <= sweep " +
                  std::to_string(cuts.sweep.h.value()) + " <= sign " +
                  std::to_string(cuts.sign.h.value()));
  }

  if (k == 2 && g.all_signs_positive() && components.size() == 1 &&
      g.vertex_count() <= limit) {
    ClassicalView view(g);
    bool simple = true;
    try {
      const double lambda2 = normalized_graph_lambda2(view);
      const double gap = k - spec.eigenvalues[n - 2];
      add_check("graph_lambda2_oracle", std::abs(gap - lambda2) <= 1e-9,
                "k - lambda_{n-1} = " + std::to_string(gap) + ", graph lambda_2 = " +
                    std::to_string(lambda2));
    } catch (const Error&) {
      simple = false;
    }
    if (!simple) {
      add_skip("graph_lambda2_oracle", "input is not a simple graph");
    } else if (exact) {
      const Rational oracle = polya_szego_constant(view);
      add_check("polya_szego_oracle", oracle == exact->h,
                "oracle " + std::to_string(oracle.num) + "/" + std::to_string(oracle.den) +
                    ", exact " + std::to_string(exact->h.num) + "/" +
                    std::to_string(exact->h.den));
    }
  }

  if (expect_h) {
    if (exact)
      add_check("expected_h", std::abs(exact->h.value() - *expect_h) <= 1e-9,
                "expected " + std::to_string(*expect_h) + ", got " +
                    std::to_string(exact->h.value()));
    else
      add_check("expected_h", false, "exact h unavailable");
  }
  if (expect_lambda) {
    const double lambda = spec.eigenvalues[n - 2];
    add_check("expected_lambda", std::abs(lambda - *expect_lambda) <= 1e-9,
              "expected " + std::to_string(*expect_lambda) + ", got " + std::to_string(lambda));
  }

  json report = report_envelope("verify", input.bytes);
  report["n"] = g.vertex_count();
  report["m"] = g.edge_count();
  report["k"] = k;
  report["checks"] = checks;
  report["all_pass"] = all_pass;
  attach_timing(report, flags, start);
  emit(report, flags);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized-Laplacian spectra and Cheeger cuts for uniform hypergraphs"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--tsv", flags.tsv, "emit flat key\\tvalue lines instead of JSON");
  app.add_flag("--timing", flags.timing, "include wall-clock timing in reports");

  std::string path;
  std::string out_path;
  bool eigenfunctions = false;
  bool exact = false;
  bool spectral = false;
  int limit = 0;
  int threads = 1;
  int gen_n = 0, gen_k = 0, gen_m = 0;
  std::uint64_t seed = 1;
  bool connected = false;
  std::optional<double> expect_h;
  std::optional<double> expect_lambda;

  auto* info = app.add_subcommand("info", "structural summary of a hypergraph file");
  info->add_option("path", path)->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of the normalized Laplacian");
  spectrum_cmd->add_option("path", path)->required();
  spectrum_cmd->add_flag("--eigenfunctions", eigenfunctions, "include eigenfunctions");

  auto* cheeger_cmd = app.add_subcommand("cheeger", "Cheeger constant and bound checks");
  cheeger_cmd->add_option("path", path)->required();
  auto* exact_flag = cheeger_cmd->add_flag("--exact", exact, "exhaustive search (default)");
  cheeger_cmd->add_flag("--spectral", spectral, "sign and sweep cuts from the eigenfunction")
      ->excludes(exact_flag);
  cheeger_cmd->add_option("--limit", limit, "exhaustive size limit (default 24 or HYPERCUT_LIMIT)");
  cheeger_cmd->add_option("--threads", threads, "worker threads for the exhaustive search");

  auto* dual_cmd = app.add_subcommand("dual", "write the dual hypergraph and index mapping");
  dual_cmd->add_option("path", path)->required();
  dual_cmd->add_option("--out", out_path, "output file for the dual")->required();

  auto* vertex_cmd = app.add_subcommand("vertex-cut", "vertex Cheeger constant via the dual");
  vertex_cmd->add_option("path", path)->required();
  auto* vexact_flag = vertex_cmd->add_flag("--exact", exact, "exhaustive search (default)");
  vertex_cmd->add_flag("--spectral", spectral, "dual sign cut pulled back to edges")
      ->excludes(vexact_flag);
  vertex_cmd->add_option("--limit", limit, "exhaustive size limit (default 24 or HYPERCUT_LIMIT)");
  vertex_cmd->add_option("--threads", threads, "worker threads for the exhaustive search");

  auto* gen_cmd = app.add_subcommand("gen", "seeded random k-uniform hypergraph");
  gen_cmd->add_option("n", gen_n, "vertex count")->required();
  gen_cmd->add_option("k", gen_k, "edge cardinality")->required();
  gen_cmd->add_option("m", gen_m, "edge count")->required();
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_flag("--connected", connected, "rejection-sample until connected");
  gen_cmd->add_option("--out", out_path, "write to a file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "one-shot audit of spectrum and cut invariants");
  verify_cmd->add_option("path", path)->required();
  verify_cmd->add_option("--limit", limit, "exhaustive size limit (default 24 or HYPERCUT_LIMIT)");
  verify_cmd->add_option("--threads", threads, "worker threads for the exhaustive search");
  verify_cmd->add_option("--expect-h", [&expect_h](const std::vector<std::string>& values) {
    expect_h = std::stod(values.front());
    return true;
  }, "fail unless the exact Cheeger constant matches");
  verify_cmd->add_option("--expect-lambda", [&expect_lambda](const std::vector<std::string>& values) {
    expect_lambda = std::stod(values.front());
    return true;
  }, "fail unless the second largest eigenvalue matches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (limit == 0) limit = default_limit();
    if (threads < 1) fail(ErrorCode::UsageError, "--threads must be positive");
    if (*info) return run_info(path, flags);
    if (*spectrum_cmd) return run_spectrum(path, eigenfunctions, flags);
    if (*cheeger_cmd) return run_cheeger(path, spectral, limit, threads, flags);
    if (*dual_cmd) return run_dual(path, out_path, flags);
    if (*vertex_cmd) return run_vertex_cut(path, spectral, limit, threads, flags);
    if (*gen_cmd) return run_gen(gen_n, gen_k, gen_m, seed, connected, out_path);
    if (*verify_cmd) return run_verify(path, limit, threads, expect_h, expect_lambda, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
