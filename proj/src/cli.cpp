#include "afprov/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "afprov/critical.hpp"
#include "afprov/document.hpp"
#include "afprov/dot.hpp"
#include "afprov/error.hpp"
#include "afprov/formats.hpp"
#include "afprov/json_codec.hpp"
#include "afprov/oracle.hpp"
#include "afprov/server.hpp"

namespace afprov::cli {

namespace {

using json::Json;

struct InputSpec {
  std::string path;
  std::string format;  // empty: sniff
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& is) {
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

ArgumentationFramework load(const InputSpec& spec, std::istream& in) {
  std::optional<InputFormat> fmt;
  if (!spec.format.empty()) {
    fmt = parse_input_format(spec.format);
    if (!fmt) throw UsageError("unknown format '" + spec.format + "'");
  } else {
    fmt = sniff_format(spec.path);
    if (!fmt) fmt = InputFormat::Apx;
  }
  std::string text;
  if (spec.path == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(spec.path, std::ios::binary);
    if (!file) throw Error(ErrorCode::SchemaError, "cannot open '" + spec.path + "'");
    text = read_all(file);
  }
  switch (*fmt) {
    case InputFormat::Apx: return parse_apx(text);
    case InputFormat::Tgf: return parse_tgf(text);
    case InputFormat::Json: return parse_af_json(text);
  }
  return {};
}

std::size_t budget_from_env() {
  const char* raw = std::getenv("AF_PROV_BUDGET");
  if (!raw || !*raw) return kDefaultCandidateBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || raw[0] == '-') throw UsageError("AF_PROV_BUDGET must be a non-negative integer");
  return static_cast<std::size_t>(v);
}

Json with_schema(Json j) {
  j["schema"] = std::string(kSchemaVersion);
  return j;
}

const StableSolution& stable_at(const std::vector<StableSolution>& all, std::size_t i) {
  if (i == 0 || i > all.size()) {
    throw Error(ErrorCode::UnknownArgument, "no stable solution " + std::to_string(i) + " (" +
                                                std::to_string(all.size()) + " found)");
  }
  return all[i - 1];
}

std::vector<CriticalAttackSet> critical_for(const GroundedSolution& g, const StableSolution& s,
                                            Minimality m) {
  CriticalSearchOptions options;
  options.minimality = m;
  options.max_candidates = budget_from_env();
  return find_critical_sets(g, s, options);
}

Minimality minimality_of(const std::string& text) {
  auto m = parse_minimality(text);
  if (!m) throw UsageError("minimality must be 'cardinality' or 'subset'");
  return *m;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Grounded and stable solutions of argumentation frameworks with game provenance",
               "af-prov"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  InputSpec input;
  std::string output;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input.path, "Input file (.apx, .tgf, .json); '-' for stdin")->required();
    sub->add_option("--format", input.format, "Override the input format: apx, tgf, json");
    sub->add_option("-o,--output", output, "Write the result here instead of stdout");
  };

  std::string semantics = "grounded";
  auto* solve = app.add_subcommand("solve", "Grounded or stable solutions as JSON");
  add_io(solve);
  solve->add_option("--semantics", semantics, "grounded or stable")
      ->check(CLI::IsMember({"grounded", "stable"}));

  std::size_t stable_index = 0;
  std::size_t delta_index = 0;
  std::string minimality = "cardinality";
  bool emit_asp = false;
  auto* critical = app.add_subcommand("critical", "Minimal critical attack sets of one stable solution");
  add_io(critical);
  critical->add_option("--stable", stable_index, "1-based stable solution index")->required();
  critical->add_option("--minimality", minimality, "cardinality or subset")
      ->check(CLI::IsMember({"cardinality", "subset"}));
  critical->add_flag("--emit-asp", emit_asp, "Print a clingo program instead of solving");

  std::string to = "json";
  auto* overlay = app.add_subcommand("overlay", "Provenance overlay for a stable solution and critical set");
  add_io(overlay);
  overlay->add_option("--stable", stable_index, "1-based stable solution index")->required();
  overlay->add_option("--delta", delta_index, "1-based critical set index")->required();
  overlay->add_option("--minimality", minimality, "cardinality or subset")
      ->check(CLI::IsMember({"cardinality", "subset"}));
  overlay->add_option("--to", to, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* layout = app.add_subcommand("layout", "Layered layout of the grounded solution");
  add_io(layout);
  layout->add_option("--to", to, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  bool no_critical = false;
  auto* exporter = app.add_subcommand("export", "Full solution document, DOT, or a re-serialized AF");
  add_io(exporter);
  exporter->add_option("--to", to, "json, dot, apx or tgf")
      ->check(CLI::IsMember({"json", "dot", "apx", "tgf"}));
  exporter->add_option("--minimality", minimality, "cardinality or subset")
      ->check(CLI::IsMember({"cardinality", "subset"}));
  exporter->add_flag("--no-critical", no_critical, "Omit critical sets and overlays");

  std::size_t random_count = 0;
  std::uint64_t seed = 1;
  std::size_t max_args = 10;
  std::size_t max_oracle_candidates = 12;
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check the engines against brute force");
  auto* oracle_input = oracle_cmd->add_option("-i,--input", input.path, "Input file");
  oracle_cmd->add_option("--format", input.format, "Override the input format");
  oracle_cmd->add_option("-o,--output", output, "Write the report here instead of stdout");
  auto* random_opt = oracle_cmd->add_option("--random", random_count, "Check N random frameworks");
  oracle_cmd->add_option("--seed", seed, "Seed for --random");
  oracle_cmd->add_option("--max-args", max_args, "Largest random framework")->check(CLI::Range(2, 20));
  oracle_cmd->add_option("--max-candidates", max_oracle_candidates,
                         "Skip critical-set comparison above this many candidates")
      ->check(CLI::Range(0, 20));
  oracle_input->excludes(random_opt);

  server::HttpOptions http;
  std::size_t ttl = 3600;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", http.host, "Bind address");
  serve->add_option("--port", http.port, "Port; 0 picks a free one")->check(CLI::Range(0, 65535));
  serve->add_option("--static", http.static_dir, "Directory of explorer UI assets")
      ->check(CLI::ExistingDirectory);
  serve->add_option("--ttl", ttl, "Session lifetime in seconds");

  std::vector<const char*> argv{"af-prov"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  std::ostringstream result;
  int status = kOk;
  try {
    if (*solve) {
      const auto af = load(input, in);
      AnalysisOptions opts;
      opts.stable = semantics == "stable";
      if (opts.stable) {
        Json list = Json::array();
        for (const auto& s : enumerate_stable(af)) list.push_back(json::to_json(s));
        result << json::dump(with_schema({{"af", json::to_json(af)}, {"stable_solutions", list}}));
      } else {
        result << json::dump(
            with_schema({{"af", json::to_json(af)}, {"grounded", json::to_json(solve_grounded(af))}}));
      }
    } else if (*critical) {
      const auto af = load(input, in);
      const auto g = solve_grounded(af);
      const auto stable = enumerate_stable(g);
      const auto& s = stable_at(stable, stable_index);
      if (emit_asp) {
        result << emit_asp_program(af, s.extension);
      } else {
        const auto m = minimality_of(minimality);
        CriticalSetFamily family{s.index, m, critical_for(g, s, m)};
        result << json::dump(with_schema({{"critical_set", json::to_json(family)}}));
      }
    } else if (*overlay) {
      const auto af = load(input, in);
      const auto g = solve_grounded(af);
      const auto stable = enumerate_stable(g);
      const auto& s = stable_at(stable, stable_index);
      const auto deltas = critical_for(g, s, minimality_of(minimality));
      if (delta_index == 0 || delta_index > deltas.size()) {
        throw Error(ErrorCode::InvalidDelta, "no critical set " + std::to_string(delta_index) + " (" +
                                                 std::to_string(deltas.size()) + " found)");
      }
      const auto ov = build_overlay(g, s, deltas[delta_index - 1]);
      const auto lay = layout_overlay(ov);
      if (to == "dot") {
        result << export_dot(ov, lay);
      } else {
        result << json::dump(with_schema({{"overlay", json::to_json(ov)}, {"layout", json::to_json(lay)}}));
      }
    } else if (*layout) {
      const auto g = solve_grounded(load(input, in));
      const auto lay = layout_grounded(g);
      result << (to == "dot" ? export_dot(g, lay) : json::dump(with_schema({{"layout", json::to_json(lay)}})));
    } else if (*exporter) {
      const auto af = load(input, in);
      if (to == "apx") {
        result << write_apx(af);
      } else if (to == "tgf") {
        result << write_tgf(af);
      } else if (to == "dot") {
        const auto g = solve_grounded(af);
        result << export_dot(g, layout_grounded(g));
      } else {
        AnalysisOptions opts;
        opts.layouts = true;
        if (!no_critical) {
          opts.critical = minimality_of(minimality);
          opts.overlays = true;
        }
        opts.max_candidates = budget_from_env();
        result << export_json(analyze(af, opts));
      }
    } else if (*oracle_cmd) {
      std::vector<ArgumentationFramework> frameworks;
      if (!input.path.empty()) {
        frameworks.push_back(load(input, in));
      } else if (random_count > 0) {
        std::mt19937_64 rng(seed);
        oracle::RandomAfParams params;
        params.max_args = max_args;
        for (std::size_t k = 0; k < random_count; ++k) frameworks.push_back(oracle::random_af(rng, params));
      } else {
        throw UsageError("oracle needs -i FILE or --random N");
      }
      std::size_t checked = 0, skipped = 0;
      Json mismatches = Json::array();
      for (const auto& af : frameworks) {
        const auto report = oracle::cross_check(af, max_oracle_candidates);
        checked += report.critical_checked;
        skipped += report.critical_skipped;
        for (const auto& m : report.mismatches) {
          err << "mismatch: " << m << "\n";
          mismatches.push_back(m);
        }
      }
      if (!mismatches.empty()) status = kOracleMismatch;
      result << json::dump({{"frameworks", frameworks.size()},
                            {"critical_checked", checked},
                            {"critical_skipped", skipped},
                            {"mismatches", mismatches}});
    } else if (*serve) {
      server::ServiceOptions service_options;
      service_options.session_ttl = std::chrono::seconds(ttl);
      service_options.max_candidates = budget_from_env();
      server::ApiService service(service_options);
      server::HttpServer server(service, http);
      const int port = server.bind();
      if (port < 0) {
        err << "af-prov: cannot bind " << http.host << ":" << http.port << "\n";
        return kInputError;
      }
      err << "af-prov: listening on http://" << http.host << ":" << port << "\n";
      return server.listen() ? kOk : kInputError;
    }
  } catch (const UsageError& e) {
    err << "af-prov: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "af-prov: " << to_string(e.code()) << ": " << e.what() << "\n";
    const bool search_failed =
        e.code() == ErrorCode::NoCriticalSetFound || e.code() == ErrorCode::BudgetExceeded;
    return search_failed ? kNoCriticalSet : kInputError;
  }

  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary);
    file << result.str();
    if (!file) {
      err << "af-prov: cannot write '" << output << "'\n";
      return kInputError;
    }
  } else {
    out << result.str();
  }
  return status;
}

}  // namespace afprov::cli
