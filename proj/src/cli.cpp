#include "indlab/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "indlab/error.hpp"
#include "indlab/io.hpp"
#include "indlab/report.hpp"

namespace indlab {

namespace {

struct Options {
  std::string pattern;
  std::string graph;
  std::string out;
  std::string report;
  std::string mode = "hillclimb";
  std::string format = "json";
  std::optional<std::size_t> n;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::uint64_t> budget;
  std::size_t kmin = 11;
  std::size_t kmax = 200;
  std::size_t grid = 60;
  unsigned precision = 256;
  std::optional<std::size_t> threads;
  bool timing = false;
  bool separate = false;
  bool first_improvement = false;
  bool no_zykov = false;
};

struct Outcome {
  Json config;
  Json payload;
  int code = kExitOk;
};

std::size_t thread_count(const Options& o) {
  if (o.threads) return std::max<std::size_t>(1, *o.threads);
  if (const char* env = std::getenv("INDLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("INDLAB_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

void require(bool present, const char* flag, const std::string& command) {
  if (!present) throw ValidationError(command + " needs " + flag);
}

void check_writable(const std::string& path) {
  if (path.empty()) return;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent))
    throw ValidationError("output directory does not exist: " + parent.string());
}

ColoredGraph load_graph_for(const Pattern& p, const std::string& path) {
  ColoredGraph h = read_graph(path);
  if (h.palette() < p.palette()) {
    // widen so pattern colors index the host palette
    ColoredGraph wide(h.order(), p.palette());
    for (std::size_t u = 0; u < h.order(); ++u)
      for (std::size_t v = u + 1; v < h.order(); ++v) wide.set_color(u, v, h.color(u, v));
    return wide;
  }
  return h;
}

Outcome count_command(const Options& o) {
  require(!o.pattern.empty(), "--pattern", "count");
  require(!o.graph.empty(), "--graph", "count");
  const Pattern p = load_pattern(o.pattern);
  const ColoredGraph h = load_graph_for(p, o.graph);
  const RoleStats s = role_stats(p, h);
  const GlobalStats g = global_stats(p, h, s);
  const auto backtrack = count_induced(p, h, {CountMethod::Backtracking, thread_count(o)});
  if (backtrack != g.copies) throw InvariantViolation("role statistics and direct count disagree");
  return {Json{{"pattern", o.pattern}, {"graph", o.graph}}, count_json(p, h, s, g)};
}

Json size_json(const Integer& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

Outcome blowup_command(const Options& o) {
  require(!o.pattern.empty(), "--pattern", "blowup");
  require(o.n.has_value(), "--n", "blowup");
  check_writable(o.out);
  const Pattern p = load_pattern(o.pattern);
  const std::size_t n = *o.n;
  const std::size_t k = p.order();
  const BlowupTree tree = plan_blowup(p, n);
  const ColoredGraph iterated = realize(p, tree);
  const std::uint64_t iterated_count = count_induced(p, iterated);
  auto rho = [&](std::uint64_t c) { return k <= n ? Rational(Integer(c), binomial(n, k)) : Rational(0); };

  Json payload{{"n", n}, {"k", k}};
  ColoredGraph written = iterated;
  if (o.separate) {
    const SeparatePlan plan = plan_separate(p, n);
    written = realize(p, plan);
    const std::uint64_t count = count_induced(p, written);
    Json sides = Json::array();
    for (std::size_t s = 0; s < plan.sides.size(); ++s) {
      Json vs = Json::array();
      for (auto v : plan.components[s]) vs.push_back(v + 1);
      sides.push_back(Json{{"vertices", vs}, {"size", plan.trees[s].size}, {"tree", tree_json(plan.trees[s])}});
    }
    payload["plan"] = "separate";
    payload["sides"] = sides;
    payload["exactCount"] = count;
    payload["rho"] = rational_json(rho(count));
    payload["iteratedCount"] = iterated_count;
  } else {
    payload["plan"] = "iterated";
    payload["tree"] = tree_json(tree);
    payload["exactCount"] = iterated_count;
    payload["recursiveLowerBound"] = size_json(recursive_lower_bound(tree));
    payload["rho"] = rational_json(rho(iterated_count));
  }
  bool isolated = false;
  for (std::size_t i = 0; i < k; ++i) isolated = isolated || p.degree(i) == 0;
  if (!isolated) {
    const DensityFormula f = limit_density(p);
    payload["a"] = rational_json(f.a);
    payload["oneBlowupCoefficient"] = rational_json(f.one_blowup_coefficient);
    if (!p.is_connected()) payload["separateCoefficient"] = rational_json(f.separate_coefficient);
  }
  if (!o.out.empty()) write_graph(o.out, written);
  return {Json{{"pattern", o.pattern}, {"n", n}, {"separate", o.separate}, {"out", o.out}}, payload};
}

Outcome audit_command(const Options& o) {
  require(!o.pattern.empty(), "--pattern", "audit");
  require(!o.graph.empty(), "--graph", "audit");
  const Pattern p = load_pattern(o.pattern);
  const ColoredGraph h = load_graph_for(p, o.graph);
  const Decomposition d = bound_audit(p, h);
  Outcome r{Json{{"pattern", o.pattern}, {"graph", o.graph}}, audit_json(d)};
  if (!r.payload["violations"].empty()) r.code = kExitInvariant;
  return r;
}

Outcome exact_outcome(const Options& o, const Pattern& p, Json config) {
  ExactConfig c;
  if (o.budget) c.node_budget = *o.budget;
  c.threads = thread_count(o);
  const ExactResult r = exact_search(p, *o.n, c);
  if (!o.out.empty() && !r.witnesses.empty()) write_graph(o.out, r.witnesses.front());
  config["budget"] = c.node_budget;
  return {config, exact_json(r), r.complete ? kExitOk : kExitBudget};
}

Outcome search_command(const Options& o) {
  require(!o.pattern.empty(), "--pattern", "search");
  require(o.n.has_value(), "--n", "search");
  check_writable(o.out);
  const Pattern p = load_pattern(o.pattern);
  Json config{{"pattern", o.pattern}, {"n", *o.n}, {"mode", o.mode}, {"seed", o.seed}};
  if (o.mode == "exact") return exact_outcome(o, p, config);
  SearchConfig c;
  c.seed = o.seed;
  if (o.budget) c.restarts = *o.budget;
  c.steepest = !o.first_improvement;
  c.zykov_moves = !o.no_zykov;
  c.threads = thread_count(o);
  config["budget"] = c.restarts;
  config["steepest"] = c.steepest;
  config["zykov"] = c.zykov_moves;
  Json payload;
  if (o.mode == "beat-blowup") {
    const BeatReport b = beat_blowup(p, *o.n, c);
    payload = search_json(b.search);
    payload["verdict"] = to_string(b.verdict);
    if (!o.out.empty()) write_graph(o.out, b.search.best);
  } else {
    const SearchReport s = hillclimb(p, *o.n, c);
    payload = search_json(s);
    if (!o.out.empty()) write_graph(o.out, s.best);
  }
  return {config, payload};
}

Outcome exact_command(const Options& o) {
  require(!o.pattern.empty(), "--pattern", "exact");
  require(o.n.has_value(), "--n", "exact");
  check_writable(o.out);
  const Pattern p = load_pattern(o.pattern);
  return exact_outcome(o, p, Json{{"pattern", o.pattern}, {"n", *o.n}});
}

Outcome verify_command(const Options& o) {
  BatteryConfig c;
  c.kmin = o.kmin;
  c.kmax = o.kmax;
  c.grid = o.grid;
  c.precision = o.precision;
  c.seed = o.seed;
  c.threads = thread_count(o);
  const BatteryReport r = inequality_battery(c);
  const PropertiesReport props = p_properties(60, 60);
  Outcome out{Json{{"kmin", c.kmin}, {"kmax", c.kmax}, {"grid", c.grid}, {"precision", c.precision}, {"seed", c.seed}},
              battery_json(r, props)};
  if (!r.all_pass() || !props.ok()) out.code = kExitInvariant;
  return out;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting, constructions, audits, search and inequality checks for rainbow pattern inducibility",
               "indlab"};
  app.set_config("--config", "", "Read options from a file of key = value lines");
  app.require_subcommand(1);
  Options o;
  app.add_option("--pattern", o.pattern, "Pattern file, or clique:K, path:K, cycle:K, matching:M");
  app.add_option("--graph", o.graph, "Host graph file");
  app.add_option("-n,--n", o.n, "Host order");
  app.add_option("--out", o.out, "Write the constructed or best graph here");
  app.add_option("--report", o.report, "Write the report here instead of stdout");
  app.add_option("--seed", o.seed, "Seed for all randomness")->capture_default_str();
  app.add_option("--budget", o.budget, "Restarts (search) or nodes (exact)");
  app.add_option("--mode", o.mode, "Search mode")
      ->check(CLI::IsMember({"hillclimb", "exact", "beat-blowup"}))
      ->capture_default_str();
  app.add_option("--kmin", o.kmin, "Smallest k for verify")->capture_default_str();
  app.add_option("--kmax", o.kmax, "Largest k for verify")->capture_default_str();
  app.add_option("--grid", o.grid, "Grid resolution for verify")->capture_default_str();
  app.add_option("--precision", o.precision, "Enclosure precision in bits")->capture_default_str();
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads (default: INDLAB_THREADS, else 1)");
  app.add_flag("--timing", o.timing, "Add wall-clock timestamps to the report");
  app.add_flag("--separate", o.separate, "blowup: side-by-side blow-ups of the components");
  app.add_flag("--first-improvement", o.first_improvement, "search: take the first improving move");
  app.add_flag("--no-zykov", o.no_zykov, "search: recolor moves only");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"count", "Count induced copies and report role statistics"},
      {"blowup", "Build a blow-up of the pattern and count it"},
      {"audit", "Decompose copies over the role partition and check the counting bounds"},
      {"search", "Local search (or exhaustive search) for hosts with many copies"},
      {"verify", "Run the exact inequality battery"},
      {"exact", "Exhaustive search for the largest count at order n"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto started = std::chrono::steady_clock::now();
  const std::string started_at = o.timing ? utc_now() : std::string();
  try {
    check_writable(o.report);
    Outcome r;
    if (command == "count") r = count_command(o);
    else if (command == "blowup") r = blowup_command(o);
    else if (command == "audit") r = audit_command(o);
    else if (command == "search") r = search_command(o);
    else if (command == "verify") r = verify_command(o);
    else r = exact_command(o);
    r.config["format"] = o.format;

    Json report{{"schemaVersion", kSchemaVersion}, {"toolVersion", kToolVersion}, {"command", command}, {"config", r.config}};
    if (o.timing) {
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      report["timing"] = Json{{"startedAt", started_at}, {"elapsedSeconds", seconds}, {"threads", thread_count(o)}};
    }
    report["payload"] = r.payload;
    const Format format = o.format == "table" ? Format::Table : o.format == "csv" ? Format::Csv : Format::Json;
    const std::string text = render(report, format);
    if (o.report.empty()) {
      out << text;
    } else {
      std::ofstream file(o.report, std::ios::binary);
      if (!file) throw ValidationError("cannot write " + o.report);
      file << text;
    }
    if (r.code == kExitBudget) err << "budget exhausted; partial results written\n";
    return r.code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CanonicalizationLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"indlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace indlab
