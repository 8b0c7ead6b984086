#include "indlab/report.hpp"

#include <algorithm>
#include <sstream>

#include "indlab/io.hpp"

namespace indlab {

Json rational_json(const Rational& q) { return Json{{"exact", exact_string(q)}, {"decimal", decimal_string(q, 12)}}; }

Json pattern_json(const Pattern& p) {
  Json edges = Json::array();
  for (std::size_t e = 0; e < p.edges().size(); ++e)
    edges.push_back({p.edges()[e].u + 1, p.edges()[e].v + 1, color_id(p.edge_colors()[e])});
  return Json{{"k", p.order()}, {"edges", edges}, {"connected", p.is_connected()}, {"clique", p.is_clique()}};
}

Json graph_json(const ColoredGraph& g) {
  Json pairs = Json::array();
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.color(u, v) != kEmpty) pairs.push_back({u + 1, v + 1, color_id(g.color(u, v))});
  return Json{{"n", g.order()}, {"palette", g.palette()}, {"pairs", pairs}};
}

Json tree_json(const BlowupTree& t) {
  Json j{{"size", t.size}};
  if (!t.leaf()) {
    Json parts = Json::array();
    for (const auto& c : t.parts) parts.push_back(tree_json(c));
    j["parts"] = parts;
  }
  return j;
}

Json count_json(const Pattern& p, const ColoredGraph& h, const RoleStats& s, const GlobalStats& g) {
  Json per = Json::array();
  for (std::size_t x = 0; x < s.n; ++x) {
    Json roles = Json::array();
    Json sizes = Json::array();
    for (std::size_t i = 0; i < s.k; ++i) {
      roles.push_back(s.d(x, i));
      sizes.push_back(s.N(x, i).size());
    }
    Json colors = Json::array();
    for (std::size_t c = 0; c < s.palette; ++c) colors.push_back(s.color_degree(x, make_color(c)));
    per.push_back(Json{{"vertex", x + 1},
                       {"d", s.degrees[x] / std::max<std::uint64_t>(1, s.automorphisms)},
                       {"roleDegrees", roles},
                       {"roleNeighbourhoods", sizes},
                       {"secondRole", s.second_roles.empty() ? 0 : s.second_roles[x] + 1},
                       {"colorDegrees", colors}});
  }
  return Json{{"pattern", pattern_json(p)},
              {"n", h.order()},
              {"I", g.copies},
              {"automorphisms", s.automorphisms},
              {"rho", rational_json(g.rho)},
              {"alpha", rational_json(g.alpha)},
              {"beta", rational_json(g.beta)},
              {"z", rational_json(g.z)},
              {"perVertex", per}};
}

Json audit_json(const Decomposition& d) {
  Json sizes = Json::array();
  for (auto s : d.partition.sizes) sizes.push_back(s);
  Json margins = Json::array();
  Json violations = Json::array();
  for (const auto& c : d.bounds.checks) {
    margins.push_back(Json{{"name", c.name},
                           {"evaluated", c.evaluated},
                           {"violated", c.violated},
                           {"minMargin", c.min_margin ? Json(exact_string(*c.min_margin)) : Json(nullptr)},
                           {"tightest", c.tightest},
                           {"witness", c.witness}});
    if (c.violated > 0) violations.push_back(c.name + ": " + c.witness);
  }
  Json j{{"n", d.stats.n},
         {"k", d.stats.k},
         {"I", d.global.copies},
         {"partitionSizes", sizes},
         {"hm", d.split.hm},
         {"hg", d.split.hg},
         {"hb", d.split.hb},
         {"D", d.pairs.pairs.size()},
         {"d0", d.pairs.d0},
         {"d1", d.pairs.d1},
         {"d2", d.pairs.d2},
         {"delta", rational_json(d.pairs.delta)},
         {"deltaMax", rational_json(d.pairs.delta_max)},
         {"alpha", rational_json(d.global.alpha)},
         {"beta", rational_json(d.global.beta)},
         {"z", rational_json(d.global.z)}};
  if (d.sided) {
    const auto& w = *d.sided;
    Json bad = Json::array();
    for (const auto& v : w.violations) {
      Json vs = Json::array();
      for (auto x : v.vertices) vs.push_back(x + 1);
      bad.push_back(Json{{"vertices", vs}, {"misalignedPairs", v.misaligned_pairs}, {"required", v.required}});
      violations.push_back("bad copy with too few misaligned pairs");
    }
    j["mode"] = w.mode == AuditMode::Clique ? "clique" : "connected";
    j["J1"] = w.j1;
    j["J2"] = w.j2;
    j["S"] = w.s;
    j["J"] = w.j;
    j["requiredPerBadCopy"] = w.required;
    j["fewestPerBadCopy"] = w.fewest ? Json(*w.fewest) : Json(nullptr);
    j["badCopyViolations"] = bad;
  } else {
    j["mode"] = nullptr;
  }
  j["boundMargins"] = margins;
  j["violations"] = violations;
  return j;
}

namespace {

Json moves_json(const std::vector<MoveRecord>& moves) {
  Json out = Json::array();
  for (const auto& m : moves) {
    if (m.kind == MoveRecord::Kind::Recolor)
      out.push_back(Json{{"kind", "recolor"}, {"u", m.a + 1}, {"v", m.b + 1}, {"color", color_id(m.color)}, {"count", m.count}});
    else
      out.push_back(Json{{"kind", "zykov"}, {"keep", m.a + 1}, {"replace", m.b + 1}, {"count", m.count}});
  }
  return out;
}

}  // namespace

Json search_json(const SearchReport& r) {
  Json restarts = Json::array();
  for (const auto& s : r.restarts)
    restarts.push_back(Json{{"index", s.index},
                            {"start", to_string(s.start)},
                            {"initial", s.initial},
                            {"final", s.final},
                            {"moves", s.moves}});
  return Json{{"n", r.n},
              {"seed", r.seed},
              {"bestCount", r.best_count},
              {"bestRho", rational_json(r.best_rho)},
              {"comparator", r.comparator},
              {"bestRestart", r.best_restart},
              {"iterations", r.iterations},
              {"restarts", restarts},
              {"moves", moves_json(r.moves)},
              {"best", graph_json(r.best)}};
}

Json exact_json(const ExactResult& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(graph_json(w));
  return Json{{"n", r.n},
              {"complete", r.complete},
              {"optimum", r.optimum},
              {"rho", rational_json(r.rho)},
              {"comparator", r.comparator},
              {"nodes", r.nodes},
              {"leaves", r.leaves},
              {"witnessClasses", r.witnesses.size()},
              {"witnesses", witnesses}};
}

Json battery_json(const BatteryReport& r, const PropertiesReport& props) {
  Json minimal = Json::array();
  for (const auto& m : r.minimal_c)
    minimal.push_back(Json{{"claim", m.claim},
                           {"minimalC", decimal_string(m.minimal, 8)},
                           {"limitLow", decimal_string(m.limit.lo, 12)},
                           {"limitHigh", decimal_string(m.limit.hi, 12)},
                           {"stated", m.stated}});
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json params = Json::object();
    for (const auto& [k, v] : c.parameters) params[k] = v;
    checks.push_back(Json{{"item", c.item},
                          {"name", c.name},
                          {"statement", c.statement},
                          {"parameters", params},
                          {"relation", to_string(c.relation)},
                          {"method", to_string(c.method)},
                          {"verdict", to_string(c.verdict)},
                          {"lhsLow", decimal_string(c.lhs.lo, 12)},
                          {"lhsHigh", decimal_string(c.lhs.hi, 12)},
                          {"rhsLow", decimal_string(c.rhs.lo, 12)},
                          {"rhsHigh", decimal_string(c.rhs.hi, 12)},
                          {"margin", decimal_string(c.margin, 6)},
                          {"precision", c.precision},
                          {"requiredPrecision", c.required_precision}});
  }
  Json failures = Json::array();
  for (const auto& f : props.failures) failures.push_back(f);
  return Json{{"kmin", r.config.kmin},
              {"kmax", r.config.kmax},
              {"grid", r.config.grid},
              {"precision", r.config.precision},
              {"total", r.checks.size()},
              {"pass", r.count(CheckVerdict::Pass)},
              {"fail", r.count(CheckVerdict::Fail)},
              {"indeterminate", r.count(CheckVerdict::Indeterminate)},
              {"overallMinimalC", decimal_string(r.overall_minimal_c, 8)},
              {"minimalC", minimal},
              {"pProperties",
               Json{{"qmax", props.qmax},
                    {"tmax", props.tmax},
                    {"oracleChecked", props.oracle_checked},
                    {"productChecked", props.product_checked},
                    {"amgmChecked", props.amgm_checked},
                    {"boundaryChecked", props.boundary_checked},
                    {"ok", props.ok()},
                    {"failures", failures}}},
              {"checks", checks}};
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("exact") && v.size() == 2) return v["exact"].get<std::string>();
  return v.dump();
}

bool rows_of_objects(const Json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

std::vector<std::string> columns(const Json& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows)
    for (const auto& [k, _] : r.items())
      if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void table(std::ostringstream& out, const Json& rows) {
  const auto cols = columns(rows);
  std::vector<std::size_t> width(cols.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(r.contains(cols[c]) ? cell(r[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) text += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << text << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

}  // namespace

std::string render(const Json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  const Json& payload = report["payload"];
  std::ostringstream out;
  if (format == Format::Csv) {
    const Json* main = nullptr;
    for (const auto& [_, v] : payload.items())
      if (rows_of_objects(v) && (!main || v.size() > main->size())) main = &v;
    if (!main) {
      out << "key,value\n";
      for (const auto& [k, v] : payload.items())
        if (!v.is_array()) out << csv_escape(k) << ',' << csv_escape(cell(v)) << '\n';
      return out.str();
    }
    const auto cols = columns(*main);
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_escape(cols[c]);
    out << '\n';
    for (const auto& r : *main) {
      for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_escape(r.contains(cols[c]) ? cell(r[cols[c]]) : "");
      out << '\n';
    }
    return out.str();
  }
  out << report["command"].get<std::string>() << '\n';
  std::size_t key_width = 0;
  for (const auto& [k, v] : payload.items())
    if (!rows_of_objects(v)) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : payload.items())
    if (!rows_of_objects(v)) out << "  " << k << std::string(key_width - k.size() + 2, ' ') << cell(v) << '\n';
  for (const auto& [k, v] : payload.items())
    if (rows_of_objects(v)) {
      out << '\n' << k << '\n';
      table(out, v);
    }
  return out.str();
}

}  // namespace indlab
