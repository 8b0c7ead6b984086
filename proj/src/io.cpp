#include "indlab/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "indlab/error.hpp"

namespace indlab {

namespace {

constexpr std::size_t kMaxOrder = 4096;

struct Line {
  std::size_t number = 0;
  std::vector<std::string> fields;
};

/// Next non-blank, comment-stripped line, split on whitespace.
bool next_line(std::istream& in, Line& line) {
  std::string text;
  while (std::getline(in, text)) {
    ++line.number;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream words(text);
    line.fields.clear();
    for (std::string w; words >> w;) line.fields.push_back(w);
    if (!line.fields.empty()) return true;
  }
  return false;
}

std::size_t number(const std::string& s, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) throw ParseError(line, std::string("expected ") + what + ", got '" + s + "'");
  return value;
}

std::size_t keyed(const std::string& field, const std::string& key, std::size_t line) {
  if (field.rfind(key + "=", 0) != 0) throw ParseError(line, "expected " + key + "=<int>, got '" + field + "'");
  return number(field.substr(key.size() + 1), line, key.c_str());
}

std::size_t vertex(const std::string& s, std::size_t bound, std::size_t line) {
  const std::size_t v = number(s, line, "a vertex");
  if (v < 1 || v > bound) throw ParseError(line, "vertex " + s + " outside 1.." + std::to_string(bound));
  return v - 1;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return in;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
  if (!out) throw ValidationError("write failed: " + path);
}

}  // namespace

Pattern parse_pattern(std::istream& in) {
  Line line;
  if (!next_line(in, line)) throw ParseError(line.number + 1, "empty pattern file");
  if (line.fields.size() != 2 || line.fields[0] != "pattern") throw ParseError(line.number, "expected 'pattern k=<int>'");
  const std::size_t k = keyed(line.fields[1], "k", line.number);
  if (k < 2 || k > 64) throw ParseError(line.number, "k must lie in 2..64");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (next_line(in, line)) {
    if (line.fields.size() != 2) throw ParseError(line.number, "expected '<u> <v>'");
    Edge e{vertex(line.fields[0], k, line.number), vertex(line.fields[1], k, line.number)};
    if (e.u == e.v) throw ParseError(line.number, "loop at vertex " + line.fields[0]);
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert(e).second) throw ParseError(line.number, "duplicate edge " + line.fields[0] + " " + line.fields[1]);
    edges.push_back(e);
  }
  if (edges.empty()) throw ValidationError("pattern has no edges");
  return Pattern::from_edges(k, edges);
}

ColoredGraph parse_graph(std::istream& in) {
  Line line;
  if (!next_line(in, line)) throw ParseError(line.number + 1, "empty graph file");
  if (line.fields.size() != 3 || line.fields[0] != "graph")
    throw ParseError(line.number, "expected 'graph n=<int> palette=<int>'");
  const std::size_t n = keyed(line.fields[1], "n", line.number);
  const std::size_t palette = keyed(line.fields[2], "palette", line.number);
  if (n > kMaxOrder) throw ParseError(line.number, "n above " + std::to_string(kMaxOrder));
  if (palette < 1 || palette > 65535) throw ParseError(line.number, "palette must lie in 1..65535");
  ColoredGraph g(n, palette);
  std::vector<bool> seen(n * n, false);
  while (next_line(in, line)) {
    if (line.fields.size() != 3) throw ParseError(line.number, "expected '<u> <v> <color>'");
    std::size_t u = vertex(line.fields[0], n, line.number);
    std::size_t v = vertex(line.fields[1], n, line.number);
    const std::size_t c = number(line.fields[2], line.number, "a color id");
    if (u == v) throw ParseError(line.number, "loop at vertex " + line.fields[0]);
    if (c >= palette) throw ParseError(line.number, "color " + line.fields[2] + " >= palette " + std::to_string(palette));
    if (u > v) std::swap(u, v);
    if (seen[u * n + v]) throw ParseError(line.number, "duplicate pair " + line.fields[0] + " " + line.fields[1]);
    seen[u * n + v] = true;
    g.set_color(u, v, make_color(c));
  }
  return g;
}

std::string format_pattern(const Pattern& p) {
  std::vector<const Edge*> by_color(p.edges().size() + 1, nullptr);
  for (std::size_t e = 0; e < p.edges().size(); ++e) {
    const std::size_t c = color_id(p.edge_colors()[e]);
    if (c >= by_color.size() || by_color[c]) throw ValidationError("pattern colors must be exactly 1..|E| to be written");
    by_color[c] = &p.edges()[e];
  }
  std::ostringstream out;
  out << "pattern k=" << p.order() << '\n';
  for (std::size_t c = 1; c < by_color.size(); ++c) out << by_color[c]->u + 1 << ' ' << by_color[c]->v + 1 << '\n';
  return out.str();
}

std::string format_graph(const ColoredGraph& g) {
  std::ostringstream out;
  out << "graph n=" << g.order() << " palette=" << g.palette() << '\n';
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.color(u, v) != kEmpty) out << u + 1 << ' ' << v + 1 << ' ' << color_id(g.color(u, v)) << '\n';
  return out.str();
}

Pattern read_pattern(const std::string& path) {
  auto in = open_in(path);
  return parse_pattern(in);
}

ColoredGraph read_graph(const std::string& path) {
  auto in = open_in(path);
  return parse_graph(in);
}

void write_pattern(const std::string& path, const Pattern& p) { write_text(path, format_pattern(p)); }
void write_graph(const std::string& path, const ColoredGraph& g) { write_text(path, format_graph(g)); }

Pattern load_pattern(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    std::size_t size = 0;
    const std::string arg = spec.substr(colon + 1);
    const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), size);
    const bool numeric = ec == std::errc() && end == arg.data() + arg.size();
    if (numeric && kind == "clique" && size >= 2 && size <= 64) return rainbow_clique(size);
    if (numeric && kind == "path" && size >= 2 && size <= 64) return rainbow_path(size);
    if (numeric && kind == "cycle" && size >= 3 && size <= 64) return rainbow_cycle(size);
    if (numeric && kind == "matching" && size >= 1 && size <= 32) return rainbow_matching(size);
    if (kind == "clique" || kind == "path" || kind == "cycle" || kind == "matching")
      throw ValidationError("bad built-in pattern '" + spec + "'");
  }
  return read_pattern(spec);
}

}  // namespace indlab
