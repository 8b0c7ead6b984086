#include "indlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "indlab/error.hpp"

namespace indlab {

ColoredGraph::ColoredGraph(std::size_t n, std::size_t palette)
    : n_(n), palette_(palette), cells_(n * n, kEmpty) {
  if (palette == 0) throw ValidationError("palette must contain the empty color");
}

void ColoredGraph::set_color(std::size_t u, std::size_t v, Color c) {
  if (u >= n_ || v >= n_) throw ValidationError("vertex out of range");
  if (u == v) throw ValidationError("diagonal pairs carry no color");
  if (color_id(c) >= palette_)
    throw ValidationError("color id " + std::to_string(color_id(c)) + " outside palette of size " +
                          std::to_string(palette_));
  cells_[u * n_ + v] = c;
  cells_[v * n_ + u] = c;
}

ColoredGraph ColoredGraph::induced(const std::vector<std::size_t>& vertices) const {
  ColoredGraph out(vertices.size(), palette_);
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      out.set_color(a, b, color(vertices[a], vertices[b]));
  return out;
}

ColoredGraph ColoredGraph::permuted(const std::vector<std::size_t>& perm) const {
  ColoredGraph out(n_, palette_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v) out.set_color(perm[u], perm[v], color(u, v));
  return out;
}

Pattern Pattern::from_edges(std::size_t k, const std::vector<Edge>& edges) {
  std::vector<Color> colors;
  colors.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) colors.push_back(make_color(i + 1));
  return Pattern(k, edges, std::move(colors));
}

Pattern::Pattern(std::size_t k, std::vector<Edge> edges, std::vector<Color> colors)
    : k_(k), edges_(std::move(edges)), colors_(std::move(colors)), degrees_(k, 0) {
  if (k_ < 2) throw ValidationError("pattern needs at least 2 vertices");
  if (colors_.size() != edges_.size()) throw ValidationError("one color per edge required");
  std::set<Edge> seen_edges;
  std::set<std::uint16_t> seen_colors;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& [u, v] = edges_[e];
    if (u >= k_ || v >= k_) throw ValidationError("edge endpoint outside [k]");
    if (u == v) throw ValidationError("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!seen_edges.insert(edges_[e]).second)
      throw ValidationError("duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    if (colors_[e] == kEmpty) throw ValidationError("edges cannot carry the empty color");
    if (!seen_colors.insert(color_id(colors_[e])).second)
      throw ValidationError("duplicate color " + std::to_string(color_id(colors_[e])) +
                            ": pattern is not rainbow");
    palette_ = std::max<std::size_t>(palette_, color_id(colors_[e]) + 1U);
    ++degrees_[u];
    ++degrees_[v];
  }
  view_ = ColoredGraph(k_, palette_);
  by_color_.assign(palette_, std::nullopt);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    view_.set_color(edges_[e].u, edges_[e].v, colors_[e]);
    by_color_[color_id(colors_[e])] = edges_[e];
  }
}

std::size_t Pattern::min_degree() const noexcept { return *std::min_element(degrees_.begin(), degrees_.end()); }

bool Pattern::is_connected() const { return components().size() == 1; }

std::vector<std::vector<std::size_t>> Pattern::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(k_, false);
  for (std::size_t s = 0; s < k_; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t w = 0; w < k_; ++w) {
        if (!seen[w] && w != comp[head] && color(comp[head], w) != kEmpty) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Pattern Pattern::sub_pattern(const std::vector<std::size_t>& vertices) const {
  std::vector<Edge> edges;
  std::vector<Color> colors;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const Color c = color(vertices[a], vertices[b]);
      if (c == kEmpty) continue;
      edges.push_back({a, b});
      colors.push_back(c);
    }
  return Pattern(vertices.size(), std::move(edges), std::move(colors));
}

std::optional<Edge> Pattern::endpoints(Color c) const noexcept {
  if (color_id(c) >= by_color_.size()) return std::nullopt;
  return by_color_[color_id(c)];
}

Pattern rainbow_clique(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) edges.push_back({i, j});
  return Pattern::from_edges(k, edges);
}

Pattern rainbow_path(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return Pattern::from_edges(k, edges);
}

Pattern rainbow_cycle(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, k - 1});
  return Pattern::from_edges(k, edges);
}

Pattern rainbow_matching(std::size_t count) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count; ++i) edges.push_back({2 * i, 2 * i + 1});
  return Pattern::from_edges(2 * count, edges);
}

ValidationReport validate_pattern(const Pattern& p) {
  if (p.order() < 2) throw ValidationError("pattern needs at least 2 vertices");
  std::set<std::uint16_t> colors;
  for (Color c : p.edge_colors()) {
    if (c == kEmpty || !colors.insert(color_id(c)).second)
      throw ValidationError("pattern edge colors are not distinct");
  }
  ValidationReport r;
  r.rainbow = true;
  r.connected = p.is_connected();
  r.min_degree = p.min_degree();
  r.k = p.order();
  return r;
}

DistanceProfile distance_profile(const Pattern& p, std::size_t source) {
  const std::size_t k = p.order();
  if (source >= k) throw ValidationError("source vertex outside [k]");
  DistanceProfile out;
  out.source = source;
  out.dist.assign(k, kUnreachable);
  out.dist[source] = 0;
  std::deque<std::size_t> queue{source};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < k; ++w) {
      if (w == u || out.dist[w] != kUnreachable || p.color(u, w) == kEmpty) continue;
      out.dist[w] = out.dist[u] + 1;
      queue.push_back(w);
    }
  }
  for (std::size_t w = 0; w < k; ++w) {
    const std::size_t d = out.dist[w];
    if (d == kUnreachable || d == 0) continue;
    if (out.layers.size() < d) out.layers.resize(d, 0);
    ++out.layers[d - 1];
    out.eccentricity = std::max(out.eccentricity, d);
  }
  return out;
}

}  // namespace indlab
