#pragma once

// Seeded random instances for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "indlab/graph.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

inline indlab::ColoredGraph random_graph(Rng& rng, std::size_t n, std::size_t palette) {
  indlab::ColoredGraph g(n, palette);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.set_color(u, v, indlab::make_color(below(rng, palette)));
  return g;
}

/// Random pattern on k vertices; every pair is an edge with probability num/den.
inline indlab::Pattern random_pattern(Rng& rng, std::size_t k, std::size_t num = 1, std::size_t den = 2) {
  std::vector<indlab::Edge> edges;
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = u + 1; v < k; ++v)
      if (below(rng, den) < num) edges.push_back({u, v});
  if (edges.empty()) edges.push_back({0, 1});
  return indlab::Pattern::from_edges(k, edges);
}

/// Random connected pattern: a random spanning tree plus extra edges.
inline indlab::Pattern random_connected_pattern(Rng& rng, std::size_t k, std::size_t extra_num = 1,
                                                std::size_t extra_den = 3) {
  std::vector<indlab::Edge> edges;
  std::vector<std::vector<bool>> has(k, std::vector<bool>(k, false));
  for (std::size_t v = 1; v < k; ++v) {
    const std::size_t u = below(rng, v);
    edges.push_back({u, v});
    has[u][v] = true;
  }
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = u + 1; v < k; ++v)
      if (!has[u][v] && below(rng, extra_den) < extra_num) edges.push_back({u, v});
  return indlab::Pattern::from_edges(k, edges);
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
  return perm;
}

/// Blow-up-like host: vertex v starts in part v mod k, then `flips` random pairs get random colors.
inline indlab::ColoredGraph perturbed(Rng& rng, indlab::ColoredGraph g, std::size_t flips) {
  const std::size_t n = g.order();
  for (std::size_t f = 0; f < flips && n >= 2; ++f) {
    const std::size_t u = below(rng, n);
    std::size_t v = below(rng, n - 1);
    if (v >= u) ++v;
    g.set_color(u, v, indlab::make_color(below(rng, g.palette())));
  }
  return g;
}

}  // namespace gen
