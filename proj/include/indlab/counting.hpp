#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "indlab/embedding.hpp"
#include "indlab/exact.hpp"
#include "indlab/graph.hpp"
#include "indlab/vertex_set.hpp"

namespace indlab {

enum class CountMethod {
  Backtracking,
  /// Tries every k-subset and every bijection onto it. Independent of the
  /// embedding search; meant for cross-checking at small binom(n, k).
  SubsetOracle,
};

struct CountOptions {
  CountMethod method = CountMethod::Backtracking;
  std::size_t threads = 1;
};

/// Number of color-preserving injections [k] -> V(H).
std::uint64_t count_embeddings(const Pattern& p, const ColoredGraph& h, const CountOptions& opt = {});

/// I(P, H): number of k-subsets of V(H) inducing a copy of P. Zero when k > n.
std::uint64_t count_induced(const Pattern& p, const ColoredGraph& h, const CountOptions& opt = {});

/// I(P, H) / binom(n, k); zero when k > n.
Rational induced_density(const Pattern& p, const ColoredGraph& h, const CountOptions& opt = {});

/// All embeddings, each as phi indexed by role, in search order.
std::vector<std::vector<std::size_t>> enumerate_embeddings(const Pattern& p, const ColoredGraph& h);

/// Streaming form of enumerate_embeddings: visit(std::span<const std::size_t>).
template <class Visit>
void for_each_embedding(const Pattern& p, const ColoredGraph& h, Visit&& visit) {
  EmbeddingSearch(p, h).run(visit);
}

/// d(x, y): copies containing both x and y. Throws ValidationError when x == y.
std::uint64_t pair_degree(const Pattern& p, const ColoredGraph& h, std::size_t x, std::size_t y);

/// Per-vertex statistics from one pass over all embeddings. Role-indexed
/// quantities count embeddings (d_i(x) = #{phi : phi(i) = x}), so
/// sum_i d_i(x) = automorphisms * (copies containing x).
struct RoleStats {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t palette = 0;
  std::uint64_t automorphisms = 1;
  std::uint64_t copies = 0;

  std::vector<std::uint64_t> role_degrees;        // [x*k + i] = d_i(x)
  std::vector<std::uint64_t> degrees;             // [x] = d(x)
  std::vector<VertexSet> role_neighbourhoods;     // [x*k + i] = N_i(x)
  std::vector<VertexSet> role_pair_neighbourhoods;// [(x*k + i)*k + j] = N_i^j(x)
  std::vector<std::size_t> color_degrees;         // [x*palette + c] = d_c(x)
  std::vector<VertexSet> neighbours;              // [x] = B(x), non-empty pairs
  std::vector<std::size_t> second_roles;          // [x] = i with N_i(x) = Z(x)
  std::vector<std::uint64_t> pair_copies;         // [x*n + y] = d(x, y), zero on the diagonal
  std::vector<std::uint64_t> role_pair_embeddings;// [(x*k + i)*n + y] = #{phi : phi(i) = x, y in phi([k])}

  std::uint64_t d(std::size_t x, std::size_t i) const { return role_degrees[x * k + i]; }
  const VertexSet& N(std::size_t x, std::size_t i) const { return role_neighbourhoods[x * k + i]; }
  const VertexSet& N(std::size_t x, std::size_t i, std::size_t j) const {
    return role_pair_neighbourhoods[(x * k + i) * k + j];
  }
  std::size_t color_degree(std::size_t x, Color c) const { return color_degrees[x * palette + color_id(c)]; }
  /// |Z(x)|, the second largest of |N_1(x)|, ..., |N_k(x)|.
  std::size_t second_size(std::size_t x) const { return N(x, second_roles[x]).size(); }
  std::uint64_t pair(std::size_t x, std::size_t y) const { return pair_copies[x * n + y]; }
};

RoleStats role_stats(const Pattern& p, const ColoredGraph& h);

struct GlobalStats {
  std::uint64_t copies = 0;
  Rational rho;
  Rational alpha;  // max over x and non-empty c of d_c(x) / n
  Rational beta;   // max over x of d_empty(x) / n
  Rational z;      // max over x of |Z(x)| / n
};

GlobalStats global_stats(const Pattern& p, const ColoredGraph& h, const RoleStats& stats);
GlobalStats global_stats(const Pattern& p, const ColoredGraph& h);

}  // namespace indlab
