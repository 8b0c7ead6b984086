#include "indlab/counting.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "indlab/canonical.hpp"
#include "indlab/error.hpp"

namespace indlab {

namespace {

std::uint64_t backtracking_embeddings(const Pattern& p, const ColoredGraph& h, std::size_t threads) {
  const EmbeddingSearch search(p, h);
  const std::size_t n = h.order();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    std::uint64_t total = 0;
    search.run([&](std::span<const std::size_t>) { ++total; });
    return total;
  }
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t first = n * t / threads;
    const std::size_t last = n * (t + 1) / threads;
    pool.emplace_back([&, t, first, last] {
      search.run_range([&](std::span<const std::size_t>) { ++partial[t]; }, {}, first, last);
    });
  }
  for (auto& th : pool) th.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

/// Calls f(subset) for every k-subset of [n] in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    f(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

bool maps_onto(const Pattern& p, const ColoredGraph& h, const std::vector<std::size_t>& phi) {
  const std::size_t k = p.order();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (color_id(h.color(phi[i], phi[j])) != color_id(p.color(i, j))) return false;
  return true;
}

struct OracleCounts {
  std::uint64_t embeddings = 0;
  std::uint64_t subsets = 0;
};

OracleCounts subset_oracle(const Pattern& p, const ColoredGraph& h) {
  OracleCounts out;
  for_each_subset(h.order(), p.order(), [&](const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> phi = subset;
    std::uint64_t hits = 0;
    do {
      if (maps_onto(p, h, phi)) ++hits;
    } while (std::next_permutation(phi.begin(), phi.end()));
    out.embeddings += hits;
    if (hits > 0) ++out.subsets;
  });
  return out;
}

}  // namespace

std::uint64_t count_embeddings(const Pattern& p, const ColoredGraph& h, const CountOptions& opt) {
  if (opt.method == CountMethod::SubsetOracle) return subset_oracle(p, h).embeddings;
  return backtracking_embeddings(p, h, opt.threads);
}

std::uint64_t count_induced(const Pattern& p, const ColoredGraph& h, const CountOptions& opt) {
  if (p.order() > h.order()) return 0;
  if (opt.method == CountMethod::SubsetOracle) return subset_oracle(p, h).subsets;
  return backtracking_embeddings(p, h, opt.threads) / automorphism_count(p);
}

Rational induced_density(const Pattern& p, const ColoredGraph& h, const CountOptions& opt) {
  if (p.order() > h.order()) return 0;
  return Rational(Integer(count_induced(p, h, opt)), binomial(h.order(), p.order()));
}

std::vector<std::vector<std::size_t>> enumerate_embeddings(const Pattern& p, const ColoredGraph& h) {
  std::vector<std::vector<std::size_t>> out;
  for_each_embedding(p, h, [&](std::span<const std::size_t> phi) { out.emplace_back(phi.begin(), phi.end()); });
  return out;
}

std::uint64_t pair_degree(const Pattern& p, const ColoredGraph& h, std::size_t x, std::size_t y) {
  if (x == y) throw ValidationError("pair_degree: identical vertices");
  if (x >= h.order() || y >= h.order()) throw ValidationError("pair_degree: vertex out of range");
  const EmbeddingSearch search(p, h);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < p.order(); ++i)
    for (std::size_t j = 0; j < p.order(); ++j) {
      if (i == j) continue;
      const Pin pins[] = {{i, x}, {j, y}};
      search.run([&](std::span<const std::size_t>) { ++total; }, pins);
    }
  return total / automorphism_count(p);
}

RoleStats role_stats(const Pattern& p, const ColoredGraph& h) {
  RoleStats s;
  const std::size_t n = h.order();
  const std::size_t k = p.order();
  s.n = n;
  s.k = k;
  s.palette = h.palette();
  s.automorphisms = automorphism_count(p);
  s.role_degrees.assign(n * k, 0);
  s.degrees.assign(n, 0);
  s.role_neighbourhoods.assign(n * k, VertexSet(n));
  s.role_pair_neighbourhoods.assign(n * k * k, VertexSet(n));
  s.color_degrees.assign(n * s.palette, 0);
  s.neighbours.assign(n, VertexSet(n));
  s.second_roles.assign(n, 0);
  s.pair_copies.assign(n * n, 0);
  s.role_pair_embeddings.assign(n * k * n, 0);

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const Color c = h.color(x, y);
      ++s.color_degrees[x * s.palette + color_id(c)];
      if (c != kEmpty) s.neighbours[x].insert(y);
    }

  std::uint64_t embeddings = 0;
  for_each_embedding(p, h, [&](std::span<const std::size_t> phi) {
    ++embeddings;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t x = phi[i];
      ++s.role_degrees[x * k + i];
      ++s.degrees[x];
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        const std::size_t y = phi[j];
        s.role_neighbourhoods[x * k + i].insert(y);
        s.role_pair_neighbourhoods[(x * k + i) * k + j].insert(y);
        ++s.role_pair_embeddings[(x * k + i) * n + y];
        ++s.pair_copies[x * n + y];
      }
    }
  });
  s.copies = k <= n ? embeddings / s.automorphisms : 0;
  for (auto& c : s.pair_copies) c /= s.automorphisms;

  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> roles(k);
    std::iota(roles.begin(), roles.end(), 0);
    std::stable_sort(roles.begin(), roles.end(),
                     [&](std::size_t a, std::size_t b) { return s.N(x, a).size() > s.N(x, b).size(); });
    s.second_roles[x] = roles[1];
  }
  return s;
}

GlobalStats global_stats(const Pattern& p, const ColoredGraph& h, const RoleStats& stats) {
  GlobalStats g;
  const std::size_t n = h.order();
  g.copies = stats.copies;
  g.rho = p.order() <= n ? Rational(Integer(stats.copies), binomial(n, p.order())) : Rational(0);
  if (n == 0) return g;
  std::size_t max_color = 0, max_empty = 0, max_second = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t c = 1; c < stats.palette; ++c) max_color = std::max(max_color, stats.color_degree(x, make_color(c)));
    max_empty = std::max(max_empty, stats.color_degree(x, kEmpty));
    max_second = std::max(max_second, stats.second_size(x));
  }
  const Integer nn(n);
  g.alpha = Rational(Integer(max_color), nn);
  g.beta = Rational(Integer(max_empty), nn);
  g.z = Rational(Integer(max_second), nn);
  return g;
}

GlobalStats global_stats(const Pattern& p, const ColoredGraph& h) { return global_stats(p, h, role_stats(p, h)); }

}  // namespace indlab
