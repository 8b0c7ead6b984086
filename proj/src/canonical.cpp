#include "indlab/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "indlab/embedding.hpp"
#include "indlab/error.hpp"

namespace indlab {

namespace {

// Ordered partition encoded as a cell id per vertex; a cell's id is the
// position of its first member, so ids are isomorphism invariant.
using Cells = std::vector<std::size_t>;

std::size_t distinct_cells(const Cells& cells) {
  std::vector<std::size_t> ids = cells;
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

Cells refine(const ColoredGraph& g, Cells cells) {
  const std::size_t n = g.order();
  std::size_t count = distinct_cells(cells);
  while (true) {
    std::vector<std::vector<std::uint64_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.reserve(n);
      s.push_back(cells[v]);
      std::vector<std::uint64_t> around;
      around.reserve(n - 1);
      for (std::size_t u = 0; u < n; ++u)
        if (u != v) around.push_back((static_cast<std::uint64_t>(cells[u]) << 16) | color_id(g.color(u, v)));
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    Cells next(n);
    for (std::size_t p = 0; p < n; ++p) {
      const bool fresh = p == 0 || sig[order[p]] != sig[order[p - 1]];
      next[order[p]] = fresh ? p : next[order[p - 1]];
    }
    const std::size_t next_count = distinct_cells(next);
    cells = std::move(next);
    if (next_count == count) return cells;
    count = next_count;
  }
}

CanonicalCode leaf_code(const ColoredGraph& g, const std::vector<std::size_t>& inv) {
  const std::size_t n = g.order();
  CanonicalCode code;
  code.reserve(2 + n * (n - 1));
  code.push_back(static_cast<std::uint8_t>(n >> 8));
  code.push_back(static_cast<std::uint8_t>(n & 0xff));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const auto c = color_id(g.color(inv[p], inv[q]));
      code.push_back(static_cast<std::uint8_t>(c >> 8));
      code.push_back(static_cast<std::uint8_t>(c & 0xff));
    }
  return code;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const ColoredGraph& g) : g_(g), n_(g.order()) {}

  CanonicalCode run() {
    if (n_ == 0) return leaf_code(g_, {});
    std::vector<std::size_t> prefix;
    search(refine(g_, Cells(n_, 0)), prefix);
    return *best_;
  }

 private:
  struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
  };

  void search(const Cells& cells, std::vector<std::size_t>& prefix) {
    if (distinct_cells(cells) == n_) {
      std::vector<std::size_t> inv(n_);
      for (std::size_t v = 0; v < n_; ++v) inv[cells[v]] = v;
      CanonicalCode code = leaf_code(g_, inv);
      if (!best_ || code < *best_) {
        best_ = std::move(code);
        best_inv_ = inv;
      } else if (code == *best_) {
        // inv -> best_inv_ position by position is an automorphism
        std::vector<std::size_t> gamma(n_);
        for (std::size_t p = 0; p < n_; ++p) gamma[inv[p]] = best_inv_[p];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }
    // first non-singleton cell
    std::vector<std::size_t> size(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) ++size[cells[v]];
    std::size_t target = n_;
    for (std::size_t c = 0; c < n_; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n_; ++v)
      if (cells[v] == target) members.push_back(v);

    std::vector<std::size_t> explored;
    for (std::size_t v : members) {
      if (!explored.empty() && same_orbit(prefix, explored, v)) continue;
      Cells child = cells;
      for (std::size_t u : members)
        if (u != v) child[u] = target + 1;
      prefix.push_back(v);
      search(refine(g_, std::move(child)), prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  bool same_orbit(const std::vector<std::size_t>& prefix, const std::vector<std::size_t>& explored,
                  std::size_t v) {
    UnionFind uf(n_);
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](std::size_t x) { return gamma[x] == x; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < n_; ++x) uf.unite(x, gamma[x]);
    }
    const std::size_t root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](std::size_t u) { return uf.find(u) == root; });
  }

  const ColoredGraph& g_;
  std::size_t n_;
  std::optional<CanonicalCode> best_;
  std::vector<std::size_t> best_inv_;
  std::vector<std::vector<std::size_t>> automorphisms_;
};

std::vector<std::uint16_t> color_profile(const ColoredGraph& g, std::size_t v) {
  std::vector<std::uint16_t> p;
  for (std::size_t u = 0; u < g.order(); ++u)
    if (u != v) p.push_back(color_id(g.color(u, v)));
  std::sort(p.begin(), p.end());
  return p;
}

bool backtrack_isomorphism(const ColoredGraph& g, const ColoredGraph& h) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint16_t>> pg(n), ph(n);
  for (std::size_t v = 0; v < n; ++v) {
    pg[v] = color_profile(g, v);
    ph[v] = color_profile(h, v);
  }
  auto sg = pg, sh = ph;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;

  std::vector<std::size_t> map(n, n);
  std::vector<bool> taken(n, false);
  auto extend = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (taken[w] || pg[v] != ph[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = g.color(u, v) == h.color(map[u], w);
      if (!ok) continue;
      map[v] = w;
      taken[w] = true;
      if (self(self, v + 1)) return true;
      taken[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace

CanonicalCode canonical_form(const ColoredGraph& g, std::size_t limit) {
  if (g.order() > limit)
    throw CanonicalizationLimit("canonicalization limit: " + std::to_string(g.order()) + " vertices exceeds " +
                                std::to_string(limit));
  return Canonicalizer(g).run();
}

bool are_isomorphic(const ColoredGraph& g, const ColoredGraph& h) {
  if (g.order() != h.order()) return false;
  if (g.order() <= kCanonicalLimit) return canonical_form(g) == canonical_form(h);
  return backtrack_isomorphism(g, h);
}

std::uint64_t automorphism_count(const Pattern& p) {
  std::uint64_t count = 0;
  EmbeddingSearch search(p, p.complete_view());
  search.run([&](std::span<const std::size_t>) { ++count; });
  return count;
}

}  // namespace indlab
