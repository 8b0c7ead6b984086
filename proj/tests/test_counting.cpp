#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "generators.hpp"
#include "indlab/canonical.hpp"
#include "indlab/constructions.hpp"
#include "indlab/counting.hpp"
#include "indlab/error.hpp"
#include "indlab/verifier.hpp"

using namespace indlab;

namespace {

ColoredGraph blowup(const Pattern& p, std::size_t n) { return realize(p, plan_blowup(p, n)); }

}  // namespace

TEST_CASE("rainbow triangle counts") {
  const Pattern k3 = rainbow_clique(3);
  CHECK(count_induced(k3, k3.complete_view()) == 1);
  CHECK(count_induced(k3, blowup(k3, 6)) == 8);
  CHECK(count_induced(k3, blowup(k3, 9)) == 30);
  CHECK(count_induced(k3, blowup(k3, 6), {CountMethod::SubsetOracle}) == 8);
  CHECK(count_induced(k3, blowup(k3, 9), {CountMethod::SubsetOracle}) == 30);
  CHECK(count_induced(rainbow_clique(5), k3.complete_view()) == 0);
  CHECK(induced_density(k3, blowup(k3, 9)) == Rational(30, 84));
}

TEST_CASE("embeddings versus copies") {
  const Pattern k2 = rainbow_clique(2);
  CHECK(count_embeddings(k2, k2.complete_view()) == 2);
  CHECK(count_induced(k2, k2.complete_view()) == 1);

  const Pattern k3 = rainbow_clique(3);
  CHECK(enumerate_embeddings(k3, blowup(k3, 6)).size() == 8);

  const Pattern matching = rainbow_matching(2);
  CHECK(count_embeddings(matching, matching.complete_view()) == automorphism_count(matching));
  CHECK(count_induced(matching, matching.complete_view()) == 1);
}

TEST_CASE("every enumerated embedding preserves all pair colors") {
  gen::Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Pattern p = gen::random_pattern(rng, 3 + gen::below(rng, 2));
    const auto h = gen::random_graph(rng, 8, p.palette());
    const auto all = enumerate_embeddings(p, h);
    std::set<std::vector<std::size_t>> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& phi : all)
      for (std::size_t i = 0; i < p.order(); ++i)
        for (std::size_t j = i + 1; j < p.order(); ++j) CHECK(h.color(phi[i], phi[j]) == p.color(i, j));
    CHECK(all.size() == count_embeddings(p, h, {CountMethod::SubsetOracle}));
  }
}

TEST_CASE("backtracking agrees with the subset oracle") {
  gen::Rng rng(1);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t k = 2 + gen::below(rng, 4);
    const std::size_t n = k + gen::below(rng, 7);
    const Pattern p = gen::random_pattern(rng, k);
    const auto h = gen::random_graph(rng, n, p.palette() + gen::below(rng, 2));
    const auto fast = count_induced(p, h);
    CHECK(fast == count_induced(p, h, {CountMethod::SubsetOracle}));
    CHECK(fast == count_induced(p, h, {CountMethod::Backtracking, 3}));
  }
}

TEST_CASE("per-vertex statistics on the six-vertex blow-up") {
  const Pattern k3 = rainbow_clique(3);
  const auto h = blowup(k3, 6);
  const auto s = role_stats(k3, h);
  // vertices 0,1 form part 1
  CHECK(s.d(0, 0) == 4);
  CHECK(s.d(0, 1) == 0);
  CHECK(s.d(0, 2) == 0);
  CHECK(s.N(0, 0).size() == 4);
  CHECK(s.N(0, 1).size() == 0);
  CHECK(s.degrees[0] == 4);
  CHECK(s.pair(0, 2) == 2);
  CHECK(s.pair(0, 1) == 0);
  CHECK(pair_degree(k3, h, 0, 2) == 2);
  CHECK(pair_degree(k3, h, 0, 1) == 0);
  CHECK_THROWS_AS(pair_degree(k3, h, 3, 3), ValidationError);

  const auto g = global_stats(k3, h, s);
  CHECK(g.copies == 8);
  CHECK(g.alpha == Rational(2, 6));
  CHECK(g.beta == Rational(1, 6));
  CHECK(g.z == 0);
}

TEST_CASE("statistics on hosts without copies") {
  const Pattern k3 = rainbow_clique(3);
  ColoredGraph mono(7, k3.palette());
  for (std::size_t u = 0; u < 7; ++u)
    for (std::size_t v = u + 1; v < 7; ++v) mono.set_color(u, v, make_color(2));
  const auto s = role_stats(k3, mono);
  CHECK(s.copies == 0);
  for (auto d : s.role_degrees) CHECK(d == 0);
  const auto g = global_stats(k3, mono, s);
  CHECK(g.z == 0);
  CHECK(g.alpha == 1 - Rational(1, 7));
  CHECK(pair_degree(k3, mono, 0, 1) == 0);
  CHECK(global_stats(k3, k3.complete_view()).rho == 1);
}

TEST_CASE("statistics identities on random hosts") {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 2 + gen::below(rng, 3);
    const std::size_t n = k + gen::below(rng, 6);
    const Pattern p = trial % 2 == 0 ? gen::random_connected_pattern(rng, k) : gen::random_pattern(rng, k);
    const auto h = gen::random_graph(rng, n, p.palette());
    const auto s = role_stats(p, h);
    const auto aut = automorphism_count(p);
    CHECK(s.copies == count_induced(p, h));

    std::uint64_t total_degree = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t role_total = 0;
      for (std::size_t x = 0; x < n; ++x) role_total += s.d(x, i);
      CHECK(role_total == s.copies * aut);
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum += s.d(x, i);
      CHECK(sum == s.degrees[x]);
      total_degree += s.degrees[x];

      std::size_t colors = 0;
      for (std::size_t c = 0; c < s.palette; ++c) colors += s.color_degree(x, make_color(c));
      CHECK(colors == n - 1);

      for (std::size_t i = 0; i < k; ++i) {
        VertexSet joined(n);
        for (std::size_t j = 0; j < k; ++j) {
          if (j == i) continue;
          CHECK(s.N(x, i, j).is_subset_of(s.N(x, i)));
          joined |= s.N(x, i, j);
        }
        CHECK(joined == s.N(x, i));
      }
      // Z(x) is the second largest
      std::vector<std::size_t> sizes;
      for (std::size_t i = 0; i < k; ++i) sizes.push_back(s.N(x, i).size());
      std::sort(sizes.rbegin(), sizes.rend());
      CHECK(s.second_size(x) == sizes[1]);

      if (p.is_connected()) {
        Integer bound = 0;
        for (std::size_t i = 0; i < k; ++i) bound += p_exact(s.N(x, i).size(), k - 1);
        CHECK(Integer(s.degrees[x]) <= bound);
      }
      for (std::size_t y = 0; y < n; ++y)
        if (y != x) CHECK(s.pair(x, y) == pair_degree(p, h, x, y));
    }
    CHECK(total_degree == k * s.copies * aut);
  }
}

TEST_CASE("clique neighbourhoods split by color") {
  gen::Rng rng(6);
  const Pattern k4 = rainbow_clique(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = gen::perturbed(rng, blowup(k4, 10), 12);
    const auto s = role_stats(k4, h);
    for (std::size_t x = 0; x < h.order(); ++x)
      for (std::size_t i = 0; i < 4; ++i) {
        std::size_t total = 0;
        for (std::size_t j = 0; j < 4; ++j)
          if (j != i) total += s.N(x, i, j).size();
        CHECK(total == s.N(x, i).size());
      }
  }
}
