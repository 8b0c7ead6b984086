#include <doctest.h>

#include <numeric>
#include <set>

#include "generators.hpp"
#include "indlab/canonical.hpp"
#include "indlab/constructions.hpp"
#include "indlab/counting.hpp"
#include "indlab/optimizer.hpp"

using namespace indlab;

namespace {

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (v != skip) out.push_back(v);
  return out;
}

/// Copies through x, by deleting x and recounting.
std::uint64_t copies_through(const Pattern& p, const ColoredGraph& h, std::size_t x) {
  return count_induced(p, h) - count_induced(p, h.induced(all_but(h.order(), x)));
}

/// Best count over every coloring of K_n.
std::uint64_t brute_optimum(const Pattern& p, std::size_t n, std::set<CanonicalCode>* classes = nullptr) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs; ++i) total *= p.palette();
  std::uint64_t best = 0;
  for (std::size_t mask = 0; mask < total; ++mask) {
    ColoredGraph g(n, p.palette());
    std::size_t m = mask;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        g.set_color(u, v, make_color(m % p.palette()));
        m /= p.palette();
      }
    const auto c = count_induced(p, g);
    if (c > best && classes) classes->clear();
    best = std::max(best, c);
    if (c == best && classes) classes->insert(canonical_form(g));
  }
  return best;
}

ColoredGraph starved_triangle_host() {
  const Pattern k3 = rainbow_clique(3);
  const std::vector<std::size_t> part{0, 0, 0, 0, 1, 2};
  ColoredGraph h(6, k3.palette());
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = u + 1; v < 6; ++v)
      if (part[u] != part[v]) h.set_color(u, v, k3.color(part[u], part[v]));
  return h;
}

}  // namespace

TEST_CASE("duplicate_vertex makes a twin with an empty pair") {
  gen::Rng rng(1);
  const auto h = gen::random_graph(rng, 7, 3);
  const auto d = duplicate_vertex(h, 2, 5);
  CHECK(color_id(d.color(2, 5)) == 0);
  for (std::size_t v = 0; v < 7; ++v)
    if (v != 2 && v != 5) CHECK(d.color(5, v) == h.color(2, v));
  CHECK(d.induced(all_but(7, 5)) == h.induced(all_but(7, 5)));
}

TEST_CASE("starved blow-up gains from a Zykov step") {
  const Pattern k3 = rainbow_clique(3);
  const auto h = starved_triangle_host();
  CHECK(count_induced(k3, h) == 4);
  const auto step = zykov_step(k3, h);
  REQUIRE(step.has_value());
  CHECK(step->before == 4);
  CHECK(step->bound == 2);  // d(4) = 4, d(0) = 1, d(0, 4) = 1
  CHECK(step->after == 6);
  CHECK(step->gain() >= step->bound);
}

TEST_CASE("Zykov gain bound holds for every pair") {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 2 + gen::below(rng, 3);
    const Pattern p = trial % 2 ? rainbow_clique(k) : gen::random_pattern(rng, k);
    const std::size_t n = k + 1 + gen::below(rng, 4);
    const auto h = gen::random_graph(rng, n, p.palette());
    const auto base = count_induced(p, h);
    const auto x = gen::below(rng, n);
    auto y = gen::below(rng, n - 1);
    if (y >= x) ++y;
    const auto dx = static_cast<std::int64_t>(copies_through(p, h, x));
    const auto dy = static_cast<std::int64_t>(copies_through(p, h, y));
    const auto both = h.induced(all_but(n, y));
    // copies through x and y = d(x) - copies through x with y removed
    const auto dxy = dx - static_cast<std::int64_t>(base - dy - count_induced(p, both.induced(all_but(n - 1, x < y ? x : x - 1))));
    const auto gain = static_cast<std::int64_t>(count_induced(p, duplicate_vertex(h, x, y))) - static_cast<std::int64_t>(base);
    INFO("trial " << trial);
    if (p.is_clique())
      CHECK(gain == dx - dy - dxy);
    else
      CHECK(gain >= dx - dy - dxy);
    const auto step = zykov_step(p, h);  // throws if the realized gain misses the bound
    if (step) CHECK(step->gain() >= step->bound);
  }
}

TEST_CASE("hill climbing beats the triangle blow-up at n = 8") {
  const Pattern k3 = rainbow_clique(3);
  const auto report = beat_blowup(k3, 8);
  CHECK(report.search.comparator == 20);
  CHECK(report.search.best_count >= 32);
  CHECK(count_induced(k3, report.search.best) == report.search.best_count);
  CHECK(report.verdict == Verdict::Beaten);
  CHECK(report.search.restarts.size() == 8);
}

TEST_CASE("search is deterministic in seed and independent of threads") {
  const Pattern p = rainbow_path(4);
  SearchConfig a;
  a.seed = 42;
  a.restarts = 6;
  SearchConfig b = a;
  b.threads = 3;
  const auto ra = hillclimb(p, 8, a);
  const auto rb = hillclimb(p, 8, b);
  CHECK(ra.best == rb.best);
  CHECK(ra.best_count == rb.best_count);
  CHECK(ra.iterations == rb.iterations);
  a.seed = 43;
  const auto rc = hillclimb(p, 8, a);
  CHECK(rc.best_count <= binomial(8, 4));
}

TEST_CASE("restart starts cycle through the three kinds") {
  SearchConfig c;
  c.restarts = 4;
  const auto r = hillclimb(rainbow_clique(3), 6, c);
  CHECK(r.restarts[0].start == StartKind::Random);
  CHECK(r.restarts[2].start == StartKind::PatternBlowup);
  CHECK(r.restarts[3].start == StartKind::AlternativeBase);
  for (const auto& s : r.restarts) CHECK(s.final >= s.initial);
  for (std::size_t i = 1; i < r.moves.size(); ++i) CHECK(r.moves[i].count > r.moves[i - 1].count);
}

TEST_CASE("exact search agrees with brute force") {
  CHECK(exact_search(rainbow_clique(2), 3).optimum == 3);

  const Pattern k3 = rainbow_clique(3);
  std::set<CanonicalCode> classes;
  const auto four = exact_search(k3, 4);
  CHECK(four.complete);
  CHECK(four.optimum == brute_optimum(k3, 4, &classes));
  CHECK(four.witnesses.size() == classes.size());
  for (const auto& w : four.witnesses) CHECK(count_induced(k3, w) == four.optimum);

  const auto five = exact_search(k3, 5);
  CHECK(five.complete);
  CHECK(five.rho <= four.rho);

  const Pattern m = rainbow_matching(2);
  const auto e = exact_search(m, 4);
  CHECK(e.complete);
  CHECK(e.optimum == brute_optimum(m, 4));
}

TEST_CASE("exact search reports an incomplete run past its budget") {
  ExactConfig c;
  c.node_budget = 100;
  const auto r = exact_search(rainbow_clique(3), 5, c);
  CHECK_FALSE(r.complete);
  CHECK(r.optimum >= r.comparator);
}

TEST_CASE("exact search is independent of threads") {
  ExactConfig one;
  ExactConfig many;
  many.threads = 4;
  const auto a = exact_search(rainbow_path(3), 5, one);
  const auto b = exact_search(rainbow_path(3), 5, many);
  CHECK(a.optimum == b.optimum);
  CHECK(a.nodes == b.nodes);
  CHECK(a.witnesses == b.witnesses);
}
