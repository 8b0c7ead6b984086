#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "indlab/constructions.hpp"
#include "indlab/counting.hpp"
#include "indlab/error.hpp"
#include "indlab/io.hpp"

using namespace indlab;

namespace {

ColoredGraph graph_from(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Pattern pattern_from(const std::string& text) {
  std::istringstream in(text);
  return parse_pattern(in);
}

std::size_t error_line(const std::string& text) {
  try {
    graph_from(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("six-vertex blow-up survives a round trip") {
  const Pattern k3 = rainbow_clique(3);
  const auto h = realize(k3, plan_blowup(k3, 6));
  const auto back = graph_from(format_graph(h));
  CHECK(back == h);
  CHECK(count_induced(k3, back) == 8);
  CHECK(format_graph(back) == format_graph(h));
}

TEST_CASE("random graphs and patterns round trip") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = gen::random_graph(rng, 1 + gen::below(rng, 12), 1 + gen::below(rng, 5));
    CHECK(graph_from(format_graph(g)) == g);
    const Pattern p = gen::random_pattern(rng, 2 + gen::below(rng, 6));
    const Pattern q = pattern_from(format_pattern(p));
    CHECK(q.order() == p.order());
    CHECK(q.edges() == p.edges());
  }
}

TEST_CASE("omitted pairs are empty") {
  const auto g = graph_from("graph n=4 palette=3\n1 2 2\n");
  CHECK(g.color(0, 1) == make_color(2));
  CHECK(g.color(2, 3) == kEmpty);
  CHECK(g.color(0, 3) == kEmpty);
}

TEST_CASE("comments and blank lines are skipped") {
  const auto g = graph_from("# host\n\ngraph n=3 palette=2   # header\n\n1 3 1\n");
  CHECK(g.color(0, 2) == make_color(1));
  const Pattern p = pattern_from("pattern k=3\n# first edge\n1 2\n2 3\n");
  CHECK(p.edges().size() == 2);
}

TEST_CASE("parse errors carry the line") {
  CHECK(error_line("graph n=4 palette=3\n1 2 1\n\n2 1 2\n") == 4);
  CHECK(error_line("graph n=4 palette=3\n1 2 3\n") == 2);
  CHECK(error_line("graph n=4 palette=3\n1 5 1\n") == 2);
  CHECK(error_line("graph n=4 palette=3\n2 2 1\n") == 2);
  CHECK(error_line("graph n=4\n") == 1);
  CHECK(error_line("") == 1);
  CHECK_THROWS_AS(pattern_from("pattern k=3\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(pattern_from("pattern k=1\n"), ParseError);
  CHECK_THROWS_AS(pattern_from("pattern k=3\n"), ValidationError);
}

TEST_CASE("builtin pattern specs") {
  CHECK(load_pattern("clique:4").edges().size() == 6);
  CHECK(load_pattern("path:5").edges().size() == 4);
  CHECK(load_pattern("cycle:5").edges().size() == 5);
  CHECK(load_pattern("matching:2").order() == 4);
  CHECK_THROWS_AS(load_pattern("clique:x"), ValidationError);
  CHECK_THROWS_AS(load_pattern("/no/such/pattern"), ValidationError);
}
