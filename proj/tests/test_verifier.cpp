#include <doctest.h>

#include <cmath>
#include <map>

#include "generators.hpp"
#include "indlab/error.hpp"
#include "indlab/verifier.hpp"

using namespace indlab;

namespace {

double lo(const Interval& i) { return to_double(i.lo); }
double hi(const Interval& i) { return to_double(i.hi); }

const InequalityCheck* find(const BatteryReport& r, const std::string& name, std::size_t k) {
  for (const auto& c : r.checks)
    if (c.name == name)
      for (const auto& [key, value] : c.parameters)
        if (key == "k" && value == std::to_string(k)) return &c;
  return nullptr;
}

std::string param(const InequalityCheck& c, const std::string& key) {
  for (const auto& [k, v] : c.parameters)
    if (k == key) return v;
  return {};
}

BatteryConfig small_range() {
  BatteryConfig c;
  c.kmin = 11;
  c.kmax = 24;
  c.grid = 24;
  c.precision = 128;
  return c;
}

}  // namespace

TEST_CASE("p(q, t) values") {
  CHECK(p_exact(6, 3) == 8);
  CHECK(p_exact(7, 3) == 12);
  CHECK(p_exact(3, 5) == 0);
  CHECK(p_exact(0, 1) == 0);
  CHECK(p_exact(5, 2) * p_exact(5, 2) == p_exact(10, 4));
  CHECK(p_exact(10, 4) == 36);
  CHECK(Rational(p_exact(5, 2)) <= Rational(25, 4));
  CHECK_THROWS_AS(p_exact(3, 0), ValidationError);
  CHECK_THROWS_AS(p_dp(3, 0), ValidationError);
}

TEST_CASE("balanced split matches the DP oracle on the full grid") {
  for (std::size_t t = 1; t <= 60; ++t)
    for (std::size_t q = 0; q <= 60; q += (t > 20 ? 3 : 1)) REQUIRE(p_exact(q, t) == p_dp(q, t));
}

TEST_CASE("p properties over the grid") {
  const auto r = p_properties();
  CHECK(r.ok());
  CHECK(r.oracle_checked == 61 * 60);
  CHECK(r.amgm_checked == 61 * 60);
  CHECK(r.product_checked > 1'000'000);
  CHECK_THROWS_AS(p_properties(61, 5), ValidationError);
}

TEST_CASE("decide reads only endpoints") {
  const Interval a{Rational(1), Rational(2)};
  const Interval b{Rational(2), Rational(3)};
  CHECK(decide(a, b, Relation::LessEqual) == CheckVerdict::Pass);
  CHECK(decide(a, b, Relation::Less) == CheckVerdict::Indeterminate);
  CHECK(decide(b, a, Relation::Less) == CheckVerdict::Fail);
  CHECK(decide(Interval::point(2), Interval::point(2), Relation::Less) == CheckVerdict::Fail);
  CHECK(decide(Interval::point(2), Interval::point(2), Relation::LessEqual) == CheckVerdict::Pass);
  CHECK(decide(Interval{Rational(1), Rational(3)}, Interval::point(2), Relation::LessEqual) ==
        CheckVerdict::Indeterminate);
}

TEST_CASE("enclosures contain the floating-point values") {
  gen::Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const Rational x(Integer(static_cast<long>(gen::below(rng, 2001)) - 1000), Integer(97));
    const auto e = enclose_exp(x, 96);
    const double ref = std::exp(to_double(x));
    CHECK(lo(e) <= ref * (1 + 1e-12));
    CHECK(hi(e) >= ref * (1 - 1e-12));
    CHECK(e.width() < Rational(Integer(1), Integer(1) << 80) * (1 + e.hi));
    const Rational y(Integer(1 + gen::below(rng, 5000)), Integer(1 + gen::below(rng, 300)));
    const auto l = enclose_log(y, 96);
    const double lref = std::log(to_double(y));
    CHECK(lo(l) <= lref + 1e-12);
    CHECK(hi(l) >= lref - 1e-12);
  }
  const auto inv = Interval::point(1) / enclose_e(64);
  CHECK(inv.lo > decimal("0.36787"));
  CHECK(inv.hi < decimal("0.36788"));
}

TEST_CASE("battery passes on a short range and reproduces the k = 11 margins") {
  const auto r = inequality_battery(small_range());
  for (const auto& c : r.checks) {
    INFO(c.item << " " << c.name << " " << param(c, "k"));
    CHECK(c.verdict == CheckVerdict::Pass);
  }
  std::map<std::string, bool> items;
  for (const auto& c : r.checks) items[c.item] = true;
  CHECK(items.size() == 8);

  // (ii) at k = 11 against floating point
  const auto* max11 = find(r, "maxDegree", 11);
  REQUIRE(max11 != nullptr);
  const double rhs = 1.0 / (std::pow(11.0, 10) - 1);
  const double lhs = 1.4 * std::pow(0.6 / 9, 9);
  CHECK(to_double(max11->rhs.lo) == doctest::Approx(rhs).epsilon(1e-12));
  CHECK(to_double(max11->lhs.hi) == doctest::Approx(lhs).epsilon(1e-12));
  CHECK(std::stod(param(*max11, "ratio")) == doctest::Approx(rhs / lhs).epsilon(1e-5));
  CHECK(std::stod(param(*max11, "ratio")) == doctest::Approx(1.06).epsilon(0.01));

  // (i) at k = 11
  const auto* e11 = find(r, "eInverse", 11);
  REQUIRE(e11 != nullptr);
  CHECK(to_double(e11->rhs.lo) == doctest::Approx(std::pow(10.0 / 11, 10)).epsilon(1e-12));

  // (vii) the uniform point is an equality
  const auto* uniform = find(r, "simplexUniform", 11);
  REQUIRE(uniform != nullptr);
  CHECK(uniform->lhs.lo == 1);
  CHECK(uniform->margin == 0);

  // ordering is fixed by item then name
  for (std::size_t i = 1; i < r.checks.size(); ++i)
    if (r.checks[i].item == r.checks[i - 1].item) CHECK(r.checks[i - 1].name <= r.checks[i].name);
}

TEST_CASE("minimal C values against floating point") {
  const auto r = inequality_battery(small_range());
  REQUIRE(r.minimal_c.size() == 4);
  const double L = std::log(11.0);
  const double c = 1 / (1.01 * std::exp(1.0)) - 1.0 / 3;
  const std::map<std::string, double> expected{
      {"alphaClaim", (80.0 / 9) * (1 + L) / L},
      {"betaClaim", (1 + L) / ((std::log(2.0) - 0.5) * L)},
      {"largePartClaim", 8 * (L - std::log(c)) / L},
      {"absurdClaim", (80.0 / 9) * (3 * L + std::log(4.04) + 2) / L},
  };
  const std::map<std::string, double> limits{
      {"alphaClaim", 80.0 / 9}, {"betaClaim", 1 / (std::log(2.0) - 0.5)}, {"largePartClaim", 8}, {"absurdClaim", 24 / 0.9}};
  double overall = 0;
  for (const auto& m : r.minimal_c) {
    INFO(m.claim);
    const double got = to_double(m.minimal);
    CHECK(got >= expected.at(m.claim));
    CHECK(got <= expected.at(m.claim) + 0.0021);
    CHECK(to_double(m.limit.mid()) == doctest::Approx(limits.at(m.claim)).epsilon(1e-9));
    CHECK(got > limits.at(m.claim));
    overall = std::max(overall, got);
  }
  CHECK(to_double(r.overall_minimal_c) == overall);
}

TEST_CASE("verdicts do not change at doubled precision") {
  auto a = small_range();
  a.kmax = 16;
  auto b = a;
  b.precision = 2 * a.precision;
  b.threads = 3;
  const auto ra = inequality_battery(a);
  const auto rb = inequality_battery(b);
  REQUIRE(ra.checks.size() == rb.checks.size());
  for (std::size_t i = 0; i < ra.checks.size(); ++i) {
    CHECK(ra.checks[i].name == rb.checks[i].name);
    CHECK(ra.checks[i].verdict == rb.checks[i].verdict);
    // enclosures only tighten
    CHECK(rb.checks[i].lhs.hi - rb.checks[i].lhs.lo <= ra.checks[i].lhs.hi - ra.checks[i].lhs.lo);
  }
}

TEST_CASE("random simplex points checked in floating point") {
  gen::Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + gen::below(rng, 7);
    std::vector<double> p(k);
    double total = 0;
    for (auto& x : p) total += x = 1 + static_cast<double>(gen::below(rng, 100));
    double powers = 0;
    double product = 1;
    for (auto& x : p) {
      x /= total;
      powers += std::pow(x, static_cast<double>(k));
      product *= x;
    }
    CHECK(powers + (std::pow(static_cast<double>(k), static_cast<double>(k)) - k) * product <= 1 + 1e-12);
  }
}

TEST_CASE("battery rejects bad ranges") {
  BatteryConfig c;
  c.kmin = 3;
  CHECK_THROWS_AS(inequality_battery(c), ValidationError);
  c.kmin = 20;
  c.kmax = 19;
  CHECK_THROWS_AS(inequality_battery(c), ValidationError);
}

TEST_CASE("claims below k = 11 report real verdicts") {
  // below the stated range the claims may fail; they must then say so, not pass
  BatteryConfig c = small_range();
  c.kmin = 5;
  c.kmax = 10;
  const auto r = inequality_battery(c);
  CHECK(r.count(CheckVerdict::Indeterminate) == 0);
  const auto* max5 = find(r, "maxDegree", 5);
  REQUIRE(max5 != nullptr);
  const bool holds = 1.4 * std::pow(0.6 / 3, 3) < 1.0 / (std::pow(5.0, 4) - 1);
  CHECK((max5->verdict == CheckVerdict::Pass) == holds);
}
