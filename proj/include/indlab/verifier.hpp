#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "indlab/exact.hpp"
#include "indlab/rng.hpp"

namespace indlab {

/// p(q, t): the largest product of t non-negative integers summing to q,
/// reached by the balanced split. Throws ValidationError for t == 0.
Integer p_exact(std::size_t q, std::size_t t);

/// Same value by dynamic programming over the last part; the independent oracle.
Integer p_dp(std::size_t q, std::size_t t);

struct PropertiesReport {
  std::size_t qmax = 0;
  std::size_t tmax = 0;
  std::uint64_t oracle_checked = 0;      // p_exact == p_dp
  std::uint64_t product_checked = 0;     // p(q,t) p(q',t') <= p(q+q', t+t')
  std::uint64_t amgm_checked = 0;        // p(q,t) <= (q/t)^t
  std::uint64_t boundary_checked = 0;    // p(q,1) = q; p = 0 iff q < t
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Exhaustive over 0 <= q <= qmax, 1 <= t <= tmax (both at most 60); sums in
/// the product rule stay inside the grid.
PropertiesReport p_properties(std::size_t qmax = 60, std::size_t tmax = 60);

enum class CheckVerdict : std::uint8_t { Pass, Fail, Indeterminate };
enum class Relation : std::uint8_t { Less, LessEqual };
enum class Method : std::uint8_t { Exact, Enclosure, Sampling };

std::string to_string(CheckVerdict v);
std::string to_string(Relation r);
std::string to_string(Method m);

using Parameters = std::vector<std::pair<std::string, std::string>>;

/// One inequality lhs < rhs (or <=). Exact checks carry point intervals; the
/// others carry rigorous enclosures, and the verdict only reads endpoints.
struct InequalityCheck {
  std::string item;  // "i" ... "viii"
  std::string name;
  std::string statement;
  Parameters parameters;
  Interval lhs;
  Interval rhs;
  Relation relation = Relation::Less;
  Method method = Method::Exact;
  CheckVerdict verdict = CheckVerdict::Indeterminate;
  Rational margin;                  // rhs.lo - lhs.hi
  unsigned precision = 0;           // bits used
  unsigned required_precision = 0;  // indeterminate only: bits that decide it, 0 if none up to the cap
};

CheckVerdict decide(const Interval& lhs, const Interval& rhs, Relation relation);

struct BatteryConfig {
  std::size_t kmin = 11;
  std::size_t kmax = 200;
  std::size_t grid = 60;           // simplex resolution and sampling density
  unsigned precision = 256;        // bits of the enclosures
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_points = 16;  // interior simplex points per k
  std::size_t threads = 1;
};

/// Smallest C (rounded up to 1/1000) for which a parameterized claim yields its
/// contradiction at every k of the range, next to the k -> infinity threshold.
struct MinimalC {
  std::string claim;
  Rational minimal;
  Interval limit;
  std::string stated;
};

struct BatteryReport {
  BatteryConfig config;
  std::vector<InequalityCheck> checks;
  std::vector<MinimalC> minimal_c;
  Rational overall_minimal_c;

  std::size_t count(CheckVerdict v) const;
  bool all_pass() const { return count(CheckVerdict::Pass) == checks.size(); }
};

/// Runs every numeric claim over k in [kmin, kmax]; see the README for the list.
BatteryReport inequality_battery(const BatteryConfig& config = {});

}  // namespace indlab
