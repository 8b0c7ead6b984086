#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indlab/canonical.hpp"
#include "indlab/exact.hpp"
#include "indlab/graph.hpp"
#include "indlab/rng.hpp"

namespace indlab {

/// Delete y, then add a twin x' of x in y's slot with the pair xx' empty.
struct ZykovStep {
  std::size_t x = 0;
  std::size_t y = 0;
  std::int64_t bound = 0;  // d(x) - d(y) - d(x, y), in copies
  std::uint64_t before = 0;
  std::uint64_t after = 0;
  ColoredGraph graph;

  std::int64_t gain() const { return static_cast<std::int64_t>(after) - static_cast<std::int64_t>(before); }
};

/// Picks (x, y) maximizing d(x) - d(y) - d(x, y) (first in (x, y) order on
/// ties); nullopt when that maximum is not positive. The realized gain is
/// recounted and must reach the bound, otherwise InvariantViolation.
std::optional<ZykovStep> zykov_step(const Pattern& p, const ColoredGraph& h);

/// The twin construction itself, for any x != y.
ColoredGraph duplicate_vertex(const ColoredGraph& h, std::size_t x, std::size_t y);

enum class StartKind : std::uint8_t {
  Random,
  PatternBlowup,
  AlternativeBase,  // blow-up of a locally optimized coloring of K_{k+1}
};

std::string to_string(StartKind kind);

struct SearchConfig {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t restarts = 8;
  bool steepest = true;
  bool zykov_moves = true;
  std::size_t threads = 1;
};

struct MoveRecord {
  enum class Kind : std::uint8_t { Recolor, Zykov };
  Kind kind = Kind::Recolor;
  std::size_t a = 0;  // recolor: pair (a, b); zykov: kept x = a, replaced y = b
  std::size_t b = 0;
  Color color = kEmpty;
  std::uint64_t count = 0;  // exact count after the move
};

struct RestartSummary {
  std::size_t index = 0;
  StartKind start = StartKind::Random;
  std::uint64_t initial = 0;
  std::uint64_t final = 0;
  std::size_t moves = 0;
};

struct SearchReport {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  ColoredGraph best;
  std::uint64_t best_count = 0;
  Rational best_rho;
  std::uint64_t comparator = 0;  // blow-up count at the same n
  std::size_t best_restart = 0;
  std::uint64_t iterations = 0;  // accepted moves over all restarts
  std::vector<RestartSummary> restarts;
  std::vector<MoveRecord> moves;  // of the best restart
};

/// Restart r starts from: r % 4 in {0, 1} random, 2 the blow-up of P (perturbed
/// for r >= 4), 3 an alternative base. Moves are single-pair recolorings and
/// Zykov steps; only strict improvements are accepted. Deterministic in
/// (P, n, config); threads only change the schedule.
SearchReport hillclimb(const Pattern& p, std::size_t n, const SearchConfig& config = {});

enum class Verdict : std::uint8_t { Beaten, NotBeatenWithinBudget };
std::string to_string(Verdict v);

struct BeatReport {
  SearchReport search;
  Verdict verdict = Verdict::NotBeatenWithinBudget;
};

/// Beaten only when an exact recount of the best host exceeds the blow-up count.
BeatReport beat_blowup(const Pattern& p, std::size_t n, const SearchConfig& config = {});

struct ExactConfig {
  std::uint64_t node_budget = 50'000'000;
  std::size_t threads = 1;
};

struct ExactResult {
  std::size_t n = 0;
  bool complete = false;
  std::uint64_t optimum = 0;      // best found; exact when complete
  Rational rho;
  std::uint64_t comparator = 0;   // blow-up count, also the initial incumbent
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::vector<ColoredGraph> witnesses;  // one per isomorphism class, by canonical code
};

/// Exhaustive search over all colorings of K_n with palette P.palette(),
/// pruning partial colorings whose optimistic bound falls below the incumbent.
/// Stops early (complete = false) past the node budget.
ExactResult exact_search(const Pattern& p, std::size_t n, const ExactConfig& config = {});

}  // namespace indlab
