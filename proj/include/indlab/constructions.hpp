#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indlab/exact.hpp"
#include "indlab/graph.hpp"

namespace indlab {

/// Part-size plan of an iterated balanced blow-up. A node with no parts is a
/// leaf (fewer vertices than base vertices) and is realized all-empty.
struct BlowupTree {
  std::size_t size = 0;
  std::vector<BlowupTree> parts;

  bool leaf() const noexcept { return parts.empty(); }
  std::vector<std::size_t> part_sizes() const;
  friend bool operator==(const BlowupTree&, const BlowupTree&) = default;
};

/// Balanced split into `base_order` parts, recursively; the n mod k extra
/// vertices go to the lowest-indexed parts.
BlowupTree plan_blowup(std::size_t base_order, std::size_t n);
BlowupTree plan_blowup(const Pattern& p, std::size_t n);

/// Vertices numbered part by part, recursively. Pairs across parts i and j get
/// base.color(i, j); pairs inside a leaf are empty.
ColoredGraph realize(const ColoredGraph& base, const BlowupTree& tree);
ColoredGraph realize(const Pattern& p, const BlowupTree& tree);

/// sum over children + product of part sizes, evaluated down the tree.
Integer recursive_lower_bound(const BlowupTree& tree);

/// Side-by-side blow-ups of the components of a disconnected pattern, with
/// empty pairs between sides.
struct SeparatePlan {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> components;  // pattern vertices per side
  std::vector<Pattern> sides;                        // components with original colors
  std::vector<BlowupTree> trees;
};

/// Side sizes c_i n / k rounded by largest remainder (ties to the lowest
/// index). Rejects connected patterns and isolated vertices.
SeparatePlan plan_separate(const Pattern& p, std::size_t n);
ColoredGraph realize(const Pattern& p, const SeparatePlan& plan);

/// Leading-order blow-up densities.
struct DensityFormula {
  std::size_t k = 0;
  std::vector<std::size_t> component_sizes;
  Rational a;                               // k! / (k^k - k)
  std::vector<Rational> one_blowup_denoms;  // k^{c_i} - k
  std::vector<Rational> separate_denoms;    // k^{c_i} - k (k / c_i)^{c_i - 1}
  Rational one_blowup_coefficient;          // prod 1 / one_blowup_denoms
  Rational separate_coefficient;            // prod 1 / separate_denoms
};

/// Rejects patterns with an isolated vertex.
DensityFormula limit_density(const Pattern& p);

}  // namespace indlab
