#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indlab/graph.hpp"

namespace indlab {

inline constexpr std::size_t kCanonicalLimit = 16;

/// Byte string: order, then the colors of the pairs (p, q), p < q, of the
/// canonical ordering, two bytes each. Equal codes <=> isomorphic graphs.
using CanonicalCode = std::vector<std::uint8_t>;

/// Color refinement followed by individualization with automorphism pruning,
/// keeping the lexicographically smallest leaf code. Throws
/// CanonicalizationLimit above `limit` vertices.
CanonicalCode canonical_form(const ColoredGraph& g, std::size_t limit = kCanonicalLimit);

/// Color-preserving vertex bijection exists. Uses canonical codes up to the
/// limit, invariant filtering plus backtracking above it.
bool are_isomorphic(const ColoredGraph& g, const ColoredGraph& h);

/// Number of color-preserving self-bijections of the pattern's complete view.
std::uint64_t automorphism_count(const Pattern& p);

}  // namespace indlab
