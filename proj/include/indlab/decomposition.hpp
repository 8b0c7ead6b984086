#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "indlab/counting.hpp"
#include "indlab/exact.hpp"
#include "indlab/graph.hpp"

namespace indlab {

/// V_1..V_k: every host vertex goes to a role i maximizing |N_i(x)|, lowest i on ties.
struct RolePartition {
  std::size_t k = 0;
  std::vector<std::size_t> role;   // per host vertex
  std::vector<std::size_t> sizes;  // n_i

  std::vector<std::vector<std::size_t>> parts() const;
  static RolePartition from_roles(std::size_t k, std::vector<std::size_t> role);
};

RolePartition partition_roles(const Pattern& p, const ColoredGraph& h, const RoleStats& stats);

enum class CopyClass : std::uint8_t {
  Inside,   // H_m: all vertices in one part
  Aligned,  // H_g: transversal, and i -> (its vertex in V_i) is a colored isomorphism
  Bad,      // H_b: everything else
};

struct ClassifiedCopy {
  std::vector<std::size_t> vertices;  // sorted
  std::vector<std::size_t> phi;       // one embedding onto `vertices`
  CopyClass cls = CopyClass::Bad;
};

struct CopySplit {
  std::uint64_t hm = 0;
  std::uint64_t hg = 0;
  std::uint64_t hb = 0;
  std::vector<ClassifiedCopy> copies;
};

CopySplit split_copies(const Pattern& p, const ColoredGraph& h, const RolePartition& rp);

/// A cross pair {v, w} (v < w) whose host color differs from the pattern color
/// of its two parts. v is wrong in the pair when its part index is not an
/// endpoint of the pair's color.
struct MisalignedPair {
  std::size_t v = 0;
  std::size_t w = 0;
  bool v_wrong = false;
  bool w_wrong = false;

  std::size_t wrong() const noexcept { return static_cast<std::size_t>(v_wrong) + static_cast<std::size_t>(w_wrong); }
};

struct MisalignedPairs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<MisalignedPair> pairs;
  std::vector<std::size_t> per_part_pair;  // [i*k + j], i < j: |D_ij|
  std::size_t d0 = 0;                      // no wrong vertex (only for non-clique patterns)
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  Rational delta;                          // |D| / binom(n, 2)
  Rational delta_max;                      // 1 - sum binom(n_i, 2) / binom(n, 2)
  std::vector<std::uint8_t> member;        // [v*n + w]

  bool contains(std::size_t v, std::size_t w) const { return member[v * n + w] != 0; }
};

/// Pattern roles whose edge carries color c; empty for the empty color and for
/// colors the pattern does not use.
std::vector<std::size_t> color_roles(const Pattern& p, Color c);

MisalignedPairs misaligned(const Pattern& p, const ColoredGraph& h, const RolePartition& rp);

enum class AuditMode {
  Clique,     // sided tuples; every bad copy holds >= k-2 misaligned pairs
  Connected,  // pairs (e, f); every bad copy holds >= 1 misaligned pair
};

struct CopyViolation {
  std::vector<std::size_t> vertices;
  std::size_t misaligned_pairs = 0;
  std::size_t required = 0;
};

struct SidedWeight {
  AuditMode mode = AuditMode::Clique;
  std::uint64_t j1 = 0;      // 1-sided tuples (clique mode)
  std::uint64_t j2 = 0;      // 2-sided tuples (clique mode)
  std::uint64_t s = 0;       // 2 j1 + j2 (clique mode)
  std::uint64_t j = 0;       // (e, f) pairs with e in D, f in H_b, e inside f
  std::size_t required = 0;  // misaligned pairs demanded per bad copy
  std::optional<std::size_t> fewest;  // least misaligned pairs seen in a bad copy
  std::vector<CopyViolation> violations;
};

/// Throws ValidationError when the pattern does not fit the mode (clique mode
/// needs a complete pattern, connected mode a connected one; both need k >= 3).
SidedWeight sided_audit(const Pattern& p, const ColoredGraph& h, const RolePartition& rp, const CopySplit& split,
                        const MisalignedPairs& mp, AuditMode mode);

/// One family of inequalities lhs <= rhs, evaluated exactly.
struct BoundCheck {
  std::string name;
  std::uint64_t evaluated = 0;
  std::uint64_t violated = 0;
  std::optional<Rational> min_margin;  // smallest rhs - lhs seen
  std::string tightest;                // where the smallest margin occurred
  std::string witness;                 // first violation, if any

  void record(const Rational& lhs, const Rational& rhs, const std::string& where);
};

struct BoundReport {
  std::deque<BoundCheck> checks;  // stable references while appending

  bool ok() const;
  std::uint64_t violations() const;
  const BoundCheck* find(const std::string& name) const;
};

/// Everything the audit computes for one host graph.
struct Decomposition {
  RoleStats stats;
  GlobalStats global;
  RolePartition partition;
  CopySplit split;
  MisalignedPairs pairs;
  std::optional<SidedWeight> sided;  // clique mode for cliques, connected mode otherwise
  BoundReport bounds;
};

/// Pointwise degree bounds (copies through x as role i, for connected
/// patterns), the copy split identity, and the h_g / h_b chains.
/// Pass a partition to audit against it instead of the role partition.
Decomposition bound_audit(const Pattern& p, const ColoredGraph& h, const std::optional<RolePartition>& rp = {});

}  // namespace indlab
