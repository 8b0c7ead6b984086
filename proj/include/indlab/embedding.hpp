#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "indlab/graph.hpp"
#include "indlab/vertex_set.hpp"

namespace indlab {

/// Fixes pattern vertex `role` to host vertex `vertex`.
struct Pin {
  std::size_t role = 0;
  std::size_t vertex = 0;
};

/// Backtracking enumeration of color-preserving injections phi: [k] -> V(H),
/// i.e. phi(i)phi(j) has color chi_P(ij) for every pair, empty pairs included.
///
/// Candidates for the next role are the intersection of per-(vertex, color)
/// bit rows of the already placed roles. Holds references to P and H.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Pattern& pattern, const ColoredGraph& host);

  /// Calls visit(std::span<const std::size_t> phi) once per embedding; phi is indexed by role.
  template <class Visit>
  void run(Visit&& visit, std::span<const Pin> pins = {}) const {
    run_range(visit, pins, 0, n_);
  }

  /// As run(), but only embeddings whose first-ordered role lands in [first, last).
  /// The first-ordered role is the first pin when pins are given.
  template <class Visit>
  void run_range(Visit&& visit, std::span<const Pin> pins, std::size_t first, std::size_t last) const {
    if (impossible_ || k_ > n_) return;
    Frame frame(*this, pins);
    if (frame.invalid) return;
    descend(visit, frame, 0, first, last);
  }

  const std::vector<std::size_t>& default_order() const noexcept { return order_; }
  std::size_t host_order() const noexcept { return n_; }

 private:
  struct Frame {
    Frame(const EmbeddingSearch& s, std::span<const Pin> pins);
    std::vector<std::size_t> order;
    std::vector<std::size_t> pinned;  // per role; n when free
    std::vector<std::size_t> phi;
    std::vector<VertexSet> cand;
    VertexSet used;
    bool invalid = false;
  };

  const VertexSet& row(std::size_t u, Color c) const noexcept { return rows_[u * palette_ + color_id(c)]; }

  template <class Visit>
  void descend(Visit& visit, Frame& f, std::size_t depth, std::size_t first, std::size_t last) const {
    if (depth == k_) {
      visit(std::span<const std::size_t>(f.phi));
      return;
    }
    const std::size_t role = f.order[depth];
    VertexSet& cand = f.cand[depth];
    if (depth == 0) {
      cand = all_;
    } else {
      const std::size_t prev0 = f.order[0];
      cand.assign_and(row(f.phi[prev0], pattern_->color(prev0, role)), all_);
      for (std::size_t d = 1; d < depth; ++d) {
        const std::size_t prev = f.order[d];
        cand &= row(f.phi[prev], pattern_->color(prev, role));
      }
      cand -= f.used;
    }
    if (f.pinned[role] != n_) {
      const std::size_t v = f.pinned[role];
      const bool ok = cand.contains(v) && (depth != 0 || (v >= first && v < last));
      if (!ok) return;
      f.phi[role] = v;
      f.used.insert(v);
      descend(visit, f, depth + 1, first, last);
      f.used.erase(v);
      return;
    }
    cand.for_each([&](std::size_t v) {
      if (depth == 0 && (v < first || v >= last)) return;
      f.phi[role] = v;
      f.used.insert(v);
      descend(visit, f, depth + 1, first, last);
      f.used.erase(v);
    });
  }

  std::vector<std::size_t> order_with_pins(std::span<const Pin> pins) const;

  const Pattern* pattern_;
  const ColoredGraph* host_;
  std::size_t k_;
  std::size_t n_;
  std::size_t palette_;
  bool impossible_ = false;
  VertexSet all_;
  std::vector<VertexSet> rows_;
  std::vector<std::size_t> order_;
};

}  // namespace indlab
