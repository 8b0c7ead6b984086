#include "indlab/embedding.hpp"

#include <algorithm>

#include "indlab/error.hpp"

namespace indlab {

EmbeddingSearch::EmbeddingSearch(const Pattern& pattern, const ColoredGraph& host)
    : pattern_(&pattern),
      host_(&host),
      k_(pattern.order()),
      n_(host.order()),
      palette_(host.palette()),
      all_(VertexSet::full(host.order())) {
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = i + 1; j < k_; ++j)
      if (color_id(pattern.color(i, j)) >= palette_) impossible_ = true;

  rows_.assign(n_ * palette_, VertexSet(n_));
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t w = 0; w < n_; ++w)
      if (u != w) rows_[u * palette_ + color_id(host.color(u, w))].insert(w);

  order_ = order_with_pins({});
}

std::vector<std::size_t> EmbeddingSearch::order_with_pins(std::span<const Pin> pins) const {
  // Pinned roles first, then greedily the role with the most pattern edges into
  // the placed set (ties: higher degree, then lower index).
  std::vector<std::size_t> order;
  std::vector<bool> placed(k_, false);
  for (const Pin& p : pins) {
    if (!placed[p.role]) {
      placed[p.role] = true;
      order.push_back(p.role);
    }
  }
  while (order.size() < k_) {
    std::size_t best = k_;
    std::size_t best_links = 0;
    for (std::size_t r = 0; r < k_; ++r) {
      if (placed[r]) continue;
      std::size_t links = 0;
      for (std::size_t s : order)
        if (pattern_->color(r, s) != kEmpty) ++links;
      const bool better = best == k_ || links > best_links ||
                          (links == best_links && pattern_->degree(r) > pattern_->degree(best));
      if (better) {
        best = r;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

EmbeddingSearch::Frame::Frame(const EmbeddingSearch& s, std::span<const Pin> pins)
    : order(pins.empty() ? s.order_ : s.order_with_pins(pins)),
      pinned(s.k_, s.n_),
      phi(s.k_, 0),
      cand(s.k_, VertexSet(s.n_)),
      used(s.n_) {
  for (const Pin& p : pins) {
    if (p.role >= s.k_ || p.vertex >= s.n_) throw ValidationError("pin outside pattern or host");
    if (pinned[p.role] != s.n_ && pinned[p.role] != p.vertex) invalid = true;
    pinned[p.role] = p.vertex;
  }
  for (std::size_t a = 0; a < s.k_; ++a)
    for (std::size_t b = a + 1; b < s.k_; ++b)
      if (pinned[a] != s.n_ && pinned[a] == pinned[b]) invalid = true;
}

}  // namespace indlab
