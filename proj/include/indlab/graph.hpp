#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace indlab {

/// Edge color id. Id 0 is the empty color: the pair is a non-edge.
enum class Color : std::uint16_t {};

inline constexpr Color kEmpty{0};

constexpr std::uint16_t color_id(Color c) noexcept { return static_cast<std::uint16_t>(c); }
constexpr Color make_color(std::size_t id) noexcept { return Color{static_cast<std::uint16_t>(id)}; }

/// Unordered vertex pair, stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Complete graph on n vertices whose pairs carry colors from [0, palette).
class ColoredGraph {
 public:
  ColoredGraph() = default;
  /// All pairs start out empty.
  ColoredGraph(std::size_t n, std::size_t palette);

  std::size_t order() const noexcept { return n_; }
  std::size_t palette() const noexcept { return palette_; }

  Color color(std::size_t u, std::size_t v) const noexcept { return cells_[u * n_ + v]; }
  /// Sets both orientations; rejects u == v and ids outside the palette.
  void set_color(std::size_t u, std::size_t v, Color c);

  /// Subgraph induced on `vertices`, renumbered in the given order.
  ColoredGraph induced(const std::vector<std::size_t>& vertices) const;
  /// Relabels vertex v to perm[v].
  ColoredGraph permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t palette_ = 1;
  std::vector<Color> cells_;
};

/// Rainbow pattern on k vertices: each edge carries its own non-empty color,
/// every non-edge carries the empty color.
class Pattern {
 public:
  /// Colors 1..|E| assigned in the given edge order.
  static Pattern from_edges(std::size_t k, const std::vector<Edge>& edges);
  /// Explicit colors; they must be non-empty and pairwise distinct.
  Pattern(std::size_t k, std::vector<Edge> edges, std::vector<Color> colors);

  std::size_t order() const noexcept { return k_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Color>& edge_colors() const noexcept { return colors_; }
  /// Palette size of the complete-graph view: largest color id + 1.
  std::size_t palette() const noexcept { return palette_; }

  Color color(std::size_t i, std::size_t j) const noexcept { return view_.color(i, j); }
  /// The pattern as a complete graph with non-edges colored empty.
  const ColoredGraph& complete_view() const noexcept { return view_; }

  std::size_t degree(std::size_t i) const noexcept { return degrees_[i]; }
  std::size_t min_degree() const noexcept;
  bool is_clique() const noexcept { return edges_.size() == k_ * (k_ - 1) / 2; }
  bool is_connected() const;
  /// Vertex sets of the connected components (edges only), ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  /// Pattern induced on `vertices`, keeping the original color ids.
  Pattern sub_pattern(const std::vector<std::size_t>& vertices) const;
  /// Endpoints of the edge carrying color c, if c is one of this pattern's colors.
  std::optional<Edge> endpoints(Color c) const noexcept;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.k_ == b.k_ && a.edges_ == b.edges_ && a.colors_ == b.colors_;
  }

 private:
  std::size_t k_ = 0;
  std::vector<Edge> edges_;
  std::vector<Color> colors_;
  std::size_t palette_ = 1;
  std::vector<std::size_t> degrees_;
  std::vector<std::optional<Edge>> by_color_;
  ColoredGraph view_;
};

/// Pattern on [k] realizing the rainbow clique, colors in lexicographic edge order.
Pattern rainbow_clique(std::size_t k);
/// Path 0-1-...-(k-1).
Pattern rainbow_path(std::size_t k);
/// Cycle 0-1-...-(k-1)-0.
Pattern rainbow_cycle(std::size_t k);
/// `count` disjoint edges on 2*count vertices.
Pattern rainbow_matching(std::size_t count);

struct ValidationReport {
  bool rainbow = false;
  bool connected = false;
  std::size_t min_degree = 0;
  std::size_t k = 0;
};

/// Re-checks the rainbow property and reports connectivity and minimum degree.
ValidationReport validate_pattern(const Pattern& p);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// BFS over pattern edges from one source vertex. Empty pairs are never traversed.
struct DistanceProfile {
  std::size_t source = 0;
  std::vector<std::size_t> dist;    // kUnreachable when disconnected
  std::vector<std::size_t> layers;  // layers[r-1] = number of vertices at distance r
  std::size_t eccentricity = 0;     // largest finite distance
};

DistanceProfile distance_profile(const Pattern& p, std::size_t source);

}  // namespace indlab
