#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace orc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Distance value for pairs in different components.
inline constexpr int kUnreachable = -1;

constexpr bool is_reachable(int distance) noexcept { return distance != kUnreachable; }

namespace detail {
struct DistanceCache;
}

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Distance rows are computed by BFS on first request and memoized; the cache is
/// shared between copies and safe to fill from several threads at once.
class Graph {
 public:
  Graph();

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  /// Canonical edge list: u < v, lexicographic.
  std::vector<Edge> edges() const;

  /// BFS distances from x; kUnreachable for other components.
  const std::vector<int>& distances_from(Vertex x) const;
  int distance(Vertex u, Vertex v) const { return distances_from(u)[static_cast<std::size_t>(v)]; }

  /// Fills every distance row. Operations that scan all pairs call this first.
  void materialize_distances() const;

  friend Graph build_graph(int n, std::span<const Edge> edges);

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::shared_ptr<detail::DistanceCache> cache_;
};

/// Simple graph on n vertices with the given edges. Duplicates collapse, order is irrelevant.
/// Throws InputError on out-of-range endpoints or self-loops.
Graph build_graph(int n, std::span<const Edge> edges);

bool is_connected(const Graph& g);

/// Largest distance from x within its component.
int eccentricity(const Graph& g, Vertex x);

/// Diameter of a connected graph; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

bool is_regular(const Graph& g);

/// Two-coloring if the graph is bipartite: side[v] in {0, 1}.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// S_h(x): vertices at distance exactly h. Empty for h < 0 or h beyond the eccentricity.
VertexSet shell(const Graph& g, Vertex x, int h);

/// Partition of N(y) by distance to x, at h = d(x,y):
/// C at distance h-1, A at distance h, B at distance h+1.
struct LocalProfile {
  Vertex x = 0;
  Vertex y = 0;
  int h = 0;
  VertexSet a_set;
  VertexSet b_set;
  VertexSet c_set;

  int a() const noexcept { return static_cast<int>(a_set.size()); }
  int b() const noexcept { return static_cast<int>(b_set.size()); }
  int c() const noexcept { return static_cast<int>(c_set.size()); }
};

/// Throws DomainError when x and y lie in different components.
LocalProfile local_profile(const Graph& g, Vertex x, Vertex y);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

}  // namespace orc
