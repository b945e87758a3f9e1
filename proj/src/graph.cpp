#include "orc/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <string>

#include "orc/errors.hpp"

namespace orc {

namespace detail {

struct DistanceCache {
  explicit DistanceCache(std::size_t n) : rows(n), storage(n) {
    for (auto& r : rows) r.store(nullptr, std::memory_order_relaxed);
  }

  std::vector<std::atomic<const std::vector<int>*>> rows;
  std::vector<std::unique_ptr<const std::vector<int>>> storage;
  std::mutex mutex;
};

}  // namespace detail

namespace {

std::vector<int> bfs(const std::vector<std::vector<Vertex>>& adjacency, Vertex source) {
  std::vector<int> dist(adjacency.size(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(adjacency.size());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    int next = dist[static_cast<std::size_t>(u)] + 1;
    for (Vertex w : adjacency[static_cast<std::size_t>(u)]) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == kUnreachable) {
        dw = next;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.vertex_count()) + ")");
  }
}

}  // namespace

Graph::Graph() : cache_(std::make_shared<detail::DistanceCache>(0)) {}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return adjacency_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

const std::vector<int>& Graph::distances_from(Vertex x) const {
  check_vertex(*this, x);
  auto idx = static_cast<std::size_t>(x);
  if (const auto* row = cache_->rows[idx].load(std::memory_order_acquire)) return *row;
  auto fresh = std::make_unique<const std::vector<int>>(bfs(adjacency_, x));
  std::lock_guard lock(cache_->mutex);
  if (const auto* row = cache_->rows[idx].load(std::memory_order_acquire)) return *row;
  const auto* raw = fresh.get();
  cache_->storage[idx] = std::move(fresh);
  cache_->rows[idx].store(raw, std::memory_order_release);
  return *raw;
}

void Graph::materialize_distances() const {
  for (Vertex x = 0; x < vertex_count(); ++x) distances_from(x);
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& nb : g.adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice += nb.size();
  }
  g.edge_count_ = twice / 2;
  g.cache_ = std::make_shared<detail::DistanceCache>(static_cast<std::size_t>(n));
  return g;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto& row = g.distances_from(0);
  return std::none_of(row.begin(), row.end(), [](int d) { return d == kUnreachable; });
}

int eccentricity(const Graph& g, Vertex x) {
  const auto& row = g.distances_from(x);
  return *std::max_element(row.begin(), row.end());
}

std::optional<int> diameter(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  int best = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) best = std::max(best, eccentricity(g, x));
  return best;
}

bool is_regular(const Graph& g) {
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (side[static_cast<std::size_t>(root)] != -1) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw == -1) {
          sw = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

VertexSet shell(const Graph& g, Vertex x, int h) {
  VertexSet out;
  if (h < 0) return out;
  const auto& row = g.distances_from(x);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (row[static_cast<std::size_t>(v)] == h) out.push_back(v);
  }
  return out;
}

LocalProfile local_profile(const Graph& g, Vertex x, Vertex y) {
  check_vertex(g, y);
  const auto& row = g.distances_from(x);
  int h = row[static_cast<std::size_t>(y)];
  if (!is_reachable(h)) {
    throw DomainError("local_profile: vertices " + std::to_string(x) + " and " +
                      std::to_string(y) + " are disconnected");
  }
  LocalProfile p{.x = x, .y = y, .h = h, .a_set = {}, .b_set = {}, .c_set = {}};
  for (Vertex w : g.neighbors(y)) {
    int dw = row[static_cast<std::size_t>(w)];
    if (dw == h - 1) {
      p.c_set.push_back(w);
    } else if (dw == h) {
      p.a_set.push_back(w);
    } else {
      p.b_set.push_back(w);
    }
  }
  return p;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every root; a non-tree edge (u,w) closes a closed walk of length
  // d(u)+d(w)+1 that contains a cycle no longer than it, and the minimum over
  // roots is attained on a shortest cycle.
  std::optional<int> best;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      int du = dist[static_cast<std::size_t>(u)];
      if (best && 2 * du + 1 >= *best) break;
      for (Vertex w : g.neighbors(u)) {
        int& dw = dist[static_cast<std::size_t>(w)];
        if (dw == kUnreachable) {
          dw = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          int len = du + dw + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace orc
