#include "orc/min_cost_flow.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "orc/errors.hpp"

namespace orc {

std::int64_t TransportationSolution::dual_objective(const TransportationProblem& problem) const {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < problem.demand.size(); ++j) total += problem.demand[j] * col_potential[j];
  for (std::size_t i = 0; i < problem.supply.size(); ++i) total -= problem.supply[i] * row_potential[i];
  return total;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

  int add_arc(int from, int to, std::int64_t cap, std::int64_t cost) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap, cost});
    arcs_.push_back({from, 0, -cost});
    out_[static_cast<std::size_t>(from)].push_back(id);
    out_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  std::int64_t flow_on(int arc) const { return arcs_[static_cast<std::size_t>(arc) ^ 1U].cap; }

  /// Pushes `amount` units from source to sink along cheapest paths.
  std::int64_t min_cost_flow(int source, int sink, std::int64_t amount) {
    const auto n = out_.size();
    std::vector<std::int64_t> potential(n, 0);
    std::vector<std::int64_t> dist(n);
    std::vector<int> via(n);
    std::vector<char> done(n);
    std::int64_t sent = 0;
    std::int64_t cost = 0;
    while (sent < amount) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(done.begin(), done.end(), 0);
      dist[static_cast<std::size_t>(source)] = 0;
      // Dense Dijkstra; networks here have at most a few hundred nodes.
      for (;;) {
        std::size_t u = n;
        for (std::size_t v = 0; v < n; ++v) {
          if (!done[v] && dist[v] < kInf && (u == n || dist[v] < dist[u])) u = v;
        }
        if (u == n) break;
        done[u] = 1;
        for (int id : out_[u]) {
          const auto& arc = arcs_[static_cast<std::size_t>(id)];
          if (arc.cap == 0) continue;
          auto w = static_cast<std::size_t>(arc.to);
          std::int64_t nd = dist[u] + arc.cost + potential[u] - potential[w];
          if (nd < dist[w]) {
            dist[w] = nd;
            via[w] = id;
          }
        }
      }
      if (dist[static_cast<std::size_t>(sink)] >= kInf) {
        throw TheoremContradiction("transportation network cannot route the full supply");
      }
      std::int64_t reach = 0;
      for (auto d : dist) {
        if (d < kInf) reach = std::max(reach, d);
      }
      for (std::size_t v = 0; v < n; ++v) potential[v] += dist[v] < kInf ? dist[v] : reach;

      std::int64_t push = amount - sent;
      for (int v = sink; v != source;) {
        const auto& arc = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])];
        push = std::min(push, arc.cap);
        v = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)]) ^ 1U].to;
      }
      for (int v = sink; v != source;) {
        auto id = static_cast<std::size_t>(via[static_cast<std::size_t>(v)]);
        arcs_[id].cap -= push;
        arcs_[id ^ 1U].cap += push;
        cost += push * arcs_[id].cost;
        v = arcs_[id ^ 1U].to;
      }
      sent += push;
    }
    return cost;
  }

 private:
  struct Arc {
    int to;
    std::int64_t cap;
    std::int64_t cost;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

/// Bellman–Ford on the residual graph of the bipartite part. Feasible potentials exist
/// exactly when the flow is optimal; they certify it.
void attach_certificate(const TransportationProblem& problem, TransportationSolution& sol,
                        const std::vector<std::int64_t>& flow) {
  const std::size_t rows = problem.supply.size();
  const std::size_t cols = problem.demand.size();
  std::vector<std::int64_t> pot(rows + cols, 0);
  bool changed = true;
  std::size_t rounds = 0;
  while (changed) {
    if (++rounds > rows + cols + 1) {
      throw TheoremContradiction("negative residual cycle: transportation flow is not optimal");
    }
    changed = false;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::int64_t c = problem.cost_at(i, j);
        auto& pj = pot[rows + j];
        if (pot[i] + c < pj) {
          pj = pot[i] + c;
          changed = true;
        }
        if (flow[i * cols + j] > 0 && pot[rows + j] - c < pot[i]) {
          pot[i] = pot[rows + j] - c;
          changed = true;
        }
      }
    }
  }
  sol.row_potential.assign(pot.begin(), pot.begin() + static_cast<std::ptrdiff_t>(rows));
  sol.col_potential.assign(pot.begin() + static_cast<std::ptrdiff_t>(rows), pot.end());
}

}  // namespace

TransportationSolution solve_transportation(const TransportationProblem& problem) {
  const std::size_t rows = problem.supply.size();
  const std::size_t cols = problem.demand.size();
  if (problem.cost.size() != rows * cols) throw DomainError("cost matrix has the wrong shape");
  auto negative = [](std::int64_t v) { return v < 0; };
  if (std::any_of(problem.supply.begin(), problem.supply.end(), negative) ||
      std::any_of(problem.demand.begin(), problem.demand.end(), negative)) {
    throw DomainError("negative supply or demand");
  }
  if (std::any_of(problem.cost.begin(), problem.cost.end(), negative)) {
    throw DomainError("negative transport cost");
  }
  const std::int64_t total = std::accumulate(problem.supply.begin(), problem.supply.end(), std::int64_t{0});
  if (total != std::accumulate(problem.demand.begin(), problem.demand.end(), std::int64_t{0})) {
    throw DomainError("unbalanced transportation problem");
  }

  const int source = 0;
  const int sink = static_cast<int>(rows + cols) + 1;
  FlowNetwork net(sink + 1);
  for (std::size_t i = 0; i < rows; ++i) net.add_arc(source, 1 + static_cast<int>(i), problem.supply[i], 0);
  std::vector<int> middle(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      middle[i * cols + j] = net.add_arc(1 + static_cast<int>(i), 1 + static_cast<int>(rows + j), total,
                                         problem.cost_at(i, j));
    }
  }
  for (std::size_t j = 0; j < cols; ++j) {
    net.add_arc(1 + static_cast<int>(rows + j), sink, problem.demand[j], 0);
  }

  TransportationSolution sol;
  sol.total_cost = net.min_cost_flow(source, sink, total);
  std::vector<std::int64_t> flow(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      flow[i * cols + j] = net.flow_on(middle[i * cols + j]);
      if (flow[i * cols + j] > 0) {
        sol.shipments.push_back({static_cast<int>(i), static_cast<int>(j), flow[i * cols + j]});
      }
    }
  }
  attach_certificate(problem, sol, flow);
  return sol;
}

}  // namespace orc
