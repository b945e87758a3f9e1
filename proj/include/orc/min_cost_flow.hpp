#pragma once

#include <cstdint>
#include <vector>

namespace orc {

/// Balanced transportation instance: integer supplies (rows), demands (columns) and
/// non-negative integer unit costs, row-major.
struct TransportationProblem {
  std::vector<std::int64_t> supply;
  std::vector<std::int64_t> demand;
  std::vector<std::int64_t> cost;

  std::int64_t cost_at(std::size_t row, std::size_t col) const { return cost[row * demand.size() + col]; }
};

struct Shipment {
  int row = 0;
  int col = 0;
  std::int64_t amount = 0;
};

/// Optimal flow plus an integral dual certificate:
/// col_potential[j] - row_potential[i] <= cost(i,j) everywhere, with equality on every shipment.
struct TransportationSolution {
  std::int64_t total_cost = 0;
  /// Positive shipments sorted by (row, col).
  std::vector<Shipment> shipments;
  std::vector<std::int64_t> row_potential;
  std::vector<std::int64_t> col_potential;

  /// sum_j demand_j psi_j - sum_i supply_i phi_i; equals total_cost at optimality.
  std::int64_t dual_objective(const TransportationProblem& problem) const;
};

/// Successive shortest paths with Dijkstra on reduced costs. Throws DomainError on an
/// unbalanced instance, negative supplies or negative costs.
TransportationSolution solve_transportation(const TransportationProblem& problem);

}  // namespace orc
