#pragma once

// Dense min-cost assignment (Hungarian / shortest augmenting path, O(n^3)).
// Used for eigenvalue multiset matching and strand continuation.

#include <Eigen/Dense>
#include <vector>

namespace bkc {

struct Assignment {
    std::vector<int> row_to_col;  // row i matched to column row_to_col[i]
    double cost = 0.0;            // total cost of the matching
};

/// Minimum-cost perfect matching on a square cost matrix. Deterministic for
/// identical inputs (ties resolved by scan order).
Assignment min_cost_assignment(const Eigen::MatrixXd& cost);

/// Cost of the best matching that differs from `base` in at least one pair.
/// Returns +inf for 1x1 problems (no alternative exists).
double second_best_assignment_cost(const Eigen::MatrixXd& cost, const Assignment& base);

}  // namespace bkc
