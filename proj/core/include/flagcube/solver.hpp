// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace flagcube {

// Feasibility SDP in block form: find X = diag(X_1..X_B) psd with
// <A_k, X> = b_k. Internally solved as min tr(X) to keep iterates bounded.
struct SdpData {
  std::vector<int> block_sizes;
  // Per constraint: sparse symmetric entries (block, row, col, value), upper
  // triangle only; the off-diagonal value is mirrored implicitly.
  struct Entry {
    int block, row, col;
    double value;
  };
  std::vector<std::vector<Entry>> constraints;
  std::vector<double> b;
};

enum class NumericStatus { feasible, infeasible, limit };

struct NumericOutcome {
  NumericStatus status = NumericStatus::limit;
  std::vector<Eigen::MatrixXd> X;
  double primal_residual = 0.0;
  double mu = 0.0;
  int iterations = 0;
  double dual_objective = 0.0;
  std::string note;
};

/// Dense primal-dual interior-point method (HKM direction). Deterministic for
/// fixed inputs. Infeasibility is reported through a normalized dual
/// improving-ray test.
NumericOutcome solve_sdp_feasibility(const SdpData& sdp, double tol, int max_iterations = 300);

}  // namespace flagcube
