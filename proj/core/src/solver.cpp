// SPDX-License-Identifier: Apache-2.0
#include "flagcube/solver.hpp"

#include <algorithm>
#include <cmath>

namespace flagcube {

namespace {
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<MatrixXd> constraint_matrices(const SdpData& sdp, int k) {
  std::vector<MatrixXd> A;
  for (int s : sdp.block_sizes) A.push_back(MatrixXd::Zero(s, s));
  for (const auto& e : sdp.constraints[k]) {
    A[e.block](e.row, e.col) = e.value;
    A[e.block](e.col, e.row) = e.value;
  }
  return A;
}

double inner(const std::vector<MatrixXd>& P, const std::vector<MatrixXd>& Q) {
  double acc = 0;
  for (std::size_t b = 0; b < P.size(); ++b) acc += (P[b].cwiseProduct(Q[b])).sum();
  return acc;
}

/// Largest alpha in (0, 1] with M + alpha*D staying positive definite, backed
/// off by a fraction of the boundary.
double max_step(const std::vector<MatrixXd>& M, const std::vector<MatrixXd>& D) {
  double alpha = 1.0;
  for (std::size_t b = 0; b < M.size(); ++b) {
    if (M[b].rows() == 0) continue;
    Eigen::LLT<MatrixXd> llt(M[b]);
    MatrixXd L = llt.matrixL();
    MatrixXd W = L.triangularView<Eigen::Lower>().solve(D[b]);
    MatrixXd G = L.triangularView<Eigen::Lower>().solve(W.transpose()).transpose();
    // G = L^-1 D L^-T, symmetric up to roundoff
    Eigen::SelfAdjointEigenSolver<MatrixXd> es((G + G.transpose()) / 2.0);
    double lmin = es.eigenvalues().minCoeff();
    if (lmin < 0) alpha = std::min(alpha, 0.98 / (-lmin));
  }
  return alpha;
}
}  // namespace

NumericOutcome solve_sdp_feasibility(const SdpData& sdp, double tol, int max_iterations) {
  const int m = static_cast<int>(sdp.constraints.size());
  NumericOutcome out;
  int N = 0;
  for (int s : sdp.block_sizes) N += s;
  if (N == 0) {
    out.status = m == 0 ? NumericStatus::feasible : NumericStatus::infeasible;
    for (int k = 0; k < m; ++k)
      if (std::abs(sdp.b[k]) > tol) out.status = NumericStatus::infeasible;
    return out;
  }

  std::vector<std::vector<MatrixXd>> A;
  A.reserve(m);
  for (int k = 0; k < m; ++k) A.push_back(constraint_matrices(sdp, k));

  std::vector<MatrixXd> X, S, C;
  for (int s : sdp.block_sizes) {
    X.push_back(MatrixXd::Identity(s, s));
    S.push_back(MatrixXd::Identity(s, s));
    C.push_back(MatrixXd::Identity(s, s));
  }
  VectorXd y = VectorXd::Zero(m);
  double bnorm = 1.0;
  for (double v : sdp.b) bnorm = std::max(bnorm, std::abs(v));

  if (m == 0) {
    out.status = NumericStatus::feasible;
    out.X = X;
    return out;
  }

  auto ray_test = [&](const VectorXd& yv) {
    double yn = yv.norm();
    if (yn < 1e-8) return false;
    VectorXd yh = yv / yn;
    double obj = 0;
    for (int k = 0; k < m; ++k) obj += sdp.b[k] * yh[k];
    if (obj < 1e-7) return false;
    // lambda_max of sum yh_k A_k must be (numerically) non-positive.
    double lmax = -1e300;
    for (std::size_t b = 0; b < X.size(); ++b) {
      MatrixXd J = MatrixXd::Zero(sdp.block_sizes[b], sdp.block_sizes[b]);
      for (int k = 0; k < m; ++k) J += yh[k] * A[k][b];
      if (J.rows() == 0) continue;
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(J);
      lmax = std::max(lmax, es.eigenvalues().maxCoeff());
    }
    return lmax < 1e-6;
  };

  for (int iter = 1; iter <= max_iterations; ++iter) {
    out.iterations = iter;
    // Residuals.
    VectorXd rp(m);
    for (int k = 0; k < m; ++k) rp[k] = sdp.b[k] - inner(A[k], X);
    std::vector<MatrixXd> Rd;
    for (std::size_t b = 0; b < X.size(); ++b) {
      MatrixXd R = C[b] - S[b];
      for (int k = 0; k < m; ++k) R -= y[k] * A[k][b];
      Rd.push_back(R);
    }
    double mu = inner(X, S) / N;
    out.mu = mu;
    out.primal_residual = rp.lpNorm<Eigen::Infinity>();
    double rd_norm = 0;
    for (const auto& R : Rd) rd_norm = std::max(rd_norm, R.cwiseAbs().maxCoeff());

    if (out.primal_residual <= tol * bnorm && rd_norm <= tol && mu <= tol) {
      out.status = NumericStatus::feasible;
      out.X = X;
      out.dual_objective = sdp.b.empty() ? 0 : y.dot(Eigen::Map<const VectorXd>(sdp.b.data(), m));
      return out;
    }
    out.dual_objective = y.dot(Eigen::Map<const VectorXd>(sdp.b.data(), m));
    if (out.dual_objective > 1e7 * bnorm && ray_test(y)) {
      out.status = NumericStatus::infeasible;
      out.note = "dual improving ray";
      return out;
    }

    // Sinv and helper products per block.
    std::vector<MatrixXd> Sinv;
    for (std::size_t b = 0; b < S.size(); ++b) {
      if (S[b].rows() == 0) {
        Sinv.push_back(S[b]);
        continue;
      }
      Eigen::LLT<MatrixXd> llt(S[b]);
      Sinv.push_back(llt.solve(MatrixXd::Identity(S[b].rows(), S[b].cols())));
    }

    double sigma = 0.3;
    // Schur complement M[k][l] = sum_b tr(A_k X A_l Sinv).
    MatrixXd M(m, m);
    std::vector<std::vector<MatrixXd>> XAS(m);  // X A_l Sinv per block
    for (int l = 0; l < m; ++l) {
      XAS[l].resize(X.size());
      for (std::size_t b = 0; b < X.size(); ++b) XAS[l][b] = X[b] * A[l][b] * Sinv[b];
    }
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) {
        double acc = 0;
        for (std::size_t b = 0; b < X.size(); ++b)
          acc += (A[k][b].cwiseProduct(XAS[l][b].transpose())).sum();
        M(k, l) = acc;
      }
    // rhs_k = rp_k - <A_k, sigma mu Sinv - X> + <A_k, X Rd Sinv>.
    VectorXd rhs(m);
    for (int k = 0; k < m; ++k) {
      double t1 = 0, t2 = 0;
      for (std::size_t b = 0; b < X.size(); ++b) {
        t1 += (A[k][b].cwiseProduct(sigma * mu * Sinv[b] - X[b])).sum();
        t2 += (A[k][b].cwiseProduct((X[b] * Rd[b] * Sinv[b]).transpose())).sum();
      }
      rhs[k] = rp[k] - t1 + t2;
    }
    // Tiny Tikhonov term keeps the factorization stable near degeneracy.
    M.diagonal().array() += 1e-13 * (1.0 + M.diagonal().cwiseAbs().maxCoeff());
    Eigen::LDLT<MatrixXd> ldlt(0.5 * (M + M.transpose()));
    VectorXd dy = ldlt.solve(rhs);

    std::vector<MatrixXd> dS, dX;
    for (std::size_t b = 0; b < X.size(); ++b) {
      MatrixXd ds = Rd[b];
      for (int k = 0; k < m; ++k) ds -= dy[k] * A[k][b];
      MatrixXd dx = sigma * mu * Sinv[b] - X[b] - X[b] * ds * Sinv[b];
      dx = ((dx + dx.transpose()) / 2.0).eval();
      dS.push_back(std::move(ds));
      dX.push_back(std::move(dx));
    }
    double ap = std::min(1.0, max_step(X, dX));
    double ad = std::min(1.0, max_step(S, dS));
    for (std::size_t b = 0; b < X.size(); ++b) {
      X[b] += ap * dX[b];
      S[b] += ad * dS[b];
    }
  }
  out.status = ray_test(y) ? NumericStatus::infeasible : NumericStatus::limit;
  if (out.status == NumericStatus::infeasible) out.note = "dual improving ray at iteration cap";
  out.X = X;
  return out;
}

}  // namespace flagcube
