// SPDX-License-Identifier: Apache-2.0
#include "flagcube/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace flagcube {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& av = a.at(r, k);
      if (av == 0) continue;
      for (int c = 0; c < b.cols(); ++c) {
        const Rat& bv = b.at(k, c);
        if (bv != 0) out.at(r, c) += av * bv;
      }
    }
  return out;
}

RatVec operator*(const RatMatrix& a, const RatVec& v) {
  if (a.cols() != static_cast<int>(v.size())) throw std::invalid_argument("matrix shape mismatch");
  RatVec out(a.rows(), Rat(0));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (a.at(r, c) != 0 && v[c] != 0) out[r] += a.at(r, c) * v[c];
  return out;
}

namespace {
// In-place forward elimination; returns pivot columns.
std::vector<int> eliminate(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    Rat inv = Rat(1) / m.at(row, col);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}
}  // namespace

int rank(RatMatrix m) { return static_cast<int>(eliminate(m).size()); }

std::vector<RatVec> row_basis(const RatMatrix& m_in) {
  RatMatrix m = m_in;
  std::vector<int> pivots = eliminate(m);
  std::vector<RatVec> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    RatVec row(m.cols());
    for (int c = 0; c < m.cols(); ++c) row[c] = m.at(static_cast<int>(r), c);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool in_row_span(const RatMatrix& m, const RatVec& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("length mismatch");
  RatMatrix aug(m.rows() + 1, m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
  for (int c = 0; c < m.cols(); ++c) aug.at(m.rows(), c) = v[c];
  return rank(m) == rank(aug);
}

std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b) {
  if (A.rows() != static_cast<int>(b.size())) throw std::invalid_argument("length mismatch");
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (int r = 0; r < A.rows(); ++r) {
    for (int c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols()) = b[r];
  }
  // Eliminate only over the coefficient columns.
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < A.cols() && row < aug.rows(); ++col) {
    int p = -1;
    for (int r = row; r < aug.rows(); ++r)
      if (aug.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c <= A.cols(); ++c) std::swap(aug.at(p, c), aug.at(row, c));
    Rat inv = Rat(1) / aug.at(row, col);
    for (int c = col; c <= A.cols(); ++c) aug.at(row, c) *= inv;
    for (int r = 0; r < aug.rows(); ++r) {
      if (r == row || aug.at(r, col) == 0) continue;
      Rat f = aug.at(r, col);
      for (int c = col; c <= A.cols(); ++c) aug.at(r, c) -= f * aug.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  for (int r = row; r < aug.rows(); ++r)
    if (aug.at(r, A.cols()) != 0) return std::nullopt;
  RatVec x(A.cols(), Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), A.cols());
  return x;
}

PsdOutcome psd_check_exact(const RatMatrix& M) {
  if (!M.is_symmetric()) throw std::invalid_argument("psd_check_exact needs a symmetric matrix");
  const int n = M.rows();
  PsdOutcome out;
  out.witness.perm.resize(n);
  std::iota(out.witness.perm.begin(), out.witness.perm.end(), 0);
  out.witness.L = RatMatrix::identity(n);
  out.witness.D.assign(n, Rat(0));

  RatMatrix A = M;  // working copy, permuted in place alongside perm
  auto& perm = out.witness.perm;
  auto& L = out.witness.L;
  auto& D = out.witness.D;

  auto swap_rows_cols = [&](int a, int b) {
    if (a == b) return;
    for (int c = 0; c < n; ++c) std::swap(A.at(a, c), A.at(b, c));
    for (int r = 0; r < n; ++r) std::swap(A.at(r, a), A.at(r, b));
    std::swap(perm[a], perm[b]);
    // Keep the already-built part of L consistent (columns < k of rows a,b).
    for (int c = 0; c < n; ++c) std::swap(L.at(a, c), L.at(b, c));
  };

  // Recovers a full counterexample from one for the trailing Schur block:
  // solve L^T w = z, then undo the permutation.
  auto lift_counterexample = [&](int k, const RatVec& vsub, const Rat& value) {
    RatVec z(n, Rat(0));
    for (int i = k; i < n; ++i) z[i] = vsub[i - k];
    RatVec w(n, Rat(0));
    for (int i = n - 1; i >= 0; --i) {
      Rat s = z[i];
      for (int r = i + 1; r < n; ++r) s -= L.at(r, i) * w[r];
      w[i] = s;  // L has unit diagonal
    }
    out.counterexample.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) out.counterexample[perm[i]] = w[i];
    out.value = value;
    out.psd = false;
  };

  for (int k = 0; k < n; ++k) {
    int pos = -1, neg = -1;
    for (int r = k; r < n; ++r) {
      if (A.at(r, r) > 0 && pos < 0) pos = r;
      if (A.at(r, r) < 0 && neg < 0) neg = r;
    }
    if (neg >= 0) {
      // A negative diagonal entry of the Schur complement is already a witness.
      RatVec vsub(n - k, Rat(0));
      vsub[neg - k] = 1;
      lift_counterexample(k, vsub, A.at(neg, neg));
      return out;
    }
    if (pos < 0) {
      // All remaining diagonal entries vanish: psd iff the whole block vanishes.
      for (int r = k; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
          if (A.at(r, c) != 0) {
            // v = e_r - e_c hits 2*A(r,c) with zero diagonal; flip sign as needed.
            RatVec vsub(n - k, Rat(0));
            vsub[r - k] = 1;
            vsub[c - k] = A.at(r, c) > 0 ? Rat(-1) : Rat(1);
            Rat value = A.at(r, c) > 0 ? Rat(-2) * A.at(r, c) : Rat(2) * A.at(r, c);
            lift_counterexample(k, vsub, value);
            return out;
          }
      break;  // trailing zero block; D entries stay 0
    }
    swap_rows_cols(k, pos);
    D[k] = A.at(k, k);
    for (int r = k + 1; r < n; ++r) L.at(r, k) = A.at(r, k) / D[k];
    for (int r = k + 1; r < n; ++r) {
      if (A.at(r, k) == 0) continue;
      Rat f = A.at(r, k) / D[k];
      for (int c = k + 1; c < n; ++c) A.at(r, c) -= f * A.at(k, c);
    }
    for (int r = k + 1; r < n; ++r) {
      A.at(r, k) = 0;
      A.at(k, r) = 0;
    }
  }
  // Reset the stray entries of L introduced by row swaps above column k.
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) L.at(r, c) = (r == c) ? Rat(1) : Rat(0);
  out.psd = true;
  return out;
}

bool ldl_witness_valid(const RatMatrix& M, const LdlWitness& w) {
  const int n = M.rows();
  if (M.cols() != n) return false;
  if (static_cast<int>(w.perm.size()) != n || w.L.rows() != n || w.L.cols() != n ||
      static_cast<int>(w.D.size()) != n)
    return false;
  std::vector<bool> seen(n, false);
  for (int p : w.perm) {
    if (p < 0 || p >= n || seen[p]) return false;
    seen[p] = true;
  }
  for (int r = 0; r < n; ++r) {
    if (w.L.at(r, r) != 1) return false;
    for (int c = r + 1; c < n; ++c)
      if (w.L.at(r, c) != 0) return false;
  }
  for (const Rat& d : w.D)
    if (d < 0) return false;
  // P M P^T == L D L^T entrywise.
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Rat lhs = M.at(w.perm[r], w.perm[c]);
      Rat rhs(0);
      for (int k = 0; k < n; ++k) {
        if (w.D[k] == 0) continue;
        rhs += w.L.at(r, k) * w.D[k] * w.L.at(c, k);
      }
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace flagcube
