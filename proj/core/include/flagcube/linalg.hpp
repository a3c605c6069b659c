// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "flagcube/rational.hpp"

namespace flagcube {

using RatVec = std::vector<Rat>;

// Dense exact-rational matrix, row major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  bool operator==(const RatMatrix&) const = default;

  RatMatrix transposed() const;
  bool is_symmetric() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVec operator*(const RatMatrix& a, const RatVec& v);

int rank(RatMatrix m);

/// Independent rows in reduced row-echelon form (pivots normalized to 1).
std::vector<RatVec> row_basis(const RatMatrix& m);

/// Whether v lies in the row space of m.
bool in_row_span(const RatMatrix& m, const RatVec& v);

/// One exact solution of A x = b, free variables set to zero; nullopt when
/// inconsistent.
std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b);

// Pivoted exact factorization P M P^T = L D L^T with unit-lower L.
struct LdlWitness {
  std::vector<int> perm;  // row i of the permuted matrix is row perm[i] of M
  RatMatrix L;
  RatVec D;
};

struct PsdOutcome {
  bool psd = false;
  LdlWitness witness;    // valid when psd
  RatVec counterexample; // v with v^T M v < 0 when not psd
  Rat value;             // that negative value
};

/// Exact psd decision via symmetric pivoting. Throws on a non-symmetric input.
PsdOutcome psd_check_exact(const RatMatrix& M);

/// Recomputes P M P^T and L D L^T and compares entrywise; also checks D >= 0
/// and the unit-lower shape of L.
bool ldl_witness_valid(const RatMatrix& M, const LdlWitness& w);

}  // namespace flagcube
