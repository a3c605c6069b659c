// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "flagcube/config.hpp"
#include "flagcube/linalg.hpp"
#include "flagcube/qpoly.hpp"
#include "flagcube/shapes.hpp"

namespace flagcube {

using CycleType = Partition;

/// Irreducible character value via the Murnaghan-Nakayama border-strip
/// recursion. Requires |lambda| == |mu|.
long long char_value(const Partition& lambda, const CycleType& mu);

/// Hook-length-formula dimension.
long long dim_irrep(const Partition& lambda);

/// All square-free monomials of degree <= d on edge variables over [n],
/// ordered by (degree, lex).
std::vector<Monomial> monomial_basis(int n, int d);

// Shared machinery for the projection operators on the degree-<=d slice of
// the quotient ring: the monomial basis plus one integer class-sum action
// matrix per conjugacy class. Small-n validation oracle, hard capped.
class ProjectionContext {
 public:
  ProjectionContext(int n, int d, const Config& cfg = default_config());

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Monomial>& basis() const { return basis_; }

  /// Idempotent matrix projecting onto the isotypic component of lambda.
  const RatMatrix& isotypic_projection(const Partition& lambda) const;

  /// Basis of the row-group-fixed subspace of the isotypic component for the
  /// tableau's shape (the space the spanning sets must cover).
  std::vector<SquareFreePolynomial> fixed_isotypic_basis(const Tableau& tau) const;

  /// dim of that subspace; equal for all tableaux of one shape.
  int multiplicity(const Partition& lambda) const;

  SquareFreePolynomial from_coords(const RatVec& coords) const;
  RatVec to_coords(const SquareFreePolynomial& p) const;

 private:
  int n_, d_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int> index_;
  std::vector<CycleType> classes_;
  std::vector<std::uint64_t> class_sizes_;
  std::vector<std::vector<std::int64_t>> class_sums_;  // row-major per class
  mutable std::map<Partition, RatMatrix> projection_cache_;
};

struct IsotypicEntry {
  Partition lambda;
  int multiplicity = 0;        // m_lambda = dim of the fixed subspace
  long long irrep_dim = 0;     // n_lambda
  std::vector<std::string> basis;  // printed basis of the fixed subspace
};

struct IsotypicReport {
  int n = 0, d = 0;
  long long space_dim = 0;  // sum over i<=d of C(C(n,2), i)
  std::vector<IsotypicEntry> entries;
};

IsotypicReport isotypic_report(int n, int d, const Config& cfg = default_config());
nlohmann::json isotypic_report_to_json(const IsotypicReport& r);

}  // namespace flagcube
