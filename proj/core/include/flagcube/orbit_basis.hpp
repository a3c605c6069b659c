// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "flagcube/linalg.hpp"
#include "flagcube/qpoly.hpp"

namespace flagcube {

// Coordinates for S_n-invariant square-free polynomials: one coordinate per
// isomorphism class of edge subgraphs, represented by the canonical monomial
// embedded at the smallest labels.
class OrbitBasis {
 public:
  explicit OrbitBasis(int n) : n_(n) {}

  int n() const { return n_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<Monomial>& reps() const { return reps_; }
  std::uint64_t orbit_size(std::size_t idx) const { return sizes_[idx]; }

  /// Index of the orbit of m, inserting it if new.
  std::size_t index_of(const Monomial& m);
  /// Lookup without insertion.
  std::optional<std::size_t> find(const Monomial& m) const;

  /// Registers every orbit appearing in p.
  void absorb(const SquareFreePolynomial& p);

  /// Coordinates of an invariant polynomial; nullopt when p is not invariant
  /// or touches an unregistered orbit.
  std::optional<RatVec> coordinates(const SquareFreePolynomial& p) const;

  /// Inverse of coordinates: sum of coords[o] * (orbit sum of o).
  SquareFreePolynomial reconstruct(const RatVec& coords) const;

 private:
  int n_;
  std::vector<Monomial> reps_;
  std::vector<std::uint64_t> sizes_;
  std::map<Monomial, std::size_t> index_;  // canonical form -> index
};

}  // namespace flagcube
