// SPDX-License-Identifier: Apache-2.0
#include "flagcube/orbit_basis.hpp"

#include <stdexcept>

namespace flagcube {

std::size_t OrbitBasis::index_of(const Monomial& m) {
  Monomial canon = canonical_monomial(m);
  auto it = index_.find(canon);
  if (it != index_.end()) return it->second;
  std::size_t idx = reps_.size();
  reps_.push_back(canon);
  sizes_.push_back(monomial_orbit(canon, n_).size());
  index_.emplace(std::move(canon), idx);
  return idx;
}

std::optional<std::size_t> OrbitBasis::find(const Monomial& m) const {
  auto it = index_.find(canonical_monomial(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void OrbitBasis::absorb(const SquareFreePolynomial& p) {
  if (p.ground_set() != n_) throw std::invalid_argument("ground set mismatch");
  for (const auto& [m, c] : p.terms()) index_of(m);
}

std::optional<RatVec> OrbitBasis::coordinates(const SquareFreePolynomial& p) const {
  if (p.ground_set() != n_) throw std::invalid_argument("ground set mismatch");
  RatVec coords(reps_.size(), Rat(0));
  std::vector<std::uint64_t> counts(reps_.size(), 0);
  for (const auto& [m, c] : p.terms()) {
    auto idx = find(m);
    if (!idx) return std::nullopt;
    if (counts[*idx] == 0) {
      coords[*idx] = c;
    } else if (coords[*idx] != c) {
      return std::nullopt;  // coefficients differ inside one orbit
    }
    ++counts[*idx];
  }
  // Every touched orbit must be fully present.
  for (std::size_t k = 0; k < reps_.size(); ++k)
    if (counts[k] != 0 && counts[k] != sizes_[k]) return std::nullopt;
  return coords;
}

SquareFreePolynomial OrbitBasis::reconstruct(const RatVec& coords) const {
  if (coords.size() != reps_.size()) throw std::invalid_argument("length mismatch");
  SquareFreePolynomial out(n_);
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    if (coords[k] == 0) continue;
    for (const Monomial& m : monomial_orbit(reps_[k], n_)) out.add_term(m, coords[k]);
  }
  return out;
}

}  // namespace flagcube
