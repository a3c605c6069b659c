// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagcube/rational.hpp"

namespace flagcube {

// Unordered vertex pair, stored canonically with i < j. Vertices are 1-based.
struct Edge {
  int i = 0;
  int j = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Canonical edge {min(a,b), max(a,b)}. Throws on a == b or a < 1.
Edge make_edge(int a, int b);

// Square-free monomial: a strictly increasing edge list. The empty list is 1.
using Monomial = std::vector<Edge>;

bool monomial_valid(const Monomial& m, int n);

// Bijection on [n]; images[i-1] = sigma(i).
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  static Permutation from_images(std::vector<int> images);  // validates

  int n() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }
  Permutation compose(const Permutation& rhs) const;  // (this∘rhs)(i) = this(rhs(i))
  Permutation inverse() const;
  bool is_identity() const;
  /// Cycle lengths, sorted decreasing.
  std::vector<int> cycle_lengths() const;
  auto operator<=>(const Permutation&) const = default;
};

/// All elements of the subgroup generated by gens, or throws std::length_error
/// past cap elements.
std::vector<Permutation> materialize_group(std::span<const Permutation> gens, std::size_t cap);

std::vector<Permutation> all_permutations(int n);

// Point of the edge hypercube: the characteristic vector of a graph on [n].
struct CubePoint {
  int n = 0;
  std::uint64_t mask = 0;  // bit edge_bit(n, e) set iff the edge is present

  static int edge_bit(int n, const Edge& e);
  static CubePoint from_edges(int n, std::span<const Edge> edges);
  static CubePoint from_mask(int n, std::uint64_t mask);
  bool has(const Edge& e) const;
  std::vector<Edge> edges() const;
};

// Exact-rational polynomial over the quotient by <x_e^2 - x_e>: the terms map
// is the square-free normal form, so two values are equal as functions on the
// hypercube iff their term maps are identical.
class SquareFreePolynomial {
 public:
  SquareFreePolynomial() = default;
  explicit SquareFreePolynomial(int n) : n_(n) {}
  SquareFreePolynomial(int n, const Rat& constant);
  static SquareFreePolynomial variable(int n, const Edge& e);

  int ground_set() const { return n_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }
  Rat coeff(const Monomial& m) const;

  /// Accumulates c on monomial m, pruning a resulting zero. Validates edges.
  void add_term(const Monomial& m, const Rat& c);

  SquareFreePolynomial& operator+=(const SquareFreePolynomial& rhs);
  SquareFreePolynomial& operator-=(const SquareFreePolynomial& rhs);
  SquareFreePolynomial& operator*=(const Rat& c);
  bool operator==(const SquareFreePolynomial& rhs) const = default;

 private:
  int n_ = 0;
  std::map<Monomial, Rat> terms_;
};

SquareFreePolynomial operator+(SquareFreePolynomial a, const SquareFreePolynomial& b);
SquareFreePolynomial operator-(SquareFreePolynomial a, const SquareFreePolynomial& b);
SquareFreePolynomial operator-(SquareFreePolynomial a);
SquareFreePolynomial operator*(const Rat& c, SquareFreePolynomial p);

/// Product with every exponent >= 2 collapsed to 1 (edge-set union per term pair).
SquareFreePolynomial mul_mod_hypercube(const SquareFreePolynomial& p,
                                       const SquareFreePolynomial& q);
SquareFreePolynomial operator*(const SquareFreePolynomial& p, const SquareFreePolynomial& q);

/// sigma . x_{ij} = x_{sigma(i)sigma(j)}, extended multiplicatively and linearly.
SquareFreePolynomial apply_permutation(const Permutation& sigma, const SquareFreePolynomial& p);

/// (1/n!) sum_{sigma in S_n} sigma.p, computed by monomial-orbit enumeration.
SquareFreePolynomial symmetrize_full(const SquareFreePolynomial& p);

/// Average of p over the subgroup generated by gens, via orbit decomposition of
/// monomials. group_size is validated against a materialization cap when small.
SquareFreePolynomial symmetrize_subgroup(const SquareFreePolynomial& p,
                                         std::span<const Permutation> gens,
                                         std::uint64_t group_size);

Rat evaluate(const SquareFreePolynomial& p, const CubePoint& x);

/// S_n-orbit of a monomial, sorted. Orbit members are graphs on [n]; the orbit
/// is enumerated through injections of the support, never through all of S_n.
std::vector<Monomial> monomial_orbit(const Monomial& m, int n);

/// Canonical labeled form: the support relabeled onto {1..k} minimizing the
/// edge list. Two monomials lie in one S_n-orbit iff their canonical forms match.
Monomial canonical_monomial(const Monomial& m);

// Text grammar (bit-exact round trip with print_polynomial):
//   poly := term (('+'|'-') term)*
//   term := coeff ('*' var)* | var ('*' var)*
//   var  := 'x{' int ',' int '}'
//   coeff := int ('/' int)?
SquareFreePolynomial parse_polynomial(std::string_view text, int n);
std::string print_polynomial(const SquareFreePolynomial& p);

}  // namespace flagcube
