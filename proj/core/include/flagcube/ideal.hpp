// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "flagcube/config.hpp"
#include "flagcube/qpoly.hpp"

namespace flagcube {

enum class IdealKind { hypercube, hypercube_plus };

// The hypercube ideal, optionally augmented by S_n-orbit-closed generator
// families given through one representative each.
struct IdealSpec {
  int n = 0;
  IdealKind kind = IdealKind::hypercube;
  std::string name = "hypercube";
  std::vector<SquareFreePolynomial> extra_generators;  // representatives
};

IdealSpec hypercube_ideal(int n);
/// Adds the orbit of the 4-cycle monomial x_12 x_23 x_34 x_14.
IdealSpec c4free_ideal(int n);
/// Adds both triangle families: all-red x_ab x_ac x_bc and its color swap.
IdealSpec ramsey33_ideal(int n);
/// "hypercube", "c4free", "ramsey33", or "file:<path>" (one representative
/// polynomial per line in the text grammar).
IdealSpec parse_ideal_spec(const std::string& spec, int n);

nlohmann::json ideal_to_json(const IdealSpec&);
IdealSpec ideal_from_json(const nlohmann::json&);

/// Distinct images of p under S_n.
std::vector<SquareFreePolynomial> orbit_closure(const SquareFreePolynomial& rep);

/// x_e -> 1 - x_e on every variable.
SquareFreePolynomial swap_colors(const SquareFreePolynomial& p);

// Zero set of the ideal inside the hypercube, as sorted point masks.
struct Variety {
  int n = 0;
  std::vector<std::uint32_t> points;
};

/// Scans all 2^C(n,2) points. Throws when C(n,2) exceeds the configured bits.
Variety enumerate_variety(const IdealSpec& ideal, const Config& cfg = default_config());

/// Exact values of p at each variety point, in point order.
std::vector<Rat> function_table(const SquareFreePolynomial& p, const Variety& v);

// Result of reducing modulo the ideal: for the plain hypercube the square-free
// normal form decides equality at any n; for augmented ideals equality is
// decided as functions on the enumerated variety.
struct ReducedForm {
  IdealKind kind = IdealKind::hypercube;
  SquareFreePolynomial normal_form;
  std::vector<Rat> table;  // filled for hypercube_plus
};

ReducedForm reduce_mod_ideal(const SquareFreePolynomial& p, const IdealSpec& ideal,
                             const Variety* variety = nullptr,
                             const Config& cfg = default_config());

bool is_zero_mod_ideal(const SquareFreePolynomial& p, const IdealSpec& ideal,
                       const Variety* variety = nullptr, const Config& cfg = default_config());

bool equal_mod_ideal(const SquareFreePolynomial& p, const SquareFreePolynomial& q,
                     const IdealSpec& ideal, const Variety* variety = nullptr,
                     const Config& cfg = default_config());

// Denominator-cleared polynomial for fast repeated evaluation at point masks.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(const SquareFreePolynomial& p);

  /// Numerator value at the point, with the common denominator factored out;
  /// zero testing needs only this.
  bool is_zero_at(std::uint32_t point_mask) const;
  Rat value_at(std::uint32_t point_mask) const;

 private:
  int n_ = 0;
  bool fits64_ = false;
  mpz_class denom_ = 1;
  std::vector<std::pair<std::uint32_t, long long>> terms64_;
  std::vector<std::pair<std::uint32_t, mpz_class>> terms_big_;
};

}  // namespace flagcube
