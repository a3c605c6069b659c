// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "flagcube/flags.hpp"
#include "flagcube/qpoly.hpp"
#include "flagcube/shapes.hpp"

namespace flagcube {

enum class FlagPolyKind { g, d };

// A flag polynomial materialized over [n].
// kind g: sums the edge monomial over every injection of the flag's vertices
//         into [n] that places label i at theta(i) (non-induced copy count).
// kind d: same sum with (1 - x) factors on the flag's non-edges (induced count).
struct FlagPolynomial {
  Flag flag;
  ThetaLabeling theta;
  int n = 0;
  FlagPolyKind kind = FlagPolyKind::g;
  SquareFreePolynomial poly;
};

/// theta(i) = i.
ThetaLabeling canonical_theta(int t);

FlagPolynomial g_poly(const Flag& F, const ThetaLabeling& theta, int n);

/// Product-form construction.
FlagPolynomial d_poly(const Flag& F, const ThetaLabeling& theta, int n);

/// Signed sum of g-polynomials over the poset above F. Test oracle for d_poly;
/// the two routes must agree exactly.
SquareFreePolynomial d_poly_mobius(const Flag& F, const ThetaLabeling& theta, int n);

/// sym(d_F^{theta0} d_{F'}^{theta0}) at the canonical theta0(i) = i, which by
/// the averaging identity equals the expectation over all labelings.
SquareFreePolynomial expectation_product(const Flag& F, const Flag& Fp, int n);

/// Same average computed literally over every theta in Inj([t],[n]); oracle.
SquareFreePolynomial expectation_product_by_average(const Flag& F, const Flag& Fp, int n);

/// g_F^theta == (n-t)!/(n-f)! * sym over the hook row group of one fixed
/// embedded monomial.
bool check_g_equals_scaled_hook_sym(const Flag& F, const ThetaLabeling& theta, int n);

/// For E(F) == E(F') and f' >= f: g_{F'} == C(n-f, f'-f) (f'-f)! g_F.
bool check_isolated_vertex_scaling(const Flag& F, const Flag& Fp, const ThetaLabeling& theta,
                                   int n);

enum class SpanKind { g, d, hook_sym };

/// Spanning set for the row-group-fixed subspace W attached to the tableau:
/// flag polynomials over every intersection type on n - lambda_1 vertices at
/// flag size 2d (kinds g/d), or hook-row-group symmetrized monomials of degree
/// at most d up to row-group orbits (kind hook_sym).
std::vector<SquareFreePolynomial> spanning_set_for_W(const Tableau& tau, int d, SpanKind kind);

}  // namespace flagcube
