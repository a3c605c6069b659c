// SPDX-License-Identifier: Apache-2.0
#include "flagcube/flagpoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flagcube {

namespace {
void check_theta(const Flag& F, const ThetaLabeling& theta, int n) {
  if (theta.t() != F.type.t) throw std::invalid_argument("theta length != type size");
  if (F.f > n) throw std::invalid_argument("flag larger than ground set");
  std::vector<bool> used(n + 1, false);
  for (int v : theta.images) {
    if (v < 1 || v > n || used[v]) throw std::invalid_argument("theta not injective into [n]");
    used[v] = true;
  }
}

/// Calls fn for every injection of the unlabeled vertices {t+1..f} into
/// [n] \ theta([t]); h maps vertex v (1-based) to h[v-1].
void for_each_injection(const Flag& F, const ThetaLabeling& theta, int n,
                        const std::function<void(const std::vector<int>&)>& fn) {
  const int t = F.type.t;
  std::vector<int> h(F.f);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= t; ++i) {
    h[i - 1] = theta(i);
    used[theta(i)] = true;
  }
  std::function<void(int)> rec = [&](int v) {
    if (v > F.f) {
      fn(h);
      return;
    }
    for (int target = 1; target <= n; ++target) {
      if (used[target]) continue;
      used[target] = true;
      h[v - 1] = target;
      rec(v + 1);
      h[v - 1] = 0;
      used[target] = false;
    }
  };
  rec(t + 1);
}

std::vector<Edge> non_edges(const Flag& F) {
  std::vector<Edge> out;
  for (int a = 1; a < F.f; ++a)
    for (int b = a + 1; b <= F.f; ++b) {
      Edge e{a, b};
      if (!std::binary_search(F.edges.begin(), F.edges.end(), e)) out.push_back(e);
    }
  return out;
}
}  // namespace

ThetaLabeling canonical_theta(int t) {
  ThetaLabeling theta;
  theta.images.resize(t);
  std::iota(theta.images.begin(), theta.images.end(), 1);
  return theta;
}

FlagPolynomial g_poly(const Flag& F, const ThetaLabeling& theta, int n) {
  check_theta(F, theta, n);
  SquareFreePolynomial acc(n);
  for_each_injection(F, theta, n, [&](const std::vector<int>& h) {
    Monomial m;
    m.reserve(F.edges.size());
    for (const Edge& e : F.edges) m.push_back(make_edge(h[e.i - 1], h[e.j - 1]));
    std::sort(m.begin(), m.end());
    acc.add_term(m, 1);
  });
  return FlagPolynomial{F, theta, n, FlagPolyKind::g, std::move(acc)};
}

FlagPolynomial d_poly(const Flag& F, const ThetaLabeling& theta, int n) {
  check_theta(F, theta, n);
  const std::vector<Edge> missing = non_edges(F);
  SquareFreePolynomial acc(n);
  for_each_injection(F, theta, n, [&](const std::vector<int>& h) {
    // Expand prod x_edges * prod (1-x) over non-edges directly: the injection
    // maps distinct flag pairs to distinct ground pairs, so no collisions.
    Monomial base;
    base.reserve(F.edges.size());
    for (const Edge& e : F.edges) base.push_back(make_edge(h[e.i - 1], h[e.j - 1]));
    std::sort(base.begin(), base.end());
    const std::size_t nm = missing.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nm); ++mask) {
      Monomial m = base;
      int bits = 0;
      for (std::size_t k = 0; k < nm; ++k)
        if ((mask >> k) & 1u) {
          m.push_back(make_edge(h[missing[k].i - 1], h[missing[k].j - 1]));
          ++bits;
        }
      std::sort(m.begin(), m.end());
      acc.add_term(m, bits % 2 == 0 ? 1 : -1);
    }
  });
  return FlagPolynomial{F, theta, n, FlagPolyKind::d, std::move(acc)};
}

SquareFreePolynomial d_poly_mobius(const Flag& F, const ThetaLabeling& theta, int n) {
  check_theta(F, theta, n);
  FlagPoset P = flag_poset(F.type, F.f);
  SquareFreePolynomial acc(n);
  for (const auto& [Fp, sign] : mobius_coefficients(F, P)) {
    SquareFreePolynomial g = g_poly(Fp, theta, n).poly;
    g *= Rat(sign);
    acc += g;
  }
  return acc;
}

SquareFreePolynomial expectation_product(const Flag& F, const Flag& Fp, int n) {
  if (F.type != Fp.type) throw std::invalid_argument("expectation_product needs a shared type");
  const ThetaLabeling theta0 = canonical_theta(F.type.t);
  SquareFreePolynomial a = d_poly(F, theta0, n).poly;
  SquareFreePolynomial b = (F == Fp) ? a : d_poly(Fp, theta0, n).poly;
  return symmetrize_full(mul_mod_hypercube(a, b));
}

SquareFreePolynomial expectation_product_by_average(const Flag& F, const Flag& Fp, int n) {
  if (F.type != Fp.type) throw std::invalid_argument("expectation_product needs a shared type");
  const int t = F.type.t;
  SquareFreePolynomial acc(n);
  std::uint64_t count = 0;
  std::vector<int> chosen;
  std::vector<bool> used(n + 1, false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(chosen.size()) == t) {
      ThetaLabeling theta{chosen};
      acc += mul_mod_hypercube(d_poly(F, theta, n).poly, d_poly(Fp, theta, n).poly);
      ++count;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      chosen.push_back(v);
      rec();
      chosen.pop_back();
      used[v] = false;
    }
  };
  rec();
  acc *= Rat(1) / Rat(static_cast<unsigned long>(count));
  return acc;
}

bool check_g_equals_scaled_hook_sym(const Flag& F, const ThetaLabeling& theta, int n) {
  check_theta(F, theta, n);
  const int t = F.type.t;
  // One fixed injection: unlabeled vertices onto the smallest free labels.
  std::vector<int> h(F.f);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= t; ++i) {
    h[i - 1] = theta(i);
    used[theta(i)] = true;
  }
  int next = 1;
  for (int v = t + 1; v <= F.f; ++v) {
    while (used[next]) ++next;
    h[v - 1] = next;
    used[next] = true;
  }
  SquareFreePolynomial xm(n);
  Monomial m;
  for (const Edge& e : F.edges) m.push_back(make_edge(h[e.i - 1], h[e.j - 1]));
  std::sort(m.begin(), m.end());
  xm.add_term(m, 1);

  Tableau hook = hook_theta_tableau(theta, n);
  RowGroup rg = row_group(hook);
  SquareFreePolynomial symmed = symmetrize_subgroup(xm, rg.generators, rg.size);
  // (n-t)!/(n-f)! = (n-f+1)(n-f+2)...(n-t)
  Rat scale(1);
  for (int k = n - F.f + 1; k <= n - t; ++k) scale *= k;
  symmed *= scale;
  return g_poly(F, theta, n).poly == symmed;
}

bool check_isolated_vertex_scaling(const Flag& F, const Flag& Fp, const ThetaLabeling& theta,
                                   int n) {
  if (F.edges != Fp.edges) throw std::invalid_argument("flags must share an edge set");
  if (F.type != Fp.type) throw std::invalid_argument("flags must share a type");
  if (Fp.f < F.f) throw std::invalid_argument("second flag must not be smaller");
  Rat factor = Rat(binomial(n - F.f, Fp.f - F.f) * factorial(Fp.f - F.f));
  SquareFreePolynomial lhs = g_poly(Fp, theta, n).poly;
  SquareFreePolynomial rhs = g_poly(F, theta, n).poly;
  rhs *= factor;
  return lhs == rhs;
}

std::vector<SquareFreePolynomial> spanning_set_for_W(const Tableau& tau, int d, SpanKind kind) {
  if (!tau.valid()) throw std::invalid_argument("invalid tableau");
  const int n = tau.n();
  const int lambda1 = tau.shape().part(0);
  const int t = n - lambda1;
  if (t > 2 * d) throw std::invalid_argument("first part below n - 2d");

  std::vector<SquareFreePolynomial> out;
  if (kind == SpanKind::hook_sym) {
    Tableau hook = hook_of(tau);
    RowGroup rg = row_group(hook);
    std::vector<Edge> pairs;
    for (int a = 1; a < n; ++a)
      for (int b = a + 1; b <= n; ++b) pairs.push_back(Edge{a, b});
    // All square-free monomials of degree <= d.
    std::vector<Monomial> monos{Monomial{}};
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
      if (remaining == 0) return;
      for (std::size_t k = start; k < pairs.size(); ++k) {
        m.push_back(pairs[k]);
        monos.push_back(m);
        rec(k + 1, remaining - 1);
        m.pop_back();
      }
    };
    rec(0, d);
    // One symmetrization per row-group orbit.
    std::set<Monomial> seen;
    for (const Monomial& mono : monos) {
      std::set<Monomial> orbit{mono};
      std::vector<Monomial> queue{mono};
      while (!queue.empty()) {
        Monomial cur = std::move(queue.back());
        queue.pop_back();
        for (const Permutation& g : rg.generators) {
          Monomial nm;
          for (const Edge& e : cur) nm.push_back(make_edge(g(e.i), g(e.j)));
          std::sort(nm.begin(), nm.end());
          if (orbit.insert(nm).second) queue.push_back(std::move(nm));
        }
      }
      if (!seen.insert(*orbit.begin()).second) continue;
      SquareFreePolynomial xm(n);
      xm.add_term(mono, 1);
      out.push_back(symmetrize_subgroup(xm, rg.generators, rg.size));
    }
    return out;
  }

  const ThetaLabeling theta = theta_of(tau);
  for (const IntersectionType& T : all_intersection_types(t)) {
    for (const Flag& F : enumerate_flags(T, 2 * d)) {
      // Flags carry labels 1..t; theta places them at the tableau's tail labels.
      if (kind == SpanKind::g)
        out.push_back(g_poly(F, theta, n).poly);
      else
        out.push_back(d_poly(F, theta, n).poly);
    }
  }
  return out;
}

}  // namespace flagcube
