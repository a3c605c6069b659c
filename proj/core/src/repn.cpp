// SPDX-License-Identifier: Apache-2.0
#include "flagcube/repn.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace flagcube {

namespace {
// Beta numbers: strictly decreasing lambda_i + (k - i).
std::vector<int> beta_numbers(const Partition& lambda) {
  const int k = static_cast<int>(lambda.parts.size());
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = lambda.parts[i] + (k - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  // Strip trailing zeros of the staircase.
  Partition p;
  const int k = static_cast<int>(beta.size());
  for (int i = 0; i < k; ++i) {
    int part = beta[i] - (k - 1 - i);
    if (part > 0) p.parts.push_back(part);
    else if (part < 0) throw std::logic_error("invalid beta configuration");
  }
  return p;
}

long long char_rec(const Partition& lambda, const std::vector<int>& mu, std::size_t mi,
                   std::map<std::pair<Partition, std::size_t>, long long>& memo,
                   const std::vector<int>& mu_full);
}  // namespace

long long char_value(const Partition& lambda, const CycleType& mu) {
  if (!lambda.valid() || !mu.valid() || lambda.n() != mu.n())
    throw std::invalid_argument("char_value needs partitions of equal size");
  std::map<std::pair<Partition, std::size_t>, long long> memo;
  return char_rec(lambda, mu.parts, 0, memo, mu.parts);
}

namespace {
long long char_rec(const Partition& lambda, const std::vector<int>& mu, std::size_t mi,
                   std::map<std::pair<Partition, std::size_t>, long long>& memo,
                   const std::vector<int>& mu_full) {
  if (lambda.parts.empty()) return 1;
  auto key = std::make_pair(lambda, mi);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int len = mu[mi];
  std::vector<int> beta = beta_numbers(lambda);
  std::set<int> present(beta.begin(), beta.end());
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int nb = beta[i] - len;
    if (nb < 0 || present.count(nb)) continue;
    // Height = number of beta values strictly between nb and beta[i].
    int height = 0;
    for (int b : beta)
      if (b > nb && b < beta[i]) ++height;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    Partition rest = from_beta(std::move(nbeta));
    long long sub = char_rec(rest, mu_full, mi + 1, memo, mu_full);
    total += (height % 2 == 0 ? sub : -sub);
  }
  memo.emplace(key, total);
  return total;
}
}  // namespace

long long dim_irrep(const Partition& lambda) {
  if (!lambda.valid()) throw std::invalid_argument("invalid partition");
  const std::vector<int> conj = lambda.conjugate();
  mpz_class denom = 1;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j) {
      int hook = lambda.parts[i] - j + conj[j] - static_cast<int>(i) - 1;
      denom *= hook;
    }
  mpz_class dim = factorial(lambda.n()) / denom;
  return dim.get_si();
}

std::vector<Monomial> monomial_basis(int n, int d) {
  std::vector<Edge> pairs;
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.push_back(Edge{a, b});
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    out.push_back(m);
    if (remaining == 0) return;
    for (std::size_t k = start; k < pairs.size(); ++k) {
      m.push_back(pairs[k]);
      rec(k + 1, remaining - 1);
      m.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ProjectionContext::ProjectionContext(int n, int d, const Config& cfg) : n_(n), d_(d) {
  if (n < 1 || n > cfg.repn_max_n || d < 0 || d > cfg.repn_max_d)
    throw std::invalid_argument("projection context caps exceeded");
  basis_ = monomial_basis(n, d);
  for (std::size_t k = 0; k < basis_.size(); ++k) index_[basis_[k]] = static_cast<int>(k);

  for (const Partition& p : all_partitions(n)) classes_.push_back(p);
  class_sizes_.assign(classes_.size(), 0);
  const std::size_t dim = basis_.size();
  class_sums_.assign(classes_.size(), std::vector<std::int64_t>(dim * dim, 0));
  std::map<Partition, std::size_t> class_index;
  for (std::size_t k = 0; k < classes_.size(); ++k) class_index[classes_[k]] = k;

  // One pass over the group, binned by cycle type.
  for (const Permutation& sigma : all_permutations(n)) {
    Partition type{sigma.cycle_lengths()};
    std::size_t ci = class_index.at(type);
    ++class_sizes_[ci];
    auto& mat = class_sums_[ci];
    for (std::size_t col = 0; col < dim; ++col) {
      Monomial image;
      image.reserve(basis_[col].size());
      for (const Edge& e : basis_[col]) image.push_back(make_edge(sigma(e.i), sigma(e.j)));
      std::sort(image.begin(), image.end());
      std::size_t row = static_cast<std::size_t>(index_.at(image));
      mat[row * dim + col] += 1;
    }
  }
}

const RatMatrix& ProjectionContext::isotypic_projection(const Partition& lambda) const {
  auto it = projection_cache_.find(lambda);
  if (it != projection_cache_.end()) return it->second;
  if (lambda.n() != n_) throw std::invalid_argument("partition size != n");
  const std::size_t dim = basis_.size();
  RatMatrix P(static_cast<int>(dim), static_cast<int>(dim));
  const Rat scale = Rat(dim_irrep(lambda)) / Rat(factorial(static_cast<unsigned>(n_)));
  for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
    long long chi = char_value(lambda, classes_[ci]);
    if (chi == 0) continue;
    Rat w = scale * Rat(chi);
    const auto& mat = class_sums_[ci];
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        std::int64_t v = mat[r * dim + c];
        if (v != 0) P.at(static_cast<int>(r), static_cast<int>(c)) += w * Rat(static_cast<long>(v));
      }
  }
  return projection_cache_.emplace(lambda, std::move(P)).first->second;
}

SquareFreePolynomial ProjectionContext::from_coords(const RatVec& coords) const {
  SquareFreePolynomial p(n_);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) p.add_term(basis_[k], coords[k]);
  return p;
}

RatVec ProjectionContext::to_coords(const SquareFreePolynomial& p) const {
  RatVec v(basis_.size(), Rat(0));
  for (const auto& [m, c] : p.terms()) v[static_cast<std::size_t>(index_.at(m))] = c;
  return v;
}

std::vector<SquareFreePolynomial> ProjectionContext::fixed_isotypic_basis(const Tableau& tau) const {
  if (tau.n() != n_) throw std::invalid_argument("tableau size != n");
  const RatMatrix& P = isotypic_projection(tau.shape());
  RowGroup rg = row_group(tau);
  // Row-group orbit averages of basis monomials span the fixed subspace of the
  // whole slice; projecting them spans the fixed part of the isotypic component.
  std::set<Monomial> seen;
  std::vector<RatVec> images;
  for (const Monomial& mono : basis_) {
    if (seen.count(mono)) continue;
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
    Rat share = Rat(1) / Rat(static_cast<unsigned long>(orbit.size()));
    RatVec avg(basis_.size(), Rat(0));
    for (const Monomial& om : orbit) {
      seen.insert(om);
      avg[static_cast<std::size_t>(index_.at(om))] = share;
    }
    images.push_back(P * avg);
  }
  RatMatrix M(static_cast<int>(images.size()), static_cast<int>(basis_.size()));
  for (std::size_t r = 0; r < images.size(); ++r)
    for (std::size_t c = 0; c < basis_.size(); ++c) M.at(static_cast<int>(r), static_cast<int>(c)) = images[r][c];
  std::vector<SquareFreePolynomial> out;
  for (const RatVec& row : row_basis(M)) out.push_back(from_coords(row));
  return out;
}

int ProjectionContext::multiplicity(const Partition& lambda) const {
  return static_cast<int>(fixed_isotypic_basis(row_reading_tableau(lambda)).size());
}

IsotypicReport isotypic_report(int n, int d, const Config& cfg) {
  ProjectionContext ctx(n, d, cfg);
  IsotypicReport rep;
  rep.n = n;
  rep.d = d;
  rep.space_dim = static_cast<long long>(ctx.basis().size());
  for (const Partition& lambda : all_partitions(n)) {
    IsotypicEntry e;
    e.lambda = lambda;
    e.irrep_dim = dim_irrep(lambda);
    auto basis = ctx.fixed_isotypic_basis(row_reading_tableau(lambda));
    e.multiplicity = static_cast<int>(basis.size());
    for (const auto& p : basis) e.basis.push_back(print_polynomial(p));
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

nlohmann::json isotypic_report_to_json(const IsotypicReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["space_dim"] = r.space_dim;
  nlohmann::json arr = nlohmann::json::array();
  long long total = 0;
  for (const auto& e : r.entries) {
    nlohmann::json je;
    je["lambda"] = e.lambda.to_string();
    je["multiplicity"] = e.multiplicity;
    je["irrep_dim"] = e.irrep_dim;
    je["basis"] = e.basis;
    arr.push_back(std::move(je));
    total += static_cast<long long>(e.multiplicity) * e.irrep_dim;
  }
  j["entries"] = std::move(arr);
  j["dim_check"] = total;
  return j;
}

}  // namespace flagcube
