// SPDX-License-Identifier: Apache-2.0
#include "flagcube/ideal.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace flagcube {

IdealSpec hypercube_ideal(int n) { return IdealSpec{n, IdealKind::hypercube, "hypercube", {}}; }

IdealSpec c4free_ideal(int n) {
  if (n < 4) throw std::invalid_argument("c4free ideal needs n >= 4");
  SquareFreePolynomial rep(n);
  rep.add_term({make_edge(1, 2), make_edge(2, 3), make_edge(3, 4), make_edge(1, 4)}, 1);
  return IdealSpec{n, IdealKind::hypercube_plus, "c4free", {rep}};
}

IdealSpec ramsey33_ideal(int n) {
  if (n < 3) throw std::invalid_argument("ramsey33 ideal needs n >= 3");
  SquareFreePolynomial red(n);
  red.add_term({make_edge(1, 2), make_edge(1, 3), make_edge(2, 3)}, 1);
  return IdealSpec{n, IdealKind::hypercube_plus, "ramsey33", {red, swap_colors(red)}};
}

IdealSpec parse_ideal_spec(const std::string& spec, int n) {
  if (spec == "hypercube") return hypercube_ideal(n);
  if (spec == "c4free") return c4free_ideal(n);
  if (spec == "ramsey33") return ramsey33_ideal(n);
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::invalid_argument("cannot open ideal file " + spec.substr(5));
    IdealSpec ideal{n, IdealKind::hypercube_plus, spec, {}};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      ideal.extra_generators.push_back(parse_polynomial(line, n));
    }
    if (ideal.extra_generators.empty()) ideal.kind = IdealKind::hypercube;
    return ideal;
  }
  throw std::invalid_argument("unknown ideal spec: " + spec);
}

nlohmann::json ideal_to_json(const IdealSpec& ideal) {
  nlohmann::json j;
  j["n"] = ideal.n;
  j["kind"] = ideal.kind == IdealKind::hypercube ? "hypercube" : "hypercube_plus";
  j["name"] = ideal.name;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.extra_generators) gens.push_back(print_polynomial(g));
  j["generators"] = std::move(gens);
  return j;
}

IdealSpec ideal_from_json(const nlohmann::json& j) {
  IdealSpec ideal;
  ideal.n = j.at("n").get<int>();
  ideal.kind = j.at("kind").get<std::string>() == "hypercube" ? IdealKind::hypercube
                                                              : IdealKind::hypercube_plus;
  ideal.name = j.at("name").get<std::string>();
  for (const auto& g : j.at("generators"))
    ideal.extra_generators.push_back(parse_polynomial(g.get<std::string>(), ideal.n));
  return ideal;
}

std::vector<SquareFreePolynomial> orbit_closure(const SquareFreePolynomial& rep) {
  const int n = rep.ground_set();
  std::set<std::string> seen;
  std::vector<SquareFreePolynomial> out;
  std::vector<SquareFreePolynomial> queue{rep};
  seen.insert(print_polynomial(rep));
  out.push_back(rep);
  std::vector<Permutation> gens;
  for (int i = 1; i < n; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
  while (!queue.empty()) {
    SquareFreePolynomial cur = std::move(queue.back());
    queue.pop_back();
    for (const Permutation& g : gens) {
      SquareFreePolynomial img = apply_permutation(g, cur);
      if (seen.insert(print_polynomial(img)).second) {
        out.push_back(img);
        queue.push_back(std::move(img));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.terms() < b.terms();
  });
  return out;
}

SquareFreePolynomial swap_colors(const SquareFreePolynomial& p) {
  const int n = p.ground_set();
  SquareFreePolynomial out(n);
  for (const auto& [m, c] : p.terms()) {
    // prod (1 - x_e) expands over subsets of the support.
    const std::size_t k = m.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Monomial sub;
      int bits = 0;
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1u) {
          sub.push_back(m[i]);
          ++bits;
        }
      out.add_term(sub, bits % 2 == 0 ? c : -c);
    }
  }
  return out;
}

CompiledPoly::CompiledPoly(const SquareFreePolynomial& p) : n_(p.ground_set()) {
  if (n_ * (n_ - 1) / 2 > 32) throw std::invalid_argument("compiled evaluation needs C(n,2) <= 32");
  mpz_class lcm_den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_class den = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  denom_ = lcm_den;
  fits64_ = true;
  mpz_class abs_sum = 0;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t mask = 0;
    for (const Edge& e : m) mask |= std::uint32_t{1} << CubePoint::edge_bit(n_, e);
    mpz_class scaled = c.get_num() * (lcm_den / c.get_den());
    terms_big_.emplace_back(mask, scaled);
    abs_sum += abs(scaled);
  }
  if (abs_sum.fits_slong_p()) {
    for (const auto& [mask, v] : terms_big_) terms64_.emplace_back(mask, v.get_si());
  } else {
    fits64_ = false;
  }
}

bool CompiledPoly::is_zero_at(std::uint32_t pt) const {
  if (fits64_) {
    long long acc = 0;
    for (const auto& [mask, v] : terms64_)
      if ((pt & mask) == mask) acc += v;
    return acc == 0;
  }
  mpz_class acc = 0;
  for (const auto& [mask, v] : terms_big_)
    if ((pt & mask) == mask) acc += v;
  return acc == 0;
}

Rat CompiledPoly::value_at(std::uint32_t pt) const {
  mpz_class acc = 0;
  for (const auto& [mask, v] : terms_big_)
    if ((pt & mask) == mask) acc += v;
  Rat out(acc);
  out /= Rat(denom_);
  return out;
}

Variety enumerate_variety(const IdealSpec& ideal, const Config& cfg) {
  const int n = ideal.n;
  const int bits = n * (n - 1) / 2;
  if (bits > cfg.variety_max_bits) throw std::length_error("variety enumeration cap exceeded");
  std::vector<CompiledPoly> gens;
  for (const auto& rep : ideal.extra_generators)
    for (const auto& g : orbit_closure(rep)) gens.emplace_back(g);

  const std::uint64_t total = std::uint64_t{1} << bits;
  const int threads = std::max(1, cfg.threads);
  std::vector<std::vector<std::uint32_t>> partial(threads);
  auto scan = [&](int tid) {
    std::uint64_t lo = total * tid / threads, hi = total * (tid + 1) / threads;
    auto& mine = partial[tid];
    for (std::uint64_t p = lo; p < hi; ++p) {
      bool ok = true;
      for (const auto& g : gens)
        if (!g.is_zero_at(static_cast<std::uint32_t>(p))) {
          ok = false;
          break;
        }
      if (ok) mine.push_back(static_cast<std::uint32_t>(p));
    }
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(scan, t);
    for (auto& th : pool) th.join();
  }
  Variety v{n, {}};
  for (auto& part : partial) v.points.insert(v.points.end(), part.begin(), part.end());
  return v;
}

std::vector<Rat> function_table(const SquareFreePolynomial& p, const Variety& v) {
  if (p.ground_set() != v.n) throw std::invalid_argument("ground set mismatch");
  CompiledPoly cp(p);
  std::vector<Rat> out;
  out.reserve(v.points.size());
  for (std::uint32_t pt : v.points) out.push_back(cp.value_at(pt));
  return out;
}

ReducedForm reduce_mod_ideal(const SquareFreePolynomial& p, const IdealSpec& ideal,
                             const Variety* variety, const Config& cfg) {
  if (p.ground_set() != ideal.n) throw std::invalid_argument("ground set mismatch");
  ReducedForm out;
  out.kind = ideal.kind;
  out.normal_form = p;  // terms are the square-free normal form already
  if (ideal.kind == IdealKind::hypercube_plus) {
    Variety local;
    if (!variety) {
      local = enumerate_variety(ideal, cfg);
      variety = &local;
    }
    out.table = function_table(p, *variety);
  }
  return out;
}

bool is_zero_mod_ideal(const SquareFreePolynomial& p, const IdealSpec& ideal,
                       const Variety* variety, const Config& cfg) {
  if (p.ground_set() != ideal.n) throw std::invalid_argument("ground set mismatch");
  if (ideal.kind == IdealKind::hypercube) return p.is_zero();
  Variety local;
  if (!variety) {
    local = enumerate_variety(ideal, cfg);
    variety = &local;
  }
  CompiledPoly cp(p);
  for (std::uint32_t pt : variety->points)
    if (!cp.is_zero_at(pt)) return false;
  return true;
}

bool equal_mod_ideal(const SquareFreePolynomial& p, const SquareFreePolynomial& q,
                     const IdealSpec& ideal, const Variety* variety, const Config& cfg) {
  return is_zero_mod_ideal(p - q, ideal, variety, cfg);
}

}  // namespace flagcube
