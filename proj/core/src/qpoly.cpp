// SPDX-License-Identifier: Apache-2.0
#include "flagcube/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flagcube {

Edge make_edge(int a, int b) {
  if (a == b || a < 1 || b < 1) throw std::invalid_argument("edge needs two distinct vertices >= 1");
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool monomial_valid(const Monomial& m, int n) {
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Edge& e = m[k];
    if (e.i < 1 || e.i >= e.j || e.j > n) return false;
    if (k > 0 && !(m[k - 1] < e)) return false;
  }
  return true;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("transposition out of range");
  std::swap(p.images[a - 1], p.images[b - 1]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
      throw std::invalid_argument("not a bijection on [n]");
    seen[v - 1] = true;
  }
  return Permutation{std::move(images)};
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (n() != rhs.n()) throw std::invalid_argument("composing permutations of unequal degree");
  Permutation out;
  out.images.resize(images.size());
  for (int i = 1; i <= n(); ++i) out.images[i - 1] = (*this)(rhs(i));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(images.size());
  for (int i = 1; i <= n(); ++i) out.images[images[i - 1] - 1] = i;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<bool> seen(images.size(), false);
  std::vector<int> lens;
  for (int i = 1; i <= n(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0, j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      j = (*this)(j);
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::vector<Permutation> materialize_group(std::span<const Permutation> gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("materialize_group needs at least one generator");
  int n = gens.front().n();
  std::set<Permutation> group;
  std::vector<Permutation> queue{Permutation::identity(n)};
  group.insert(queue.front());
  while (!queue.empty()) {
    Permutation g = std::move(queue.back());
    queue.pop_back();
    for (const Permutation& s : gens) {
      Permutation h = s.compose(g);
      if (group.insert(h).second) {
        if (group.size() > cap) throw std::length_error("generated group exceeds size cap");
        queue.push_back(std::move(h));
      }
    }
  }
  return {group.begin(), group.end()};
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{images});
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

namespace {
int edge_rank(int n, const Edge& e) {
  // Lexicographic rank of (i,j), i<j: sum_{r<i} (n-r) + (j-i-1).
  return (e.i - 1) * n - (e.i * (e.i - 1)) / 2 + (e.j - e.i - 1);
}
}  // namespace

int CubePoint::edge_bit(int n, const Edge& e) { return edge_rank(n, e); }

CubePoint CubePoint::from_edges(int n, std::span<const Edge> edges) {
  CubePoint x;
  x.n = n;
  for (const Edge& e : edges) {
    if (e.j > n) throw std::invalid_argument("edge outside [n]");
    x.mask |= std::uint64_t{1} << edge_rank(n, e);
  }
  return x;
}

CubePoint CubePoint::from_mask(int n, std::uint64_t mask) {
  if (n * (n - 1) / 2 > 64) throw std::invalid_argument("too many edges for a 64-bit point");
  return CubePoint{n, mask};
}

bool CubePoint::has(const Edge& e) const {
  return (mask >> edge_rank(n, e)) & 1u;
}

std::vector<Edge> CubePoint::edges() const {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (has(Edge{i, j})) es.push_back(Edge{i, j});
  return es;
}

SquareFreePolynomial::SquareFreePolynomial(int n, const Rat& constant) : n_(n) {
  if (constant != 0) terms_[Monomial{}] = constant;
}

SquareFreePolynomial SquareFreePolynomial::variable(int n, const Edge& e) {
  SquareFreePolynomial p(n);
  p.add_term(Monomial{e}, 1);
  return p;
}

int SquareFreePolynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m.size()));
  return d;
}

Rat SquareFreePolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SquareFreePolynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  if (!monomial_valid(m, n_)) throw std::invalid_argument("monomial not canonical within [n]");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SquareFreePolynomial& SquareFreePolynomial::operator+=(const SquareFreePolynomial& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("polynomials over different ground sets");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SquareFreePolynomial& SquareFreePolynomial::operator-=(const SquareFreePolynomial& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("polynomials over different ground sets");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SquareFreePolynomial& SquareFreePolynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SquareFreePolynomial operator+(SquareFreePolynomial a, const SquareFreePolynomial& b) {
  a += b;
  return a;
}
SquareFreePolynomial operator-(SquareFreePolynomial a, const SquareFreePolynomial& b) {
  a -= b;
  return a;
}
SquareFreePolynomial operator-(SquareFreePolynomial a) {
  a *= Rat(-1);
  return a;
}
SquareFreePolynomial operator*(const Rat& c, SquareFreePolynomial p) {
  p *= c;
  return p;
}

SquareFreePolynomial mul_mod_hypercube(const SquareFreePolynomial& p,
                                       const SquareFreePolynomial& q) {
  if (p.ground_set() != q.ground_set())
    throw std::invalid_argument("polynomials over different ground sets");
  SquareFreePolynomial out(p.ground_set());
  Monomial merged;
  for (const auto& [ma, ca] : p.terms()) {
    for (const auto& [mb, cb] : q.terms()) {
      merged.clear();
      std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
      out.add_term(merged, ca * cb);
    }
  }
  return out;
}

SquareFreePolynomial operator*(const SquareFreePolynomial& p, const SquareFreePolynomial& q) {
  return mul_mod_hypercube(p, q);
}

namespace {
Monomial map_monomial(const Permutation& sigma, const Monomial& m) {
  Monomial out;
  out.reserve(m.size());
  for (const Edge& e : m) out.push_back(make_edge(sigma(e.i), sigma(e.j)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> support_of(const Monomial& m) {
  std::vector<int> s;
  for (const Edge& e : m) {
    s.push_back(e.i);
    s.push_back(e.j);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Applies the partial map support[k] -> target[k] to m.
Monomial relabel(const Monomial& m, const std::vector<int>& support, const std::vector<int>& target) {
  Monomial out;
  out.reserve(m.size());
  auto image = [&](int v) {
    auto it = std::lower_bound(support.begin(), support.end(), v);
    return target[static_cast<std::size_t>(it - support.begin())];
  };
  for (const Edge& e : m) out.push_back(make_edge(image(e.i), image(e.j)));
  std::sort(out.begin(), out.end());
  return out;
}

void injections_rec(int n, std::size_t k, std::vector<int>& chosen, std::vector<bool>& used,
                    const std::vector<int>& forbidden, const std::function<void(const std::vector<int>&)>& fn) {
  if (chosen.size() == k) {
    fn(chosen);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v - 1]) continue;
    if (std::binary_search(forbidden.begin(), forbidden.end(), v)) continue;
    used[v - 1] = true;
    chosen.push_back(v);
    injections_rec(n, k, chosen, used, forbidden, fn);
    chosen.pop_back();
    used[v - 1] = false;
  }
}
}  // namespace

SquareFreePolynomial apply_permutation(const Permutation& sigma, const SquareFreePolynomial& p) {
  if (sigma.n() != p.ground_set()) throw std::invalid_argument("permutation degree != ground set");
  SquareFreePolynomial out(p.ground_set());
  for (const auto& [m, c] : p.terms()) out.add_term(map_monomial(sigma, m), c);
  return out;
}

Monomial canonical_monomial(const Monomial& m) {
  std::vector<int> support = support_of(m);
  std::vector<int> target(support.size());
  std::iota(target.begin(), target.end(), 1);
  if (support.empty()) return {};
  Monomial best;
  bool first = true;
  std::vector<int> perm = target;
  do {
    Monomial cand = relabel(m, support, perm);
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Monomial> monomial_orbit(const Monomial& m, int n) {
  std::vector<int> support = support_of(m);
  if (!support.empty() && support.back() > n) throw std::invalid_argument("monomial outside [n]");
  if (support.empty()) return {Monomial{}};
  std::set<Monomial> orbit;
  std::vector<int> chosen;
  std::vector<bool> used(n, false);
  std::function<void(const std::vector<int>&)> visit = [&](const std::vector<int>& img) {
    orbit.insert(relabel(m, support, img));
  };
  injections_rec(n, support.size(), chosen, used, {}, visit);
  return {orbit.begin(), orbit.end()};
}

SquareFreePolynomial symmetrize_full(const SquareFreePolynomial& p) {
  const int n = p.ground_set();
  SquareFreePolynomial out(n);
  // Orbits are shared by every monomial with the same canonical form.
  std::map<Monomial, std::vector<Monomial>> cache;
  for (const auto& [m, c] : p.terms()) {
    Monomial key = canonical_monomial(m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, monomial_orbit(m, n)).first;
    const auto& orbit = it->second;
    Rat share = c / Rat(static_cast<unsigned long>(orbit.size()));
    for (const Monomial& om : orbit) out.add_term(om, share);
  }
  return out;
}

SquareFreePolynomial symmetrize_subgroup(const SquareFreePolynomial& p,
                                         std::span<const Permutation> gens,
                                         std::uint64_t group_size) {
  const int n = p.ground_set();
  if (group_size == 0) throw std::invalid_argument("group size must be positive");
  for (const Permutation& g : gens)
    if (g.n() != n) throw std::invalid_argument("generator degree != ground set");
  constexpr std::size_t kMaterializeCap = 10000;
  if (group_size <= kMaterializeCap && !gens.empty()) {
    auto group = materialize_group(gens, kMaterializeCap);
    if (group.size() != group_size)
      throw std::invalid_argument("stated group size does not match the generated group");
  }
  if (gens.empty() || group_size == 1) return p;

  SquareFreePolynomial out(n);
  std::map<Monomial, std::vector<Monomial>> orbit_cache;
  for (const auto& [m, c] : p.terms()) {
    auto it = orbit_cache.find(m);
    if (it == orbit_cache.end()) {
      // BFS closure of m under the generators.
      std::set<Monomial> orbit{m};
      std::vector<Monomial> queue{m};
      while (!queue.empty()) {
        Monomial cur = std::move(queue.back());
        queue.pop_back();
        for (const Permutation& g : gens) {
          Monomial nm = map_monomial(g, cur);
          if (orbit.insert(nm).second) queue.push_back(std::move(nm));
        }
      }
      std::vector<Monomial> orb(orbit.begin(), orbit.end());
      for (const Monomial& om : orb) orbit_cache[om] = orb;
      it = orbit_cache.find(m);
    }
    const auto& orbit = it->second;
    Rat share = c / Rat(static_cast<unsigned long>(orbit.size()));
    for (const Monomial& om : orbit) out.add_term(om, share);
  }
  return out;
}

Rat evaluate(const SquareFreePolynomial& p, const CubePoint& x) {
  if (p.ground_set() != x.n) throw std::invalid_argument("point dimension != ground set");
  Rat acc(0);
  for (const auto& [m, c] : p.terms()) {
    bool all = true;
    for (const Edge& e : m)
      if (!x.has(e)) {
        all = false;
        break;
      }
    if (all) acc += c;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Text grammar.

namespace {
struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
  }
  std::string integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer");
    return std::string(s.substr(start, pos - start));
  }
};

Edge parse_var(Cursor& c) {
  if (!c.consume('x')) c.fail("expected variable");
  if (!c.consume('{')) c.fail("expected '{'");
  int a = std::stoi(c.integer());
  if (!c.consume(',')) c.fail("expected ','");
  int b = std::stoi(c.integer());
  if (!c.consume('}')) c.fail("expected '}'");
  if (a == b) c.fail("degenerate edge");
  return make_edge(a, b);
}

// term := coeff ('*' var)* | var ('*' var)*
void parse_term(Cursor& c, int sign, SquareFreePolynomial& acc) {
  Rat coeff(sign);
  Monomial mono;
  c.skip_ws();
  bool saw_factor = false;
  if (c.peek() != 'x') {
    std::string num = c.integer();
    std::string den = "1";
    if (c.consume('/')) den = c.integer();
    coeff *= rat_from_string(num + "/" + den);
    saw_factor = true;
  }
  while (true) {
    if (!saw_factor || c.consume('*')) {
      mono.push_back(parse_var(c));
      saw_factor = true;
    } else {
      break;
    }
  }
  std::sort(mono.begin(), mono.end());
  if (std::adjacent_find(mono.begin(), mono.end()) != mono.end())
    c.fail("repeated variable in term");
  acc.add_term(mono, coeff);
}
}  // namespace

SquareFreePolynomial parse_polynomial(std::string_view text, int n) {
  Cursor c{text};
  SquareFreePolynomial acc(n);
  c.skip_ws();
  if (c.done()) throw std::invalid_argument("empty polynomial");
  int sign = 1;
  if (c.consume('-')) sign = -1;
  else c.consume('+');
  parse_term(c, sign, acc);
  while (!c.done()) {
    if (c.consume('+')) sign = 1;
    else if (c.consume('-')) sign = -1;
    else c.fail("expected '+' or '-'");
    parse_term(c, sign, acc);
  }
  return acc;
}

namespace {
// Print order: degree descending, then edge-list lexicographic ascending.
bool print_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

std::string term_body(const Monomial& m, const Rat& abs_coeff) {
  std::ostringstream os;
  bool wrote_coeff = false;
  if (m.empty() || abs_coeff != 1) {
    os << rat_to_string(abs_coeff);
    wrote_coeff = true;
  }
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (wrote_coeff || k > 0) os << "*";
    os << "x{" << m[k].i << "," << m[k].j << "}";
  }
  return os.str();
}
}  // namespace

std::string print_polynomial(const SquareFreePolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rat>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return print_less(a.first, b.first); });
  std::ostringstream os;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [m, c] = terms[k];
    Rat a = c < 0 ? Rat(-c) : c;
    if (k == 0) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << term_body(m, a);
  }
  return os.str();
}

}  // namespace flagcube
