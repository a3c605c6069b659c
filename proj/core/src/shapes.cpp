// SPDX-License-Identifier: Apache-2.0
#include "flagcube/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace flagcube {

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::valid() const {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) return false;
    if (k > 0 && parts[k] > parts[k - 1]) return false;
  }
  return true;
}

std::vector<int> Partition::conjugate() const {
  std::vector<int> cols(parts.empty() ? 0 : parts[0], 0);
  for (int p : parts)
    for (int c = 0; c < p; ++c) ++cols[c];
  return cols;
}

Partition Partition::parse(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw std::invalid_argument("partition text needs 'n=a+b+...'");
  int total = std::stoi(std::string(text.substr(0, eq)));
  Partition p;
  std::stringstream ss{std::string(text.substr(eq + 1))};
  std::string piece;
  while (std::getline(ss, piece, '+')) p.parts.push_back(std::stoi(piece));
  if (!p.valid() || p.n() != total) throw std::invalid_argument("inconsistent partition text");
  return p;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << n() << "=";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) os << "+";
    os << parts[k];
  }
  return os.str();
}

namespace {
void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.parts.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.parts.pop_back();
  }
}
}  // namespace

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;  // largest-first recursion yields descending lex order
}

std::vector<Partition> enumerate_lambda(int n, int d) {
  if (d < 0 || n < 2 * d) throw std::invalid_argument("enumerate_lambda requires n >= 2d >= 0");
  int min_first = std::max(n - 2 * d, 1);
  std::vector<Partition> out;
  for (const Partition& p : all_partitions(n))
    if (p.part(0) >= min_first) out.push_back(p);
  return out;
}

Partition Tableau::shape() const {
  Partition p;
  for (const auto& row : rows) p.parts.push_back(static_cast<int>(row.size()));
  return p;
}

int Tableau::n() const {
  int total = 0;
  for (const auto& row : rows) total += static_cast<int>(row.size());
  return total;
}

bool Tableau::valid() const {
  if (!shape().valid()) return false;
  std::vector<bool> seen(n(), false);
  for (const auto& row : rows)
    for (int v : row) {
      if (v < 1 || v > n() || seen[v - 1]) return false;
      seen[v - 1] = true;
    }
  return true;
}

nlohmann::json tableau_to_json(const Tableau& t) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : t.rows) j.push_back(row);
  return j;
}

Tableau tableau_from_json(const nlohmann::json& j) {
  Tableau t;
  for (const auto& row : j) t.rows.push_back(row.get<std::vector<int>>());
  if (!t.valid()) throw std::invalid_argument("tableau JSON is not a bijective filling");
  return t;
}

bool is_standard(const Tableau& t) {
  if (!t.valid()) return false;
  const auto& rows = t.rows;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c + 1 < rows[r].size() && rows[r][c] >= rows[r][c + 1]) return false;
      if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c]) return false;
    }
  return true;
}

Tableau hook_of(const Tableau& t) {
  if (!t.valid()) throw std::invalid_argument("invalid tableau");
  Tableau h;
  h.rows.push_back(t.rows.at(0));
  std::vector<int> tail;
  for (std::size_t r = 1; r < t.rows.size(); ++r)
    tail.insert(tail.end(), t.rows[r].begin(), t.rows[r].end());
  std::sort(tail.begin(), tail.end());
  for (int v : tail) h.rows.push_back({v});
  return h;
}

ThetaLabeling theta_of(const Tableau& t) {
  if (!t.valid()) throw std::invalid_argument("invalid tableau");
  std::vector<bool> in_first(t.n() + 1, false);
  for (int v : t.rows.at(0)) in_first[v] = true;
  ThetaLabeling theta;
  for (int v = 1; v <= t.n(); ++v)
    if (!in_first[v]) theta.images.push_back(v);
  return theta;
}

Tableau hook_theta_tableau(const ThetaLabeling& theta, int n) {
  std::vector<bool> in_tail(n + 1, false);
  for (int v : theta.images) {
    if (v < 1 || v > n || in_tail[v]) throw std::invalid_argument("theta is not injective into [n]");
    in_tail[v] = true;
  }
  Tableau t;
  std::vector<int> first;
  for (int v = 1; v <= n; ++v)
    if (!in_tail[v]) first.push_back(v);
  if (first.empty()) throw std::invalid_argument("hook tableau needs a nonempty first row");
  t.rows.push_back(first);
  std::vector<int> tail = theta.images;
  std::sort(tail.begin(), tail.end());
  for (int v : tail) t.rows.push_back({v});
  return t;
}

RowGroup row_group(const Tableau& t) {
  if (!t.valid()) throw std::invalid_argument("invalid tableau");
  RowGroup rg;
  const int n = t.n();
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k + 1 < row.size(); ++k)
      rg.generators.push_back(Permutation::transposition(n, row[k], row[k + 1]));
    std::uint64_t f = 1;
    for (std::uint64_t m = 2; m <= row.size(); ++m) f *= m;
    rg.size *= f;
  }
  if (rg.generators.empty()) rg.generators.push_back(Permutation::identity(n));
  return rg;
}

Tableau row_reading_tableau(const Partition& shape) {
  if (!shape.valid()) throw std::invalid_argument("invalid partition");
  Tableau t;
  int next = 1;
  for (int p : shape.parts) {
    std::vector<int> row(p);
    std::iota(row.begin(), row.end(), next);
    next += p;
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<Tableau> all_fillings(const Partition& shape) {
  if (!shape.valid()) throw std::invalid_argument("invalid partition");
  const int n = shape.n();
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<Tableau> out;
  do {
    Tableau t;
    std::size_t pos = 0;
    for (int p : shape.parts) {
      t.rows.emplace_back(labels.begin() + pos, labels.begin() + pos + p);
      pos += p;
    }
    out.push_back(std::move(t));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace flagcube
