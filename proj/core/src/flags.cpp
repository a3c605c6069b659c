// SPDX-License-Identifier: Apache-2.0
#include "flagcube/flags.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace flagcube {

namespace {
std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

/// All pairs {a,b} on [f] with at least one endpoint unlabeled (a > t or b > t).
std::vector<Edge> free_pairs(int t, int f) {
  std::vector<Edge> out;
  for (int a = 1; a < f; ++a)
    for (int b = a + 1; b <= f; ++b)
      if (b > t) out.push_back(Edge{a, b});
  return out;
}
}  // namespace

IntersectionType parse_type_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("type spec needs 't:edges'");
  IntersectionType T;
  T.t = std::stoi(std::string(spec.substr(0, colon)));
  if (T.t < 0) throw std::invalid_argument("negative type size");
  std::stringstream ss{std::string(spec.substr(colon + 1))};
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty()) continue;
    auto dash = piece.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge needs 'i-j'");
    Edge e = make_edge(std::stoi(piece.substr(0, dash)), std::stoi(piece.substr(dash + 1)));
    if (e.j > T.t) throw std::invalid_argument("type edge outside [t]");
    T.edges.push_back(e);
  }
  T.edges = sorted_edges(std::move(T.edges));
  return T;
}

std::string type_spec_string(const IntersectionType& T) {
  std::ostringstream os;
  os << T.t << ":";
  for (std::size_t k = 0; k < T.edges.size(); ++k) {
    if (k) os << ",";
    os << T.edges[k].i << "-" << T.edges[k].j;
  }
  return os.str();
}

std::vector<IntersectionType> all_intersection_types(int t) {
  std::vector<Edge> pairs;
  for (int a = 1; a < t; ++a)
    for (int b = a + 1; b <= t; ++b) pairs.push_back(Edge{a, b});
  std::vector<IntersectionType> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    IntersectionType T;
    T.t = t;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1u) T.edges.push_back(pairs[k]);
    out.push_back(std::move(T));
  }
  std::sort(out.begin(), out.end(), [](const IntersectionType& a, const IntersectionType& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

IntersectionType induced_type(int t, const std::vector<Edge>& edges) {
  IntersectionType T;
  T.t = t;
  for (const Edge& e : edges)
    if (e.j <= t) T.edges.push_back(e);
  T.edges = sorted_edges(std::move(T.edges));
  return T;
}

Flag make_flag(IntersectionType type, int f, std::vector<Edge> edges) {
  if (f < type.t) throw std::invalid_argument("flag smaller than its type");
  Flag F{std::move(type), f, sorted_edges(std::move(edges))};
  for (const Edge& e : F.edges)
    if (e.j > f) throw std::invalid_argument("flag edge outside [f]");
  if (induced_type(F.type.t, F.edges) != F.type)
    throw std::invalid_argument("labeled part does not induce the stated type");
  return F;
}

Flag canonical_form(const Flag& F) {
  const int t = F.type.t;
  const int u = F.f - t;
  if (u <= 1) return F;
  std::vector<int> perm(u);
  std::iota(perm.begin(), perm.end(), t + 1);
  std::vector<Edge> best = F.edges;
  bool first = true;
  do {
    std::vector<Edge> mapped;
    mapped.reserve(F.edges.size());
    auto image = [&](int v) { return v <= t ? v : perm[v - t - 1]; };
    for (const Edge& e : F.edges) mapped.push_back(make_edge(image(e.i), image(e.j)));
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Flag{F.type, F.f, std::move(best)};
}

std::vector<Flag> enumerate_flags(const IntersectionType& T, int f) {
  if (f < T.t) throw std::invalid_argument("flag size below type size");
  const std::vector<Edge> frees = free_pairs(T.t, f);
  if (frees.size() > 30) throw std::length_error("flag enumeration too large");
  std::set<Flag> canon;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << frees.size()); ++mask) {
    std::vector<Edge> edges = T.edges;
    for (std::size_t k = 0; k < frees.size(); ++k)
      if ((mask >> k) & 1u) edges.push_back(frees[k]);
    canon.insert(canonical_form(make_flag(T, f, std::move(edges))));
  }
  std::vector<Flag> out(canon.begin(), canon.end());
  std::sort(out.begin(), out.end(), [](const Flag& a, const Flag& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

FlagPoset flag_poset(const IntersectionType& T, int f) {
  if (f < T.t) throw std::invalid_argument("flag size below type size");
  std::vector<Edge> frees;  // every pair on [f] not already in E(T)
  for (int a = 1; a < f; ++a)
    for (int b = a + 1; b <= f; ++b) {
      Edge e{a, b};
      if (!std::binary_search(T.edges.begin(), T.edges.end(), e)) frees.push_back(e);
    }
  if (frees.size() > 24) throw std::length_error("flag poset too large");
  FlagPoset P{T, f, {}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << frees.size()); ++mask) {
    std::vector<Edge> edges = T.edges;
    for (std::size_t k = 0; k < frees.size(); ++k)
      if ((mask >> k) & 1u) edges.push_back(frees[k]);
    edges = sorted_edges(std::move(edges));
    P.elements.push_back(Flag{induced_type(T.t, edges), f, std::move(edges)});
  }
  std::sort(P.elements.begin(), P.elements.end(), [](const Flag& a, const Flag& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return P;
}

std::vector<std::pair<Flag, int>> mobius_coefficients(const Flag& F, const FlagPoset& P) {
  bool member = false;
  for (const Flag& el : P.elements)
    if (el.edges == F.edges && el.f == F.f) {
      member = true;
      break;
    }
  if (!member) throw std::invalid_argument("flag is not an element of the poset");
  std::vector<std::pair<Flag, int>> out;
  for (const Flag& el : P.elements) {
    if (!std::includes(el.edges.begin(), el.edges.end(), F.edges.begin(), F.edges.end())) continue;
    int diff = static_cast<int>(el.edges.size() - F.edges.size());
    out.emplace_back(el, diff % 2 == 0 ? 1 : -1);
  }
  return out;
}

nlohmann::json flag_to_json(const Flag& F) {
  nlohmann::json j;
  j["t"] = F.type.t;
  j["f"] = F.f;
  auto edge_list = [](const std::vector<Edge>& es) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Edge& e : es) arr.push_back({e.i, e.j});
    return arr;
  };
  j["type_edges"] = edge_list(F.type.edges);
  j["edges"] = edge_list(F.edges);
  return j;
}

Flag flag_from_json(const nlohmann::json& j) {
  IntersectionType T;
  T.t = j.at("t").get<int>();
  for (const auto& e : j.at("type_edges")) T.edges.push_back(make_edge(e.at(0), e.at(1)));
  T.edges = sorted_edges(std::move(T.edges));
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back(make_edge(e.at(0), e.at(1)));
  return make_flag(std::move(T), j.at("f").get<int>(), std::move(edges));
}

}  // namespace flagcube
