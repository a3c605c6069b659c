// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "flagcube/qpoly.hpp"

namespace flagcube {

// Fully labeled simple graph on [t]; vertex i carries label i.
struct IntersectionType {
  int t = 0;
  std::vector<Edge> edges;  // sorted, within [t]
  auto operator<=>(const IntersectionType&) const = default;
};

/// Mini-grammar "t:i-j,i-j,..." (edge list may be empty, e.g. "2:").
IntersectionType parse_type_spec(std::string_view spec);
std::string type_spec_string(const IntersectionType& T);

/// All 2^C(t,2) intersection types on [t], ordered by (|E|, edge-list lex).
std::vector<IntersectionType> all_intersection_types(int t);

// Partially labeled graph: vertices 1..type.t are the labeled ones, and they
// induce exactly type.edges.
struct Flag {
  IntersectionType type;
  int f = 0;
  std::vector<Edge> edges;  // sorted, within [f]
  auto operator<=>(const Flag&) const = default;
};

/// Validates the induced-subgraph condition and edge ranges.
Flag make_flag(IntersectionType type, int f, std::vector<Edge> edges);

/// The induced type of an edge set on [f] restricted to [t].
IntersectionType induced_type(int t, const std::vector<Edge>& edges);

/// Minimal representative under permutations of the unlabeled vertices
/// (labeled vertices fixed pointwise). Idempotent; constant on iso classes.
Flag canonical_form(const Flag& F);

/// All T-flags of size f up to isomorphism, ordered by (|E|, canonical edge lex).
std::vector<Flag> enumerate_flags(const IntersectionType& T, int f);

// All edge sets on [f] containing E(T); isomorphic duplicates retained.
struct FlagPoset {
  IntersectionType type;
  int f = 0;
  std::vector<Flag> elements;  // graded by |E|, lex within a grade
};

FlagPoset flag_poset(const IntersectionType& T, int f);

/// For every F' >= F in the poset, the coefficient (-1)^{|E(F')|-|E(F)|}.
/// Throws when F is not an element of the poset.
std::vector<std::pair<Flag, int>> mobius_coefficients(const Flag& F, const FlagPoset& P);

nlohmann::json flag_to_json(const Flag& F);
Flag flag_from_json(const nlohmann::json& j);

}  // namespace flagcube
