// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "flagcube/qpoly.hpp"

namespace flagcube {

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int n() const;
  bool valid() const;
  int part(std::size_t idx) const { return idx < parts.size() ? parts[idx] : 0; }
  /// Column lengths of the Young diagram (the conjugate partition).
  std::vector<int> conjugate() const;
  auto operator<=>(const Partition&) const = default;

  /// Text form "6=4+1+1".
  static Partition parse(std::string_view text);
  std::string to_string() const;
};

/// All partitions of n in descending lexicographic order.
std::vector<Partition> all_partitions(int n);

/// Partitions of n lexicographically >= the hook (n-2d, 1^{2d}); equivalently
/// those with first part >= n-2d. Descending lex. Throws when n < 2d.
std::vector<Partition> enumerate_lambda(int n, int d);

// Bijective filling of a Young diagram with 1..n.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int n() const;
  bool valid() const;  // shape weakly decreasing, labels a bijection with [n]
  auto operator<=>(const Tableau&) const = default;
};

nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

/// Rows increase left to right and columns increase downward.
bool is_standard(const Tableau& t);

/// Hook tableau: first row kept, remaining labels sorted down the tail.
Tableau hook_of(const Tableau& t);

// Injective placement of [t] into [n].
struct ThetaLabeling {
  std::vector<int> images;
  int t() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }
  auto operator<=>(const ThetaLabeling&) const = default;
};

/// Theta(i) = i-th smallest label not in the first row of t.
ThetaLabeling theta_of(const Tableau& t);

/// The tableau of shape (n-t, 1^t) with Theta's image sorted down the tail and
/// the remaining labels sorted along the first row.
Tableau hook_theta_tableau(const ThetaLabeling& theta, int n);

struct RowGroup {
  std::vector<Permutation> generators;  // adjacent transpositions within rows
  std::uint64_t size = 1;               // product of row factorials
};

RowGroup row_group(const Tableau& t);

/// Fill the diagram row by row with 1..n (always standard).
Tableau row_reading_tableau(const Partition& shape);

/// Every bijective filling of the shape. Test-oracle scale only.
std::vector<Tableau> all_fillings(const Partition& shape);

}  // namespace flagcube
