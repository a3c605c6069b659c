// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace flagcube {

// Runtime caps and tolerances. The exact pipeline never consults the solver
// tolerance; it only gates the numeric phase.
struct Config {
  int variety_max_bits = 21;          // enumerate varieties only while C(n,2) <= this
  int solver_max_size = 200;          // total SDP matrix dimension
  int repn_max_n = 7;
  int repn_max_d = 2;
  std::size_t group_materialize_cap = 10000;
  double solver_tol = 1e-8;
  long denominator_bound = 1000000;
  int threads = 1;

  /// Defaults with FLAGCUBE_THREADS applied when set.
  static Config from_env();
};

const Config& default_config();

}  // namespace flagcube
