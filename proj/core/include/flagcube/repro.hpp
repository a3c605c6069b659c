// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "flagcube/sos.hpp"

namespace flagcube {

struct ReproClaim {
  std::string description;
  bool pass = false;
  std::string detail;
};

struct ReproResult {
  std::string name;
  std::vector<ReproClaim> claims;
  double wall_ms = 0.0;

  bool pass() const;
};

nlohmann::json repro_to_json(const ReproResult& r);
std::string repro_to_text(const ReproResult& r);

/// Triangle-Ramsey reproduction at n = 6: both sum-of-squares expressions,
/// their -1 equivalence on the (independently enumerated, empty) variety, the
/// K5 pentagon witness, and the claw/color-swap/square-reduction identities,
/// with the nonvacuous companions checked on the n = 5 variety.
ReproResult ramsey_r33(const Config& cfg = default_config());

/// Four-cycle-free edge bound at n in {5,6,7}: exact residue of the printed
/// g-expression on the variety, the printed d-expression checked and any
/// mismatch flagged, the implied bound against the brute-force maximum.
ReproResult c4_bound(int n, const Config& cfg = default_config());

/// The shifted-count quadratic family: exhaustive 0..1 bounds, the real
/// perfect-square identity, and the flag SDP feasibility status at d_probe
/// (recorded, not asserted).
ReproResult grigoriev_family(int n, int d_probe, const Config& cfg = default_config());

/// Direct SDP over the full square-free monomial basis of degree <= d, no
/// symmetry reduction. Oracle for feasibility-status agreement.
SolveStatus brute_force_symmetric_sos(const SquareFreePolynomial& target, int d,
                                      const IdealSpec& ideal,
                                      const Config& cfg = default_config());

/// The hand certificate for "-1 is a flag sos modulo the triangle ideal":
/// rational data only, independent of the solver.
FlagSosCertificate build_ramsey_certificate();

/// The constant -1 target it certifies.
SquareFreePolynomial ramsey_certificate_target();

}  // namespace flagcube
