// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "flagcube/config.hpp"
#include "flagcube/flagpoly.hpp"
#include "flagcube/flags.hpp"
#include "flagcube/ideal.hpp"
#include "flagcube/linalg.hpp"
#include "flagcube/orbit_basis.hpp"
#include "flagcube/qpoly.hpp"
#include "flagcube/solver.hpp"

namespace flagcube {

enum class SosVariant { d_polys, g_polys };

std::string variant_name(SosVariant v);          // "d" / "g"
SosVariant variant_from_name(const std::string&);

// One SDP block: the flag list and the matrix of symmetrized pair products.
// d variant: one block per intersection type (S_t-equivalent types merged).
// g variant: one block per labeled-vertex count, flags across all types of
// that size (the two shapes are exchanged by the Mobius transform).
struct SosBlock {
  IntersectionType type;      // exact type (d) or the empty base type (g)
  std::vector<Flag> flags;
  std::vector<SquareFreePolynomial> polys;                 // materialized flag polynomials
  std::vector<std::vector<SquareFreePolynomial>> Z;        // symmetric, invariant entries
};

struct LinearConstraint {
  std::vector<RatMatrix> A;  // one symmetric coefficient matrix per block
  Rat rhs;
  std::string label;
};

struct FlagSosProblem {
  int n = 0;
  int d = 0;
  SosVariant variant = SosVariant::d_polys;
  IdealSpec ideal;
  SquareFreePolynomial target;
  std::vector<SosBlock> blocks;
  std::vector<LinearConstraint> constraints;
  Variety variety;  // populated for augmented ideals
};

/// Builds blocks, Z matrices, and the exact linear identity constraints.
/// Throws on a non-invariant target or 2d > n.
FlagSosProblem assemble(const SquareFreePolynomial& target, int d, const IdealSpec& ideal,
                        SosVariant variant, const Config& cfg = default_config());

enum class SolveStatus { certified, numerically_feasible_only, infeasible_at_degree, solver_limit };

std::string status_name(SolveStatus);

struct SolveReport {
  SolveStatus status = SolveStatus::solver_limit;
  double primal_residual = 0.0;
  double mu = 0.0;
  int iterations = 0;
  double dual_objective = 0.0;
  std::string solver_note;
  std::string rationalization_log;
};

/// Numeric phase only; status is at best numerically_feasible_only.
std::vector<Eigen::MatrixXd> solve_internal(const FlagSosProblem& problem, double tol,
                                            SolveReport& report,
                                            const Config& cfg = default_config());

struct CertBlock {
  IntersectionType type;
  std::vector<Flag> flags;
  RatMatrix R;
  LdlWitness ldl;
};

struct FlagSosCertificate {
  int n = 0;
  int d = 0;
  SosVariant variant = SosVariant::d_polys;
  IdealSpec ideal;
  std::vector<CertBlock> blocks;
};

nlohmann::json certificate_to_json(const FlagSosCertificate&);
FlagSosCertificate certificate_from_json(const nlohmann::json&);
void save_certificate(const FlagSosCertificate&, const std::string& path);
FlagSosCertificate load_certificate(const std::string& path);

/// Continued-fraction rounding followed by an exact diagonal correction that
/// restores the linear identity, then exact psd witnesses. Returns nullopt
/// (never a wrong certificate) when the identity cannot be restored or a
/// block loses positive semidefiniteness.
std::optional<FlagSosCertificate> rationalize(const std::vector<Eigen::MatrixXd>& numeric,
                                              const FlagSosProblem& problem,
                                              long denominator_bound);

enum class VerifyFailure { none, structure, psd, identity, size_bound };

struct VerifyOutcome {
  bool ok = false;
  VerifyFailure failure = VerifyFailure::none;
  std::string diagnostics;
};

/// Exact re-verification from the certificate alone: psd witnesses, the
/// reconstructed identity modulo the ideal, and the flag size bound f <= 2d.
VerifyOutcome verify_certificate(const FlagSosCertificate& cert,
                                 const SquareFreePolynomial& target, const IdealSpec& ideal,
                                 const Config& cfg = default_config());

struct CertifyResult {
  SolveReport report;
  std::optional<FlagSosCertificate> certificate;
};

/// assemble -> solve -> rationalize -> verify, with a denominator ladder.
CertifyResult certify(const SquareFreePolynomial& target, int d, const IdealSpec& ideal,
                      SosVariant variant, const Config& cfg = default_config());

// --- SDPA sparse format -----------------------------------------------------

void export_sdpa(const FlagSosProblem& problem, std::ostream& os);
void export_sdpa_file(const FlagSosProblem& problem, const std::string& path);

// Parsed .dat-s content, for byte-exact round-trip checks and external runs.
struct SdpaFileData {
  int m = 0;
  std::vector<int> block_sizes;
  std::vector<double> b;
  // (matno, block, i, j, value) with matno 0 = objective, 1..m = constraints.
  struct Entry {
    int matno, block, i, j;
    double value;
  };
  std::vector<Entry> entries;
  bool operator==(const SdpaFileData&) const = default;
};

SdpaFileData parse_sdpa_file(const std::string& path);

/// Reads the yMat block (the psd matrix satisfying the equality constraints)
/// from an SDPA result file.
std::vector<Eigen::MatrixXd> import_sdpa_solution(const std::string& path,
                                                  const std::vector<int>& block_sizes);

/// Writes a result file in the same shape import_sdpa_solution reads.
void write_sdpa_solution(const std::vector<Eigen::MatrixXd>& blocks, const std::string& path);

}  // namespace flagcube
