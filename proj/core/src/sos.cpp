// SPDX-License-Identifier: Apache-2.0
#include "flagcube/sos.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace flagcube {

std::string variant_name(SosVariant v) { return v == SosVariant::d_polys ? "d" : "g"; }

SosVariant variant_from_name(const std::string& s) {
  if (s == "d") return SosVariant::d_polys;
  if (s == "g") return SosVariant::g_polys;
  throw std::invalid_argument("variant must be 'd' or 'g'");
}

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::certified: return "certified";
    case SolveStatus::numerically_feasible_only: return "numerically_feasible_only";
    case SolveStatus::infeasible_at_degree: return "infeasible_at_degree";
    case SolveStatus::solver_limit: return "solver_limit";
  }
  return "?";
}

namespace {
/// Relabels the labeled part of F by pi (an S_t permutation) and recanonicalizes.
Flag relabel_type(const Flag& F, const Permutation& pi) {
  IntersectionType T2;
  T2.t = F.type.t;
  for (const Edge& e : F.type.edges) T2.edges.push_back(make_edge(pi(e.i), pi(e.j)));
  std::sort(T2.edges.begin(), T2.edges.end());
  std::vector<Edge> edges;
  for (const Edge& e : F.edges) {
    int a = e.i <= F.type.t ? pi(e.i) : e.i;
    int b = e.j <= F.type.t ? pi(e.j) : e.j;
    edges.push_back(make_edge(a, b));
  }
  return canonical_form(make_flag(std::move(T2), F.f, std::move(edges)));
}

SquareFreePolynomial block_poly(SosVariant variant, const Flag& F, int n) {
  const ThetaLabeling theta = canonical_theta(F.type.t);
  return variant == SosVariant::d_polys ? d_poly(F, theta, n).poly : g_poly(F, theta, n).poly;
}

void build_Z(SosBlock& blk, int n) {
  const std::size_t k = blk.flags.size();
  blk.Z.assign(k, std::vector<SquareFreePolynomial>(k, SquareFreePolynomial(n)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      SquareFreePolynomial z = symmetrize_full(mul_mod_hypercube(blk.polys[a], blk.polys[b]));
      blk.Z[a][b] = z;
      if (a != b) blk.Z[b][a] = std::move(z);
    }
}
}  // namespace

FlagSosProblem assemble(const SquareFreePolynomial& target, int d, const IdealSpec& ideal,
                        SosVariant variant, const Config& cfg) {
  const int n = target.ground_set();
  if (ideal.n != n) throw std::invalid_argument("ideal ground set != target ground set");
  if (d < 0 || 2 * d > n) throw std::invalid_argument("need 0 <= 2d <= n");
  if (symmetrize_full(target) != target) throw std::invalid_argument("target is not S_n-invariant");

  FlagSosProblem prob;
  prob.n = n;
  prob.d = d;
  prob.variant = variant;
  prob.ideal = ideal;
  prob.target = target;

  if (variant == SosVariant::d_polys) {
    for (int t = 0; t <= 2 * d; ++t) {
      std::vector<IntersectionType> types = all_intersection_types(t);
      // Merge S_t-equivalent types: keep the first member of each orbit.
      std::set<IntersectionType> dropped;
      std::vector<Permutation> st = all_permutations(t);
      for (const IntersectionType& T : types) {
        if (dropped.count(T)) continue;
        SosBlock blk;
        blk.type = T;
        blk.flags = enumerate_flags(T, 2 * d);
        for (const Flag& F : blk.flags) blk.polys.push_back(block_poly(variant, F, n));
        build_Z(blk, n);
        // Mark the rest of the S_t-orbit as merged into this block, with an
        // audit that the flag lists correspond and a sample entry matches.
        for (const Permutation& pi : st) {
          IntersectionType T2;
          T2.t = t;
          for (const Edge& e : T.edges) T2.edges.push_back(make_edge(pi(e.i), pi(e.j)));
          std::sort(T2.edges.begin(), T2.edges.end());
          if (T2 == T || dropped.count(T2)) continue;
          std::vector<Flag> mapped;
          for (const Flag& F : blk.flags) mapped.push_back(relabel_type(F, pi));
          std::vector<Flag> direct = enumerate_flags(T2, 2 * d);
          std::vector<Flag> sorted_mapped = mapped;
          std::sort(sorted_mapped.begin(), sorted_mapped.end());
          std::sort(direct.begin(), direct.end());
          if (sorted_mapped != direct)
            throw std::logic_error("type-merge audit failed: flag lists do not correspond");
          if (!blk.flags.empty()) {
            SquareFreePolynomial z2 = symmetrize_full(
                mul_mod_hypercube(block_poly(variant, mapped[0], n), block_poly(variant, mapped[0], n)));
            if (z2 != blk.Z[0][0])
              throw std::logic_error("type-merge audit failed: sample entry differs");
          }
          dropped.insert(T2);
        }
        prob.blocks.push_back(std::move(blk));
      }
      // Cross-type orthogonality spot check on the first flags of every pair
      // of kept types of this size.
      for (std::size_t i = 0; i < prob.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < prob.blocks.size(); ++j) {
          const SosBlock& A = prob.blocks[i];
          const SosBlock& B = prob.blocks[j];
          if (A.type.t != t || B.type.t != t || A.type == B.type) continue;
          if (A.flags.empty() || B.flags.empty()) continue;
          SquareFreePolynomial cross = symmetrize_full(mul_mod_hypercube(A.polys[0], B.polys[0]));
          if (!cross.is_zero())
            throw std::logic_error("cross-type product does not vanish on the hypercube");
        }
    }
  } else {
    // g variant: one block per labeled-vertex count t, flags over all types.
    for (int t = 0; t <= 2 * d; ++t) {
      SosBlock blk;
      blk.type = IntersectionType{t, {}};
      for (const IntersectionType& T : all_intersection_types(t))
        for (const Flag& F : enumerate_flags(T, 2 * d)) blk.flags.push_back(F);
      for (const Flag& F : blk.flags) blk.polys.push_back(block_poly(variant, F, n));
      build_Z(blk, n);
      prob.blocks.push_back(std::move(blk));
    }
  }

  // Linear identity constraints.
  if (ideal.kind == IdealKind::hypercube) {
    OrbitBasis basis(n);
    basis.absorb(target);
    for (const auto& blk : prob.blocks)
      for (const auto& row : blk.Z)
        for (const auto& z : row) basis.absorb(z);
    auto target_coords = basis.coordinates(target);
    if (!target_coords) throw std::logic_error("target lost invariance during assembly");
    std::vector<std::optional<RatVec>> zc;  // per block, flattened row-major
    for (std::size_t o = 0; o < basis.size(); ++o) {
      LinearConstraint con;
      con.rhs = (*target_coords)[o];
      con.label = print_polynomial([&] {
        SquareFreePolynomial rep(n);
        rep.add_term(basis.reps()[o], 1);
        return rep;
      }());
      for (const auto& blk : prob.blocks) {
        const int k = static_cast<int>(blk.flags.size());
        RatMatrix A(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) {
            auto coords = basis.coordinates(blk.Z[a][b]);
            if (!coords) throw std::logic_error("Z entry is not invariant");
            A.at(a, b) = (*coords)[o];
          }
        con.A.push_back(std::move(A));
      }
      prob.constraints.push_back(std::move(con));
    }
  } else {
    prob.variety = enumerate_variety(ideal, cfg);
    // One row per variety point, deduplicated exactly.
    std::map<std::vector<std::string>, std::size_t> seen_rows;
    for (std::uint32_t pt : prob.variety.points) {
      CubePoint x = CubePoint::from_mask(n, pt);
      LinearConstraint con;
      con.rhs = evaluate(target, x);
      con.label = "point:" + std::to_string(pt);
      std::vector<std::string> sig{rat_to_string(con.rhs)};
      for (const auto& blk : prob.blocks) {
        const int k = static_cast<int>(blk.flags.size());
        RatMatrix A(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) {
            A.at(a, b) = evaluate(blk.Z[a][b], x);
            sig.push_back(rat_to_string(A.at(a, b)));
          }
        con.A.push_back(std::move(A));
      }
      if (seen_rows.emplace(std::move(sig), prob.constraints.size()).second)
        prob.constraints.push_back(std::move(con));
    }
  }
  int total = 0;
  for (const auto& blk : prob.blocks) total += static_cast<int>(blk.flags.size());
  if (total > cfg.solver_max_size) throw std::length_error("SDP size cap exceeded");
  return prob;
}

namespace {
SdpData to_numeric(const FlagSosProblem& prob) {
  SdpData sdp;
  for (const auto& blk : prob.blocks) sdp.block_sizes.push_back(static_cast<int>(blk.flags.size()));
  for (const auto& con : prob.constraints) {
    std::vector<SdpData::Entry> entries;
    for (std::size_t b = 0; b < con.A.size(); ++b) {
      const RatMatrix& A = con.A[b];
      for (int r = 0; r < A.rows(); ++r)
        for (int c = r; c < A.cols(); ++c)
          if (A.at(r, c) != 0)
            entries.push_back({static_cast<int>(b), r, c, rat_to_double(A.at(r, c))});
    }
    sdp.constraints.push_back(std::move(entries));
    sdp.b.push_back(rat_to_double(con.rhs));
  }
  return sdp;
}
}  // namespace

std::vector<Eigen::MatrixXd> solve_internal(const FlagSosProblem& problem, double tol,
                                            SolveReport& report, const Config& cfg) {
  int total = 0;
  for (const auto& blk : problem.blocks) total += static_cast<int>(blk.flags.size());
  if (total > cfg.solver_max_size) throw std::length_error("SDP size cap exceeded");
  NumericOutcome res = solve_sdp_feasibility(to_numeric(problem), tol);
  report.primal_residual = res.primal_residual;
  report.mu = res.mu;
  report.iterations = res.iterations;
  report.dual_objective = res.dual_objective;
  report.solver_note = res.note;
  switch (res.status) {
    case NumericStatus::feasible: report.status = SolveStatus::numerically_feasible_only; break;
    case NumericStatus::infeasible: report.status = SolveStatus::infeasible_at_degree; break;
    case NumericStatus::limit: report.status = SolveStatus::solver_limit; break;
  }
  return res.X;
}

std::optional<FlagSosCertificate> rationalize(const std::vector<Eigen::MatrixXd>& numeric,
                                              const FlagSosProblem& problem,
                                              long denominator_bound) {
  if (numeric.size() != problem.blocks.size()) return std::nullopt;
  FlagSosCertificate cert;
  cert.n = problem.n;
  cert.d = problem.d;
  cert.variant = problem.variant;
  cert.ideal = problem.ideal;

  std::vector<RatMatrix> R;
  for (std::size_t b = 0; b < numeric.size(); ++b) {
    const int k = static_cast<int>(problem.blocks[b].flags.size());
    if (numeric[b].rows() != k || numeric[b].cols() != k) return std::nullopt;
    RatMatrix M(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = r; c < k; ++c) {
        auto q = rat_from_double((numeric[b](r, c) + numeric[b](c, r)) / 2.0, denominator_bound);
        if (!q) return std::nullopt;
        M.at(r, c) = *q;
        M.at(c, r) = *q;
      }
    R.push_back(std::move(M));
  }

  // Exact residual of the linear identity.
  const std::size_t m = problem.constraints.size();
  RatVec residual(m, Rat(0));
  bool any = false;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& con = problem.constraints[k];
    Rat acc(0);
    for (std::size_t b = 0; b < R.size(); ++b)
      for (int r = 0; r < R[b].rows(); ++r)
        for (int c = 0; c < R[b].cols(); ++c)
          if (con.A[b].at(r, c) != 0 && R[b].at(r, c) != 0) acc += con.A[b].at(r, c) * R[b].at(r, c);
    residual[k] = con.rhs - acc;
    if (residual[k] != 0) any = true;
  }
  if (any) {
    // Correct diagonals only: solve sum_{b,i} A_k[b](i,i) delta_{b,i} = residual_k.
    std::vector<std::pair<int, int>> diag_vars;
    for (std::size_t b = 0; b < R.size(); ++b)
      for (int i = 0; i < R[b].rows(); ++i) diag_vars.emplace_back(static_cast<int>(b), i);
    RatMatrix C(static_cast<int>(m), static_cast<int>(diag_vars.size()));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t v = 0; v < diag_vars.size(); ++v)
        C.at(static_cast<int>(k), static_cast<int>(v)) =
            problem.constraints[k].A[diag_vars[v].first].at(diag_vars[v].second, diag_vars[v].second);
    auto delta = solve(C, residual);
    if (!delta) return std::nullopt;
    for (std::size_t v = 0; v < diag_vars.size(); ++v)
      R[diag_vars[v].first].at(diag_vars[v].second, diag_vars[v].second) += (*delta)[v];
    // Identity must now hold exactly.
    for (std::size_t k = 0; k < m; ++k) {
      const auto& con = problem.constraints[k];
      Rat acc(0);
      for (std::size_t b = 0; b < R.size(); ++b)
        for (int r = 0; r < R[b].rows(); ++r)
          for (int c = 0; c < R[b].cols(); ++c)
            if (con.A[b].at(r, c) != 0 && R[b].at(r, c) != 0)
              acc += con.A[b].at(r, c) * R[b].at(r, c);
      if (acc != con.rhs) return std::nullopt;
    }
  }

  for (std::size_t b = 0; b < R.size(); ++b) {
    PsdOutcome psd = psd_check_exact(R[b]);
    if (!psd.psd) return std::nullopt;
    CertBlock cb;
    cb.type = problem.blocks[b].type;
    cb.flags = problem.blocks[b].flags;
    cb.R = R[b];
    cb.ldl = psd.witness;
    cert.blocks.push_back(std::move(cb));
  }
  return cert;
}

VerifyOutcome verify_certificate(const FlagSosCertificate& cert,
                                 const SquareFreePolynomial& target, const IdealSpec& ideal,
                                 const Config& cfg) {
  VerifyOutcome out;
  const int n = cert.n;
  if (target.ground_set() != n || ideal.n != n) {
    out.failure = VerifyFailure::structure;
    out.diagnostics = "ground set mismatch";
    return out;
  }
  // Flag size bound f <= 2d.
  for (const auto& blk : cert.blocks)
    for (const Flag& F : blk.flags)
      if (F.f > 2 * cert.d) {
        out.failure = VerifyFailure::size_bound;
        out.diagnostics = "flag of size " + std::to_string(F.f) + " exceeds 2d = " +
                          std::to_string(2 * cert.d);
        return out;
      }
  // Exact psd witnesses.
  for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
    const auto& blk = cert.blocks[b];
    if (blk.R.rows() != static_cast<int>(blk.flags.size()) || !blk.R.is_symmetric()) {
      out.failure = VerifyFailure::structure;
      out.diagnostics = "block " + std::to_string(b) + " has a malformed matrix";
      return out;
    }
    if (!ldl_witness_valid(blk.R, blk.ldl)) {
      out.failure = VerifyFailure::psd;
      out.diagnostics = "psd witness failed for block " + std::to_string(b);
      return out;
    }
    PsdOutcome recheck = psd_check_exact(blk.R);
    if (!recheck.psd) {
      out.failure = VerifyFailure::psd;
      out.diagnostics = "block " + std::to_string(b) + " is not psd";
      return out;
    }
  }
  // Identity: sum_T sym(sum_ij R_ij p_i p_j) - target == 0 mod the ideal.
  SquareFreePolynomial expr(n);
  for (const auto& blk : cert.blocks) {
    std::vector<SquareFreePolynomial> polys;
    for (const Flag& F : blk.flags) {
      const ThetaLabeling theta = canonical_theta(F.type.t);
      polys.push_back(cert.variant == SosVariant::d_polys ? d_poly(F, theta, n).poly
                                                          : g_poly(F, theta, n).poly);
    }
    SquareFreePolynomial quad(n);
    for (std::size_t a = 0; a < polys.size(); ++a)
      for (std::size_t bb = 0; bb < polys.size(); ++bb) {
        const Rat& w = blk.R.at(static_cast<int>(a), static_cast<int>(bb));
        if (w == 0) continue;
        quad += w * mul_mod_hypercube(polys[a], polys[bb]);
      }
    expr += symmetrize_full(quad);
  }
  SquareFreePolynomial residue = expr - target;
  if (!is_zero_mod_ideal(residue, ideal, nullptr, cfg)) {
    out.failure = VerifyFailure::identity;
    out.diagnostics = "identity residue nonzero: " + print_polynomial(residue);
    return out;
  }
  out.ok = true;
  out.failure = VerifyFailure::none;
  out.diagnostics = "ok";
  return out;
}

CertifyResult certify(const SquareFreePolynomial& target, int d, const IdealSpec& ideal,
                      SosVariant variant, const Config& cfg) {
  CertifyResult result;
  FlagSosProblem prob = assemble(target, d, ideal, variant, cfg);
  std::vector<Eigen::MatrixXd> numeric = solve_internal(prob, cfg.solver_tol, result.report, cfg);
  if (result.report.status != SolveStatus::numerically_feasible_only) return result;
  for (long bound = cfg.denominator_bound; bound <= cfg.denominator_bound * 1000000L;
       bound *= 1000) {
    auto cert = rationalize(numeric, prob, bound);
    if (!cert) {
      result.report.rationalization_log +=
          "denominator bound " + std::to_string(bound) + ": failed; ";
      continue;
    }
    VerifyOutcome vo = verify_certificate(*cert, target, ideal, cfg);
    if (vo.ok) {
      result.report.status = SolveStatus::certified;
      result.report.rationalization_log +=
          "denominator bound " + std::to_string(bound) + ": certificate verified";
      result.certificate = std::move(cert);
      return result;
    }
    result.report.rationalization_log +=
        "denominator bound " + std::to_string(bound) + ": " + vo.diagnostics + "; ";
  }
  return result;
}

// --- JSON -------------------------------------------------------------------

namespace {
nlohmann::json rat_pair(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  nlohmann::json pair = nlohmann::json::array();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    pair.push_back(c.get_num().get_si());
    pair.push_back(c.get_den().get_si());
  } else {
    pair.push_back(c.get_num().get_str());
    pair.push_back(c.get_den().get_str());
  }
  return pair;
}

Rat rat_from_pair(const nlohmann::json& j) {
  auto piece = [&](const nlohmann::json& v) {
    return v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long long>());
  };
  Rat q(piece(j.at(0)), piece(j.at(1)));
  q.canonicalize();
  return q;
}

nlohmann::json matrix_json(const RatMatrix& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < M.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(rat_pair(M.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const nlohmann::json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  RatMatrix M(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) M.at(r, c) = rat_from_pair(j.at(r).at(c));
  return M;
}
}  // namespace

nlohmann::json certificate_to_json(const FlagSosCertificate& cert) {
  nlohmann::json j;
  j["n"] = cert.n;
  j["d"] = cert.d;
  j["variant"] = variant_name(cert.variant);
  j["ideal"] = ideal_to_json(cert.ideal);
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& blk : cert.blocks) {
    nlohmann::json jb;
    nlohmann::json type;
    type["t"] = blk.type.t;
    nlohmann::json te = nlohmann::json::array();
    for (const Edge& e : blk.type.edges) te.push_back({e.i, e.j});
    type["edges"] = std::move(te);
    jb["type"] = std::move(type);
    nlohmann::json flags = nlohmann::json::array();
    for (const Flag& F : blk.flags) flags.push_back(flag_to_json(F));
    jb["flags"] = std::move(flags);
    jb["R"] = matrix_json(blk.R);
    nlohmann::json ldl;
    ldl["perm"] = blk.ldl.perm;
    ldl["L"] = matrix_json(blk.ldl.L);
    nlohmann::json dvals = nlohmann::json::array();
    for (const Rat& d : blk.ldl.D) dvals.push_back(rat_pair(d));
    ldl["D"] = std::move(dvals);
    jb["ldl"] = std::move(ldl);
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

FlagSosCertificate certificate_from_json(const nlohmann::json& j) {
  FlagSosCertificate cert;
  cert.n = j.at("n").get<int>();
  cert.d = j.at("d").get<int>();
  cert.variant = variant_from_name(j.at("variant").get<std::string>());
  cert.ideal = ideal_from_json(j.at("ideal"));
  for (const auto& jb : j.at("blocks")) {
    CertBlock blk;
    blk.type.t = jb.at("type").at("t").get<int>();
    for (const auto& e : jb.at("type").at("edges"))
      blk.type.edges.push_back(make_edge(e.at(0), e.at(1)));
    std::sort(blk.type.edges.begin(), blk.type.edges.end());
    for (const auto& jf : jb.at("flags")) blk.flags.push_back(flag_from_json(jf));
    blk.R = matrix_from_json(jb.at("R"));
    blk.ldl.perm = jb.at("ldl").at("perm").get<std::vector<int>>();
    blk.ldl.L = matrix_from_json(jb.at("ldl").at("L"));
    for (const auto& dv : jb.at("ldl").at("D")) blk.ldl.D.push_back(rat_from_pair(dv));
    cert.blocks.push_back(std::move(blk));
  }
  return cert;
}

void save_certificate(const FlagSosCertificate& cert, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << certificate_to_json(cert).dump(2) << "\n";
}

FlagSosCertificate load_certificate(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  is >> j;
  return certificate_from_json(j);
}

}  // namespace flagcube
