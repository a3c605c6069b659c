// SPDX-License-Identifier: Apache-2.0
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "flagcube/sos.hpp"

namespace flagcube {

// .dat-s layout: m, nblocks, block sizes, rhs vector, then one entry per line
// "matno block i j value" with matno 0 the objective. Values are printed with
// max_digits10 so a parse-back reproduces the doubles bit-exactly.

void export_sdpa(const FlagSosProblem& problem, std::ostream& os) {
  os << "\"flag sos feasibility: n=" << problem.n << " d=" << problem.d << " variant="
     << variant_name(problem.variant) << " ideal=" << problem.ideal.name << "\"\n";
  os << problem.constraints.size() << " = mDIM\n";
  os << problem.blocks.size() << " = nBLOCK\n";
  for (std::size_t b = 0; b < problem.blocks.size(); ++b)
    os << (b ? " " : "") << problem.blocks[b].flags.size();
  os << " = bLOCKsTRUCT\n";
  os << std::setprecision(17);
  for (std::size_t k = 0; k < problem.constraints.size(); ++k)
    os << (k ? " " : "") << rat_to_double(problem.constraints[k].rhs);
  os << "\n";
  for (std::size_t k = 0; k < problem.constraints.size(); ++k) {
    const auto& con = problem.constraints[k];
    for (std::size_t b = 0; b < con.A.size(); ++b) {
      const RatMatrix& A = con.A[b];
      for (int r = 0; r < A.rows(); ++r)
        for (int c = r; c < A.cols(); ++c)
          if (A.at(r, c) != 0)
            os << (k + 1) << " " << (b + 1) << " " << (r + 1) << " " << (c + 1) << " "
               << rat_to_double(A.at(r, c)) << "\n";
    }
  }
}

void export_sdpa_file(const FlagSosProblem& problem, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  export_sdpa(problem, os);
}

namespace {
// Strips comment lines and the "= mDIM" style suffixes.
std::vector<std::string> significant_lines(std::istream& is) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '"' || line[0] == '*') continue;
    auto eq = line.find('=');
    if (eq != std::string::npos) line = line.substr(0, eq);
    for (char& ch : line)
      if (ch == ',' || ch == '(' || ch == ')' || ch == '{' || ch == '}') ch = ' ';
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) lines.push_back(line);
  }
  return lines;
}
}  // namespace

SdpaFileData parse_sdpa_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::vector<std::string> lines = significant_lines(is);
  if (lines.size() < 4) throw std::runtime_error("truncated SDPA file");
  SdpaFileData data;
  {
    std::istringstream ss(lines[0]);
    ss >> data.m;
  }
  int nblock = 0;
  {
    std::istringstream ss(lines[1]);
    ss >> nblock;
  }
  {
    std::istringstream ss(lines[2]);
    int v;
    while (ss >> v) data.block_sizes.push_back(std::abs(v));
    if (static_cast<int>(data.block_sizes.size()) != nblock)
      throw std::runtime_error("block structure length mismatch");
  }
  {
    std::istringstream ss(lines[3]);
    double v;
    while (ss >> v) data.b.push_back(v);
    if (static_cast<int>(data.b.size()) != data.m) throw std::runtime_error("rhs length mismatch");
  }
  for (std::size_t k = 4; k < lines.size(); ++k) {
    std::istringstream ss(lines[k]);
    SdpaFileData::Entry e;
    if (ss >> e.matno >> e.block >> e.i >> e.j >> e.value) data.entries.push_back(e);
  }
  return data;
}

std::vector<Eigen::MatrixXd> import_sdpa_solution(const std::string& path,
                                                  const std::vector<int>& block_sizes) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  auto pos = text.find("yMat");
  if (pos == std::string::npos) throw std::runtime_error("no yMat section in " + path);
  pos = text.find('=', pos);
  if (pos == std::string::npos) throw std::runtime_error("malformed yMat section");
  // Collect the numbers of the outermost { ... } group after '='.
  std::size_t k = text.find('{', pos);
  if (k == std::string::npos) throw std::runtime_error("malformed yMat section");
  int depth = 0;
  std::string numbers;
  for (; k < text.size(); ++k) {
    char ch = text[k];
    if (ch == '{') {
      ++depth;
      numbers.push_back(' ');
    } else if (ch == '}') {
      --depth;
      numbers.push_back(' ');
      if (depth == 0) break;
    } else if (ch == ',') {
      numbers.push_back(' ');
    } else {
      numbers.push_back(ch);
    }
  }
  std::istringstream ss(numbers);
  std::vector<Eigen::MatrixXd> out;
  for (int s : block_sizes) {
    Eigen::MatrixXd M(s, s);
    for (int r = 0; r < s; ++r)
      for (int c = 0; c < s; ++c)
        if (!(ss >> M(r, c))) throw std::runtime_error("yMat too short for the block structure");
    out.push_back(std::move(M));
  }
  return out;
}

void write_sdpa_solution(const std::vector<Eigen::MatrixXd>& blocks, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << std::setprecision(17);
  os << "objValPrimal = 0\nobjValDual = 0\n";
  os << "yMat = {\n";
  for (const auto& M : blocks) {
    os << "{ ";
    for (int r = 0; r < M.rows(); ++r) {
      os << "{";
      for (int c = 0; c < M.cols(); ++c) os << (c ? "," : "") << M(r, c);
      os << (r + 1 < M.rows() ? "}," : "}");
    }
    os << " }\n";
  }
  os << "}\n";
}

}  // namespace flagcube
