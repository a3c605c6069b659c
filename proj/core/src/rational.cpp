// SPDX-License-Identifier: Apache-2.0
#include "flagcube/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace flagcube {

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string text(s);
  try {
    Rat q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

double rat_to_double(const Rat& q) { return q.get_d(); }

std::optional<Rat> rat_from_double(double x, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  if (max_den < 1) max_den = 1;
  bool neg = x < 0;
  double v = neg ? -x : x;

  // Continued-fraction convergents p/q of v until the denominator bound.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9e18) break;
    mpz_class a(static_cast<long>(fl));
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) { p1 = 0; q1 = 1; }
  Rat out(p1, q1);
  out.canonicalize();
  if (neg) out = -out;
  return out;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace flagcube
