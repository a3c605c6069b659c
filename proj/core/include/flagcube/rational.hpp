// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace flagcube {

// Exact rational scalar used everywhere outside the numeric SDP solver.
using Rat = mpq_class;

/// Renders "num/den" with the denominator omitted when it is 1.
std::string rat_to_string(const Rat& q);

/// Parses "num" or "num/den" with optional leading sign. Throws std::invalid_argument.
Rat rat_from_string(std::string_view s);

double rat_to_double(const Rat& q);

/// Nearest rational to x with denominator at most max_den (continued-fraction
/// convergents). Returns nullopt only for non-finite x.
std::optional<Rat> rat_from_double(double x, long max_den);

/// n! as an exact integer.
mpz_class factorial(unsigned n);

/// Binomial coefficient as an exact integer.
mpz_class binomial(unsigned n, unsigned k);

}  // namespace flagcube
