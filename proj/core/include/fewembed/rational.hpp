#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fewembed {

/// Arbitrary-precision rational, always kept in canonical reduced form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// "p/q" with q > 0; zero is "0/1" and integers carry "/1".
std::string to_string(const Rational& q);

/// Accepts "p/q" or an integer "p". Throws Error(kMalformedInput) otherwise,
/// including for zero denominators.
Rational parse_rational(std::string_view text);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational squared_norm(const RationalVector& a);

/// Exact rank by Gaussian elimination over the rationals.
int rank(RationalMatrix rows);

/// A basis of {x : row . x = 0 for every row}; rows all have length `cols`.
RationalMatrix null_space(RationalMatrix rows, std::size_t cols);

}  // namespace fewembed
