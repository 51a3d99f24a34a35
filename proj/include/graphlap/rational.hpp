#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graphlap {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator as long as every value goes through canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);

/// Accepts "p/q", "p", optionally signed. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// 2^-k as an exact rational.
Rational pow2_inverse(unsigned k);

bool is_zero(const RationalVector& v);

}  // namespace graphlap
