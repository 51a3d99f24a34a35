#include "graphlap/rational.hpp"

#include <algorithm>
#include <cctype>

#include "graphlap/error.hpp"

namespace graphlap {

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  if (allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) ||
      (slash != std::string_view::npos && !is_integer_literal(den, false))) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational out;
  out.get_num() = Integer(n, 10);
  out.get_den() = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (out.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  out.canonicalize();
  return out;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational out;
  out.get_num() = Integer(std::to_string(num), 10);
  out.get_den() = Integer(std::to_string(den), 10);
  out.canonicalize();
  return out;
}

Rational pow2_inverse(unsigned k) {
  Rational out(1);
  mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), k);
  return out;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace graphlap
