#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lazyhom {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; parse_rational canonicalizes explicitly.
using Integer = mpz_class;
using Rational = mpq_class;

using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else
/// (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Formats as "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

bool is_zero_vector(const QVector& v);

QVector unit_vector(std::size_t n, std::size_t i);

}  // namespace lazyhom
