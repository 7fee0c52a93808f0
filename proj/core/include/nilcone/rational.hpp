#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace nilcone {

// Exact scalars. cpp_rational keeps gcd(|num|, den) = 1 and den > 0 by
// construction, which is exactly the canonical form required everywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVector = std::vector<Rational>;
using IVec = std::vector<Int>;

/// Canonical decimal form: "p/q", or just "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Int& n);

/// Parses "p" or "p/q" with optional sign; q must be nonzero.
Rational parse_rational(std::string_view s);

QVector to_rational(const IVec& v);

std::string to_string(const QVector& v);
std::string to_string(const IVec& v);

}  // namespace nilcone
