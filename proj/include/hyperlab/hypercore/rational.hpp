#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt numerator_of(const Rational& q);
BigInt denominator_of(const Rational& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

/// Binomial coefficient C(n, k), 0 when k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// 2^e for e >= 0.
BigInt pow2(unsigned e);

}  // namespace hyperlab
