#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ekr {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when input data (files, parameters) violates a documented contract.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical exact text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Accepts "a", "-a", "a/b" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Fixed-point decimal rendering truncated toward -infinity when round_down,
// otherwise toward +infinity. Used for enclosure endpoints.
std::string decimal_string(const Rational& value, int digits, bool round_down);

double to_double(const Rational& value);

Integer power(const Integer& base, unsigned long exponent);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
std::uint64_t to_u64(const Integer& value);

bool is_prime(std::uint64_t n);
// Returns true and sets (p, k) with n = p^k, k >= 1.
bool prime_power(std::uint64_t n, std::uint64_t& p, unsigned& k);

}  // namespace ekr
