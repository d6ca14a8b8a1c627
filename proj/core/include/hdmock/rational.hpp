#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hdmock {

// Exact rational numbers. Always kept canonical: positive denominator and
// lowest terms.
using QRational = mpq_class;
using QInteger = mpz_class;

// "num/den" with the denominator always printed, e.g. "3/1", "-1/2".
std::string to_string(const QRational& x);

// Accepts "num/den" or a bare integer. Throws hdmock::Error on malformed input.
QRational parse_rational(std::string_view text);

// Nearest long double; keeps 64 significant bits of numerator and denominator
// so coefficients of size well beyond 2^53 lose no more than extended precision.
long double to_long_double(const QRational& x);

}  // namespace hdmock
