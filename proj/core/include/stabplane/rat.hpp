#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace stabplane {

// Exact arithmetic carriers. mpq_class keeps values canonical (denominator
// positive, gcd 1), which is exactly the contract the rest of the library
// relies on. Nothing in here ever rounds.
using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(const BigInt& num, const BigInt& den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q", plain integers, and decimal literals ("-0.125" -> -1/8).
// Decimals are parsed exactly as p/10^k. Throws InvalidParams on junk.
Rat parse_rat(const std::string& text);

// Canonical "p/q" (or "p" for integers); inverse of parse_rat.
std::string to_string(const Rat& r);

bool is_integer(const Rat& r);

// Largest integer <= r.
BigInt floor_rat(const Rat& r);

double to_double(const Rat& r);

// sqrt(n) when n is a perfect square, nullopt otherwise.
std::optional<BigInt> exact_sqrt(const BigInt& n);

// Splits off the square part of n (n >= 0) by trial division up to a fixed
// prime bound: afterwards n has no square factor with prime <= bound. Returns
// the extracted factor f, i.e. old n == f^2 * new n. Large prime squares can
// survive; callers must not assume the result is fully square-free.
BigInt extract_square_part(BigInt& n);

// Decimal rendering with the given number of significant digits, exact input.
std::string decimal_string(const Rat& r, int digits);

}  // namespace stabplane
