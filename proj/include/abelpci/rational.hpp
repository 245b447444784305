#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace abelpci {

// Arbitrary-precision rationals. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation; values built from
// raw parts go through make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::uint64_t den);
Rational make_rational(const Integer& num, const Integer& den);

// Always "num/den", including "0/1" and "3/1".
std::string to_string(const Rational& q);

// Accepts "num/den" or "num"; throws InputError on malformed text or den == 0.
Rational parse_rational(std::string_view text);

}  // namespace abelpci
