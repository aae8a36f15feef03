#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace coinv {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "3", "-7/2"; the result is canonicalized. Throws std::invalid_argument
// on malformed input or a zero denominator.
Rat rat_from_string(const std::string& s);

// "3", "-7/2"; denominator omitted when it is 1.
std::string rat_to_string(const Rat& x);

// Image of x in F_p, i.e. num(x) * den(x)^{-1} mod p. Throws std::domain_error
// when p divides the denominator.
std::uint64_t reduce_mod(const Rat& x, std::uint64_t p);

// Modular helpers for p < 2^31 (products fit in 64 bits).
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace coinv
