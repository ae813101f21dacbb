#pragma once

/**
 * @file numeric.hpp
 * @brief Shared integer utilities: exact big integers, overflow-safe modular
 *        arithmetic, deterministic primality testing, divisor enumeration.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace cmnp {

/// Arbitrary-precision signed integer. All exact arithmetic in the library
/// (rational slopes, zeta coefficients, power sums) runs on this type.
using Integer = boost::multiprecision::cpp_int;

/// (a * b) mod m, correct for any m < 2^64.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// (base ^ exp) mod m by square-and-multiply.
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic primality test for 64-bit integers.
///
/// Trial division for small n, then Miller-Rabin with the fixed base set
/// {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, which is known to be
/// exact for every n < 2^64.
bool is_prime(std::uint64_t n);

/// All divisors of n > 0 in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Number of odd divisors of n > 0.
std::uint64_t count_odd_divisors(std::uint64_t n);

/// Exact binomial coefficient C(n, k).
Integer binomial(std::uint64_t n, std::uint64_t k);

/// p-adic valuation of a nonzero integer (largest e with p^e | v).
std::uint64_t valuation(Integer v, std::uint64_t p);

/// p^k as an exact integer.
Integer integer_pow(std::uint64_t p, std::uint64_t k);

/// True iff v fits in a signed 64-bit integer.
bool fits_int64(const Integer& v);

}  // namespace cmnp
