#pragma once

// Small integer helpers shared by the field and counting code.

#include <cstdint>
#include <utility>
#include <vector>

namespace addix {

bool is_prime(std::uint64_t x);

/// Prime factorization by trial division, primes ascending with multiplicity.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t x);

/// Distinct prime divisors of x.
std::vector<std::uint64_t> prime_divisors(std::uint64_t x);

/// All positive divisors of x, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t x);

/// b^e, saturating at UINT64_MAX.
std::uint64_t ipow_sat(std::uint64_t b, unsigned e);

std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace addix
