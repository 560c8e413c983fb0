#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace legendre {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime(u64 n);

/// Prime factorisation by trial division, ascending primes with exponents.
std::vector<std::pair<u64, int>> factorize(u64 n);

/// p^n, or nullopt when the result exceeds 2^63.
std::optional<u64> checked_power(u64 p, unsigned n);

/// Writes q = p^n with p prime; nullopt when q is not a prime power.
std::optional<std::pair<u64, unsigned>> prime_power_split(u64 q);

/// floor(sqrt(n)), exact.
u64 isqrt(u64 n);

u64 powmod(u64 base, u64 exp, u64 mod);

/// Odd prime powers q with lo <= q <= hi, ascending.
std::vector<u64> odd_prime_powers(u64 lo, u64 hi);

/// Odd primes p with lo <= p <= hi, ascending.
std::vector<u64> odd_primes(u64 lo, u64 hi);

}  // namespace legendre
