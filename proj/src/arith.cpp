#include "legendre/arith.hpp"

#include <limits>

namespace legendre {

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0)
        return false;
    for (u64 d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n)
{
    std::vector<std::pair<u64, int>> out;
    for (u64 d = 2; d <= n / d; ++d) {
        if (n % d != 0)
            continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::optional<u64> checked_power(u64 p, unsigned n)
{
    constexpr u64 limit = u64{1} << 63;
    u64 acc = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (acc > limit / p)
            return std::nullopt;
        acc *= p;
    }
    return acc;
}

std::optional<std::pair<u64, unsigned>> prime_power_split(u64 q)
{
    if (q < 2)
        return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1)
        return std::nullopt;
    return std::make_pair(f[0].first, static_cast<unsigned>(f[0].second));
}

u64 isqrt(u64 n)
{
    u64 r = 0;
    for (int b = 31; b >= 0; --b) {
        u64 c = r | (u64{1} << b);
        if (c * c <= n && c <= (u64{1} << 32) - 1)
            r = c;
    }
    return r;
}

u64 powmod(u64 base, u64 exp, u64 mod)
{
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1)
            r = static_cast<u64>(static_cast<u128>(r) * base % mod);
        base = static_cast<u64>(static_cast<u128>(base) * base % mod);
        exp >>= 1;
    }
    return r;
}

std::vector<u64> odd_prime_powers(u64 lo, u64 hi)
{
    std::vector<u64> out;
    for (u64 q = std::max<u64>(lo, 3); q <= hi; ++q) {
        if (q % 2 == 0)
            continue;
        if (prime_power_split(q))
            out.push_back(q);
    }
    return out;
}

std::vector<u64> odd_primes(u64 lo, u64 hi)
{
    std::vector<u64> out;
    for (u64 p = std::max<u64>(lo, 3); p <= hi; ++p)
        if (p % 2 == 1 && is_prime(p))
            out.push_back(p);
    return out;
}

}  // namespace legendre
