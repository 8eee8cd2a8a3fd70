#pragma once

// Small number-theoretic helpers on 64-bit integers: valuations, Euler phi,
// Moebius, factorization, divisor lists. All exact, all by trial division;
// the numbers in scope are tiny (orders of unit roots, Milnor numbers).

#include "orlik/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace orlik {

using i64 = long long;

inline bool is_prime(i64 p)
{
    if (p < 2)
        return false;
    for (i64 d = 2; d * d <= p; d++)
        if (p % d == 0)
            return false;
    return true;
}

// v_p(m): max k with p^k | m
inline int valuation(i64 p, i64 m)
{
    if (!is_prime(p))
        throw ArgumentError("valuation: p = " + std::to_string(p) + " is not prime");
    if (m < 1)
        throw ArgumentError("valuation: m must be positive");
    int k = 0;
    while (m % p == 0) {
        m /= p;
        k++;
    }
    return k;
}

struct PrimePower {
    i64 p;
    int k;
    PrimePower(i64 p_, int k_) : p(p_), k(k_)
    {
        if (!is_prime(p))
            throw ArgumentError("PrimePower: base is not prime");
        if (k < 0)
            throw ArgumentError("PrimePower: negative exponent");
    }
    i64 value() const
    {
        i64 v = 1;
        for (int i = 0; i < k; i++)
            v *= p;
        return v;
    }
};

// prime factorization as (p, exponent) pairs, p ascending
inline std::vector<std::pair<i64, int>> factorize(i64 m)
{
    if (m < 1)
        throw ArgumentError("factorize: m must be positive");
    thread_local std::map<i64, std::vector<std::pair<i64, int>>> cache;
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    i64 orig = m;
    std::vector<std::pair<i64, int>> f;
    for (i64 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p)
            continue;
        int k = 0;
        while (m % p == 0) {
            m /= p;
            k++;
        }
        f.emplace_back(p, k);
    }
    if (m > 1)
        f.emplace_back(m, 1);
    if (cache.size() < 1u << 20)
        cache[orig] = f;
    return f;
}

inline i64 euler_phi(i64 m)
{
    if (m < 1)
        throw ArgumentError("euler_phi: m must be positive");
    i64 r = m;
    for (auto& [p, k] : factorize(m))
        r = r / p * (p - 1);
    return r;
}

inline int moebius(i64 m)
{
    if (m < 1)
        throw ArgumentError("moebius: m must be positive");
    int r = 1;
    for (auto& [p, k] : factorize(m)) {
        if (k > 1)
            return 0;
        r = -r;
    }
    return r;
}

inline std::vector<i64> divisors(i64 m)
{
    std::vector<i64> d{1};
    for (auto& [p, k] : factorize(m)) {
        size_t old = d.size();
        i64 q = 1;
        for (int i = 0; i < k; i++) {
            q *= p;
            for (size_t j = 0; j < old; j++)
                d.push_back(d[j] * q);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

inline i64 lcm_i64(i64 a, i64 b)
{
    i64 g = std::gcd(a, b);
    __int128 l = static_cast<__int128>(a / g) * b;
    if (l > static_cast<__int128>(1) << 62)
        throw LimitError("lcm overflow");
    return static_cast<i64>(l);
}

// m / p^{v_p(m)}
inline i64 strip_prime(i64 p, i64 m)
{
    while (m % p == 0)
        m /= p;
    return m;
}

// if a/b is p^k with k >= 1, returns (p, k)
inline std::pair<i64, int> prime_power_ratio(i64 a, i64 b)
{
    if (a <= b || a % b != 0)
        return {0, 0};
    auto f = factorize(a / b);
    if (f.size() != 1)
        return {0, 0};
    return {f[0].first, f[0].second};
}

} // namespace orlik
