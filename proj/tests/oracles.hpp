#pragma once

// Brute-force reference implementations used to generate and pin expected
// values in the test suite. Deliberately independent of the library: own
// polynomial arithmetic, own rational linear algebra, and unit-root counting
// done directly on reduced fractions. Everything here is O(slow) and only
// used on small inputs.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Poly = std::vector<mpz_class>; // coefficient list, index = degree, no trailing zeros

inline Poly trim(Poly p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

inline Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] += a[i] * b[j];
    return trim(r);
}

// quotient of an exact division by a monic divisor; throws if not exact
inline Poly divexact(Poly num, const Poly& den)
{
    if (den.empty() || den.back() != 1)
        throw std::runtime_error("oracle divexact: divisor not monic");
    num = trim(num);
    if (num.empty())
        return {};
    if (num.size() < den.size())
        throw std::runtime_error("oracle divexact: not divisible");
    Poly q(num.size() - den.size() + 1, mpz_class(0));
    for (size_t k = q.size(); k-- > 0;) {
        q[k] = num[k + den.size() - 1];
        for (size_t j = 0; j < den.size(); j++)
            num[k + j] -= q[k] * den[j];
    }
    for (const auto& c : num)
        if (c != 0)
            throw std::runtime_error("oracle divexact: remainder");
    return q;
}

// t^m - 1 factored into cyclotomics by repeated exact division
inline Poly cyclotomic(long long m)
{
    static std::map<long long, Poly> cache;
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    Poly num(static_cast<size_t>(m) + 1, mpz_class(0));
    num[0] = -1;
    num.back() = 1;
    for (long long d = 1; d < m; d++)
        if (m % d == 0)
            num = divexact(num, cyclotomic(d));
    cache[m] = num;
    return num;
}

inline long long gcdll(long long a, long long b) { return std::gcd(a, b); }

inline long long euler_phi(long long m)
{
    long long r = m;
    for (long long p = 2; p * p <= m; p++) {
        if (m % p)
            continue;
        r -= r / p;
        while (m % p == 0)
            m /= p;
    }
    if (m > 1)
        r -= r / m;
    return r;
}

// multiplicative order of the unit root e(a/m - b/n): the reduced denominator
// of (a*n - b*m)/(m*n), with 0 mapped to order 1
inline long long pair_order(long long a, long long m, long long b, long long n)
{
    long long num = a * n - b * m;
    long long den = m * n;
    if (num == 0)
        return 1;
    long long g = gcdll(num < 0 ? -num : num, den);
    return den / g;
}

// tally of orders of e(a/m - b/n) over all primitive pairs (a,b)
inline std::map<long long, long long> primitive_pair_tally(long long m, long long n)
{
    std::map<long long, long long> tally;
    for (long long a = 1; a <= m; a++) {
        if (gcdll(a, m) != 1)
            continue;
        for (long long b = 1; b <= n; b++) {
            if (gcdll(b, n) != 1)
                continue;
            tally[pair_order(a, m, b, n)]++;
        }
    }
    return tally;
}

// number of primitive pairs whose difference root has order p^k, divided by
// phi(p^k); the division must be exact
inline long long lambda_count(long long m, long long n, long long p, long long k)
{
    long long target = 1;
    for (long long i = 0; i < k; i++)
        target *= p;
    auto tally = primitive_pair_tally(m, n);
    long long cnt = tally.count(target) ? tally[target] : 0;
    long long phi = euler_phi(target);
    if (cnt % phi != 0)
        throw std::runtime_error("oracle lambda_count: tally not divisible by phi");
    return cnt / phi;
}

// order tally of e(a/m + b/n) over primitive pairs, normalized per order by
// phi(order); this is the brute-force product of two cyclotomic divisors
inline std::map<long long, long long> psi_product(long long m, long long n)
{
    std::map<long long, long long> tally;
    for (long long a = 1; a <= m; a++) {
        if (gcdll(a, m) != 1)
            continue;
        for (long long b = 1; b <= n; b++) {
            if (gcdll(b, n) != 1)
                continue;
            long long num = a * n + b * m;
            long long den = m * n;
            long long g = gcdll(num % den == 0 ? den : num % den, den);
            // num mod den == 0 means the root is 1, order 1
            tally[num % den == 0 ? 1 : den / g]++;
        }
    }
    std::map<long long, long long> result;
    for (auto& [ord, cnt] : tally) {
        long long phi = euler_phi(ord);
        if (cnt % phi != 0)
            throw std::runtime_error("oracle psi_product: tally not divisible by phi");
        result[ord] = cnt / phi;
    }
    return result;
}

// order tally of products of ALL m-th and n-th unit roots (not just
// primitive): the brute-force product of two full root divisors
inline std::map<long long, long long> lambda_product(long long m, long long n)
{
    std::map<long long, long long> tally;
    for (long long a = 1; a <= m; a++)
        for (long long b = 1; b <= n; b++) {
            long long num = a * n + b * m;
            long long den = m * n;
            long long r = num % den;
            long long g = gcdll(r == 0 ? den : r, den);
            tally[r == 0 ? 1 : den / g]++;
        }
    std::map<long long, long long> result;
    for (auto& [ord, cnt] : tally) {
        long long phi = euler_phi(ord);
        if (cnt % phi != 0)
            throw std::runtime_error("oracle lambda_product: tally not divisible by phi");
        result[ord] = cnt / phi;
    }
    return result;
}

// determinant over the rationals by plain Gaussian elimination
inline mpq_class det_gauss(std::vector<std::vector<mpq_class>> a)
{
    size_t n = a.size();
    for (auto& row : a)
        if (row.size() != n)
            throw std::runtime_error("oracle det_gauss: not square");
    mpq_class det = 1;
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            piv++;
        if (piv == n)
            return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; r++) {
            if (a[r][col] == 0)
                continue;
            mpq_class f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; c++)
                a[r][c] -= f * a[col][c];
        }
    }
    det.canonicalize();
    return det;
}

inline mpz_class det_gauss_int(const std::vector<std::vector<mpz_class>>& a)
{
    std::vector<std::vector<mpq_class>> q(a.size());
    for (size_t i = 0; i < a.size(); i++)
        for (const auto& x : a[i])
            q[i].push_back(mpq_class(x));
    mpq_class d = det_gauss(q);
    if (d.get_den() != 1)
        throw std::runtime_error("oracle det_gauss_int: non-integer determinant");
    return d.get_num();
}

// resultant by the Euclidean remainder sequence over the rationals;
// normalization: res(f,g) = lc(f)^{deg g} * product of g over the roots of f
inline mpq_class resultant_rec(std::vector<mpq_class> f, std::vector<mpq_class> g)
{
    auto deg = [](const std::vector<mpq_class>& p) { return static_cast<long long>(p.size()) - 1; };
    long long m = deg(f), n = deg(g);
    if (n == 0) {
        mpq_class r = 1;
        for (long long i = 0; i < m; i++)
            r *= g[0];
        return r;
    }
    // f mod g
    std::vector<mpq_class> r = f;
    while (deg(r) >= n) {
        mpq_class q = r.back() / g.back();
        long long s = deg(r) - n;
        for (long long i = 0; i <= n; i++)
            r[i + s] -= q * g[i];
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        if (r.empty())
            return 0;
    }
    long long d = deg(r);
    mpq_class scale = 1;
    for (long long i = 0; i < m - d; i++)
        scale *= g.back();
    mpq_class sub = resultant_rec(g, r);
    return ((m * n) % 2 ? -scale : scale) * sub;
}

inline mpz_class resultant(const Poly& f, const Poly& g)
{
    if (f.empty() || g.empty())
        throw std::runtime_error("oracle resultant: zero polynomial");
    std::vector<mpq_class> fq(f.begin(), f.end()), gq(g.begin(), g.end());
    mpq_class r = resultant_rec(fq, gq);
    if (r.get_den() != 1)
        throw std::runtime_error("oracle resultant: non-integer value");
    return r.get_num();
}

} // namespace oracle
