#include "orlik/divisor.hpp"

#include <algorithm>

namespace orlik {

BlockSet make_block_set(std::vector<i64> elems)
{
    for (i64 m : elems)
        if (m < 1)
            throw ArgumentError("block set elements must be positive");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

void Divisor::add(i64 m, i64 k)
{
    if (m < 1)
        throw ArgumentError("divisor index must be positive");
    if (k == 0)
        return;
    auto [it, fresh] = c.emplace(m, k);
    if (!fresh) {
        it->second += k;
        if (it->second == 0)
            c.erase(it);
    }
}

bool operator==(const Divisor& a, const Divisor& b) { return a.c == b.c; }

Divisor operator+(const Divisor& a, const Divisor& b)
{
    Divisor r = a;
    for (auto& [m, k] : b.c)
        r.add(m, k);
    return r;
}

Divisor operator-(const Divisor& a, const Divisor& b)
{
    Divisor r = a;
    for (auto& [m, k] : b.c)
        r.add(m, -k);
    return r;
}

Divisor operator*(i64 k, const Divisor& d)
{
    Divisor r;
    if (k != 0)
        for (auto& [m, v] : d.c)
            r.c[m] = k * v;
    return r;
}

Divisor psi(i64 m)
{
    if (m < 1)
        throw ArgumentError("psi: m must be positive");
    Divisor d;
    d.c[m] = 1;
    return d;
}

Divisor lambda_div(i64 m)
{
    if (m < 1)
        throw ArgumentError("lambda_div: m must be positive");
    Divisor d;
    for (i64 e : divisors(m))
        d.c[e] = 1;
    return d;
}

i64 degree(const Divisor& d)
{
    i64 s = 0;
    for (auto& [m, k] : d.c)
        s += k * euler_phi(m);
    return s;
}

i64 beta(i64 m, i64 n)
{
    if (m < 1 || n < 1)
        throw ArgumentError("beta: arguments must be positive");
    i64 b = 1;
    for (auto& [p, k] : factorize(m))
        if (valuation(p, n) == k)
            for (int i = 0; i < k; i++)
                b *= p;
    return b;
}

i64 delta(i64 m, i64 n, i64 l)
{
    if (m < 1 || n < 1 || l < 1)
        throw ArgumentError("delta: arguments must be positive");
    i64 big = lcm_i64(m, n);
    if (big % l != 0)
        return 0;
    i64 c = big / l;
    i64 b = beta(m, n);
    if (b % c != 0)
        return 0;
    // phi(gcd) * product over p with v_p(c) = 0 < v_p(beta) of (p-2)/(p-1),
    // assembled prime by prime so every factor stays integral
    i64 g = std::gcd(m, n);
    i64 r = 1;
    for (auto& [p, k] : factorize(g)) {
        for (int i = 1; i < k; i++)
            r *= p;
        r *= (b % p == 0 && c % p != 0) ? (p - 2) : (p - 1);
    }
    return r;
}

Divisor mul(const Divisor& a, const Divisor& b)
{
    Divisor r;
    for (auto& [m, am] : a.c)
        for (auto& [n, bn] : b.c) {
            i64 big = lcm_i64(m, n);
            for (i64 c : divisors(beta(m, n)))
                r.add(big / c, am * bn * delta(m, n, big / c));
        }
    return r;
}

ExponentMap tensor_exponent(const ExponentMap& chi1, const ExponentMap& chi2)
{
    if (to_divisor(chi1).c.empty() || to_divisor(chi2).c.empty())
        throw ArgumentError("tensor_exponent: empty support");
    return to_exponent(mul(to_divisor(chi1), to_divisor(chi2)));
}

std::pair<BlockSet, ExponentMap> chi_of(const BlockSet& m_set, const BlockSet& n_set)
{
    Divisor dm, dn;
    for (i64 m : m_set)
        dm.add(m, 1);
    for (i64 n : n_set)
        dn.add(n, 1);
    Divisor prod = mul(dm, dn);
    BlockSet support;
    ExponentMap chi;
    for (auto& [l, k] : prod.c) {
        support.push_back(l);
        chi[l] = k;
    }
    return {support, chi};
}

IntPolynomial exponent_to_poly(const ExponentMap& chi)
{
    IntPolynomial f = IntPolynomial::constant(1);
    for (auto& [m, k] : chi) {
        if (k < 0)
            throw ArgumentError("exponent_to_poly: negative multiplicity");
        IntPolynomial phi = cyclotomic(m);
        for (i64 i = 0; i < k; i++)
            f = f * phi;
    }
    return f;
}

Divisor to_divisor(const ExponentMap& chi)
{
    Divisor d;
    for (auto& [m, k] : chi)
        d.add(m, k);
    return d;
}

ExponentMap to_exponent(const Divisor& d)
{
    ExponentMap chi;
    for (auto& [m, k] : d.c) {
        if (k < 0)
            throw ArgumentError("to_exponent: negative coefficient");
        chi[m] = k;
    }
    return chi;
}

} // namespace orlik
