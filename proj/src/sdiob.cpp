#include "orlik/sdiob.hpp"

#include "orlik/errors.hpp"

#include <algorithm>

namespace orlik {

bool operator==(const PEdge& a, const PEdge& b)
{
    return a.p == b.p && a.from == b.from && a.to == b.to;
}

bool operator<(const PEdge& a, const PEdge& b)
{
    if (a.p != b.p)
        return a.p < b.p;
    if (a.from != b.from)
        return a.from < b.from;
    return a.to < b.to;
}

std::vector<PEdge> p_edges(const BlockSet& m_set)
{
    std::vector<PEdge> edges;
    for (i64 a : m_set)
        for (i64 b : m_set) {
            auto [p, k] = prime_power_ratio(a, b);
            if (p != 0)
                edges.push_back({p, a, b});
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

i64 gamma_mu(i64 mu, i64 m)
{
    if (mu < 1 || m < 1)
        throw ArgumentError("gamma_mu: arguments must be positive");
    return m / std::gcd(m, mu);
}

BlockSet gamma_fiber(i64 mu, i64 n)
{
    if (mu < 1 || n < 1)
        throw ArgumentError("gamma_fiber: arguments must be positive");
    i64 base = n, cofactor = 1;
    for (auto& [p, k] : factorize(mu)) {
        i64 pk = 1;
        for (int i = 0; i < k; i++)
            pk *= p;
        if (n % p == 0)
            base *= pk;
        else
            cofactor *= pk;
    }
    BlockSet fiber;
    for (i64 c : divisors(cofactor))
        fiber.push_back(base * c);
    return make_block_set(std::move(fiber));
}

std::set<int> k_set(const BlockSet& m_set, i64 p, i64 m0)
{
    if (!is_prime(p))
        throw ArgumentError("k_set: p must be prime");
    if (m0 < 1 || m0 % p == 0)
        throw ArgumentError("k_set: m0 must be positive and coprime to p");
    std::set<int> ks;
    for (i64 m : m_set)
        if (strip_prime(p, m) == m0)
            ks.insert(valuation(p, m));
    return ks;
}

i64 power_multiplicity(const BlockSet& m_set, i64 mu, i64 n)
{
    i64 total = 0;
    for (i64 m : m_set)
        if (gamma_mu(mu, m) == n)
            total += euler_phi(m);
    i64 phin = euler_phi(n);
    if (total % phin != 0)
        throw ConsistencyError("power_multiplicity: orbit size not divisible by phi");
    return total / phin;
}

namespace {

bool contains(const BlockSet& s, i64 x) { return std::binary_search(s.begin(), s.end(), x); }

// members of M lying over n
BlockSet fiber_part(const BlockSet& m_set, i64 mu, i64 n)
{
    BlockSet part;
    for (i64 m : m_set)
        if (gamma_mu(mu, m) == n)
            part.push_back(m);
    return part;
}

// transported element must land in the expected fiber; anything else means
// the transport maps were built wrongly
void check_fiber(i64 mu, i64 x, i64 n)
{
    if (gamma_mu(mu, x) != n)
        throw ConsistencyError("fiber transport left the expected fiber");
}

} // namespace

CheckResult is_sdiob_power(const BlockSet& m_set, i64 mu)
{
    if (m_set.empty())
        throw ArgumentError("is_sdiob_power: empty set");
    if (mu < 1)
        throw ArgumentError("is_sdiob_power: mu must be positive");
    std::vector<i64> image;
    for (i64 m : m_set)
        image.push_back(gamma_mu(mu, m));
    BlockSet projected = make_block_set(std::move(image));

    for (const PEdge& e : p_edges(projected)) {
        i64 p = e.p, na = e.from, nb = e.to;
        int k = valuation(p, na / nb);
        int vmu = valuation(p, mu);
        BlockSet over_a = fiber_part(m_set, mu, na);
        BlockSet over_b = fiber_part(m_set, mu, nb);

        bool down_ok = true;
        if (nb % p == 0) {
            // dividing by the edge ratio must stay inside M
            for (i64 m : over_a) {
                i64 t = m;
                for (int i = 0; i < k; i++)
                    t /= p;
                check_fiber(mu, t, nb);
                if (!contains(m_set, t)) {
                    down_ok = false;
                    break;
                }
            }
        } else {
            // the whole p-tower over the stripped element must lie in M
            for (i64 m : over_a) {
                i64 base = strip_prime(p, m);
                for (int kk = 0; kk <= vmu && down_ok; kk++) {
                    i64 t = base;
                    for (int i = 0; i < kk; i++)
                        t *= p;
                    check_fiber(mu, t, nb);
                    if (!contains(m_set, t))
                        down_ok = false;
                }
                if (!down_ok)
                    break;
            }
        }
        if (down_ok)
            continue;

        // raising to the top p-power over the larger vertex must stay inside M
        bool up_ok = true;
        int e_top = valuation(p, na) + vmu;
        for (i64 m : over_b) {
            i64 t = strip_prime(p, m);
            for (int i = 0; i < e_top; i++)
                t *= p;
            check_fiber(mu, t, na);
            if (!contains(m_set, t)) {
                up_ok = false;
                break;
            }
        }
        if (!up_ok)
            return {false, e};
    }
    return {true, std::nullopt};
}

namespace {

BlockSet pi_p(const BlockSet& s, i64 p)
{
    std::vector<i64> stripped;
    for (i64 m : s)
        stripped.push_back(strip_prime(p, m));
    return make_block_set(std::move(stripped));
}

// tower over m0 inside M
BlockSet tower(const BlockSet& s, i64 p, i64 m0)
{
    BlockSet t;
    for (i64 m : s)
        if (strip_prime(p, m) == m0)
            t.push_back(m);
    return t;
}

} // namespace

i64 chi_local(const BlockSet& m_set, const BlockSet& n_set, i64 p, i64 m0, i64 n0, i64 l)
{
    if (!is_prime(p))
        throw ArgumentError("chi_local: p must be prime");
    if (m0 < 1 || n0 < 1 || m0 % p == 0 || n0 % p == 0)
        throw ArgumentError("chi_local: tower bases must be coprime to p");
    BlockSet mt = tower(m_set, p, m0), nt = tower(n_set, p, n0);
    if (mt.empty() || nt.empty())
        throw ArgumentError("chi_local: tower base not present in the set");
    i64 total = 0;
    for (i64 m : mt)
        for (i64 n : nt)
            total += delta(m, n, l);
    return total;
}

CheckResult is_sdiob_tensor(const BlockSet& m_set, const BlockSet& n_set)
{
    if (m_set.empty() || n_set.empty())
        throw ArgumentError("is_sdiob_tensor: empty set");
    auto [support, chi] = chi_of(m_set, n_set);
    for (const PEdge& e : p_edges(support)) {
        BlockSet mb = pi_p(m_set, e.p), nb = pi_p(n_set, e.p);
        bool all_le = true, all_ge = true;
        for (i64 m0 : mb)
            for (i64 n0 : nb) {
                i64 xa = chi_local(m_set, n_set, e.p, m0, n0, e.from);
                i64 xb = chi_local(m_set, n_set, e.p, m0, n0, e.to);
                if (xb > xa)
                    all_le = false;
                if (xb < xa)
                    all_ge = false;
            }
        if (!all_le && !all_ge)
            return {false, e};
    }
    return {true, std::nullopt};
}

XiValue xi(const BlockSet& m_set, const BlockSet& n_set, i64 p, i64 l_a, i64 l_b)
{
    auto [support, chi] = chi_of(m_set, n_set);
    auto [q, k] = prime_power_ratio(l_a, l_b);
    if (q != p || k < 1 || !contains(support, l_a) || !contains(support, l_b))
        throw ArgumentError("xi: (l_a, l_b) is not a p-edge of the product support");
    XiValue v;
    v.xi1 = std::min(chi.at(l_a), chi.at(l_b));
    v.xi2p = 0;
    for (i64 m0 : pi_p(m_set, p))
        for (i64 n0 : pi_p(n_set, p)) {
            i64 xa = chi_local(m_set, n_set, p, m0, n0, l_a);
            i64 xb = chi_local(m_set, n_set, p, m0, n0, l_b);
            v.xi2p += std::min(xa, xb);
        }
    v.xi = v.xi1 - v.xi2p;
    return v;
}

} // namespace orlik
