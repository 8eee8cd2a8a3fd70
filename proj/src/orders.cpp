#include "orlik/orders.hpp"

#include "orlik/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace orlik {

namespace {

void validate(const ExcellentOrder& o)
{
    if (o.s < 0)
        throw ArgumentError("excellent order: negative bound");
    for (int k : o.big)
        if (k < 0 || k > o.s)
            throw ArgumentError("excellent order: big set exceeds the bound");
}

i64 pow_i64(i64 p, int k)
{
    i64 v = 1;
    while (k-- > 0) {
        if (v > (i64(1) << 61) / p)
            throw LimitError("prime power overflow");
        v *= p;
    }
    return v;
}

bool contains(const BlockSet& s, i64 x) { return std::binary_search(s.begin(), s.end(), x); }

} // namespace

Ordering compare(const ExcellentOrder& o, int a, int b)
{
    validate(o);
    if (a < 0 || a > o.s || b < 0 || b > o.s)
        throw ArgumentError("compare: value outside [0, s]");
    if (a == b)
        return Ordering::equal;
    bool high_a = a == 0 || o.big.count(a);
    bool high_b = b == 0 || o.big.count(b);
    bool greater;
    if (high_a != high_b)
        greater = high_a;
    else if (high_a)
        greater = a > b;
    else
        greater = a < b;
    return greater ? Ordering::greater : Ordering::less;
}

int s_plus(const ExcellentOrder& o)
{
    validate(o);
    return o.big.empty() ? 0 : std::max(0, *o.big.rbegin());
}

ExcellentOrder tensor_order(const ExcellentOrder& a, const ExcellentOrder& b)
{
    validate(a);
    validate(b);
    ExcellentOrder r;
    r.s = std::max(a.s, b.s);
    std::set_symmetric_difference(a.big.begin(), a.big.end(), b.big.begin(), b.big.end(),
                                  std::inserter(r.big, r.big.end()));
    return r;
}

bool is_subset_compatible(const std::set<int>& k, const ExcellentOrder& o)
{
    validate(o);
    for (int x : k)
        if (x < 0 || x > o.s)
            return false;
    std::vector<int> seq(static_cast<size_t>(o.s) + 1);
    std::iota(seq.begin(), seq.end(), 0);
    std::sort(seq.begin(), seq.end(),
              [&](int x, int y) { return compare(o, x, y) == Ordering::greater; });
    for (size_t i = 0; i < k.size(); i++)
        if (!k.count(seq[i]))
            return false;
    return true;
}

Quadrant quadrant(const OrderTuple& t, i64 max_vertices)
{
    i64 total = 1;
    for (auto& [p, o] : t) {
        if (!is_prime(p))
            throw ArgumentError("quadrant: tuple key is not prime");
        validate(o);
        if (total > max_vertices / (o.s + 1) + 1)
            throw LimitError("quadrant: vertex count exceeds the limit");
        total *= o.s + 1;
    }
    if (total > max_vertices)
        throw LimitError("quadrant: vertex count exceeds the limit");

    Quadrant q;
    std::vector<i64> verts{1};
    for (auto& [p, o] : t) {
        std::vector<i64> next;
        for (i64 v : verts)
            for (int k = 0; k <= o.s; k++)
                next.push_back(v * pow_i64(p, k));
        verts = std::move(next);
    }
    q.vertices = make_block_set(std::move(verts));

    for (i64 v : q.vertices)
        for (auto& [p, o] : t) {
            int kv = valuation(p, v);
            i64 base = strip_prime(p, v);
            for (int k = 0; k <= o.s; k++)
                if (k != kv && compare(o, k, kv) == Ordering::greater)
                    q.edges.push_back({p, base * pow_i64(p, k), v});
        }
    std::sort(q.edges.begin(), q.edges.end(), [](const VEdge& a, const VEdge& b) {
        return std::tie(a.p, a.from, a.to) < std::tie(b.p, b.from, b.to);
    });

    q.center = 1;
    for (auto& [p, o] : t)
        q.center *= pow_i64(p, s_plus(o));
    return q;
}

namespace {

void require_primes_covered(const BlockSet& m_set, const OrderTuple& t)
{
    for (i64 m : m_set)
        for (auto& [p, k] : factorize(m))
            if (!t.count(p))
                throw ArgumentError("order tuple does not cover prime " + std::to_string(p));
}

} // namespace

bool is_set_compatible(const BlockSet& m_set, const OrderTuple& t)
{
    require_primes_covered(m_set, t);
    for (auto& [p, o] : t)
        validate(o);
    for (i64 m : m_set) {
        for (auto& [p, o] : t) {
            int v = valuation(p, m);
            if (v > o.s)
                return false;
            i64 base = strip_prime(p, m);
            for (int k = 0; k <= o.s; k++)
                if (k != v && compare(o, k, v) == Ordering::greater &&
                    !contains(m_set, base * pow_i64(p, k)))
                    return false;
        }
    }
    return true;
}

bool is_map_compatible(const ExponentMap& chi, const OrderTuple& t)
{
    BlockSet supp;
    for (auto& [m, c] : chi) {
        if (c < 0)
            throw ArgumentError("is_map_compatible: negative multiplicity");
        if (c > 0)
            supp.push_back(m);
    }
    require_primes_covered(supp, t);
    for (auto& [p, o] : t)
        validate(o);
    auto value = [&](i64 m) {
        auto it = chi.find(m);
        return it == chi.end() ? i64(0) : it->second;
    };
    for (i64 m : supp) {
        for (auto& [p, o] : t) {
            int v = valuation(p, m);
            if (v > o.s)
                return false;
            i64 base = strip_prime(p, m);
            for (int k = 0; k <= o.s; k++)
                if (k != v && compare(o, k, v) == Ordering::greater &&
                    value(base * pow_i64(p, k)) < value(m))
                    return false;
        }
    }
    return true;
}

Covering standard_covering(const ExponentMap& chi)
{
    i64 top = 0;
    for (auto& [m, c] : chi) {
        if (c < 0)
            throw ArgumentError("standard_covering: negative multiplicity");
        top = std::max(top, c);
    }
    if (top == 0)
        throw ArgumentError("standard_covering: empty support");
    Covering cov;
    for (i64 j = 1; j <= top; j++) {
        BlockSet mj;
        for (auto& [m, c] : chi)
            if (c >= j)
                mj.push_back(m);
        cov.push_back(std::move(mj));
    }
    return cov;
}

namespace {

Covering canonical(Covering cov)
{
    std::sort(cov.begin(), cov.end(), [](const BlockSet& a, const BlockSet& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    return cov;
}

} // namespace

std::vector<Covering> enumerate_compatible_coverings(const ExponentMap& chi, const OrderTuple& t,
                                                     i64 cap)
{
    if (!is_map_compatible(chi, t))
        throw ArgumentError("enumerate_compatible_coverings: map not compatible with the tuple");

    BlockSet supp;
    i64 top = 0;
    for (auto& [m, c] : chi)
        if (c > 0) {
            supp.push_back(m);
            top = std::max(top, c);
        }
    if (top == 0)
        throw ArgumentError("enumerate_compatible_coverings: empty support");
    if (top > 62)
        throw LimitError("enumerate_compatible_coverings: multiplicity too large");

    int n = static_cast<int>(supp.size());
    auto index_of = [&](i64 m) {
        return static_cast<int>(std::lower_bound(supp.begin(), supp.end(), m) - supp.begin());
    };
    auto value = [&](i64 m) { return chi.at(m); };

    // vertices of equal multiplicity in a common prime tower always compare,
    // so they belong to one component and share every covering set
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };

    std::map<std::pair<i64, i64>, std::vector<int>> towers;
    for (i64 m : supp)
        for (auto& [p, o] : t)
            towers[{p, strip_prime(p, m)}].push_back(index_of(m));
    for (auto& [key, members] : towers)
        for (size_t i = 0; i < members.size(); i++)
            for (size_t j = i + 1; j < members.size(); j++)
                if (value(supp[static_cast<size_t>(members[i])]) ==
                    value(supp[static_cast<size_t>(members[j])]))
                    unite(members[i], members[j]);

    // cross-level tower pairs force slot containment from the higher level
    std::set<std::pair<int, int>> dag;
    for (auto& [key, members] : towers)
        for (size_t i = 0; i < members.size(); i++)
            for (size_t j = 0; j < members.size(); j++) {
                i64 vi = value(supp[static_cast<size_t>(members[i])]);
                i64 vj = value(supp[static_cast<size_t>(members[j])]);
                if (vi > vj)
                    dag.emplace(find(members[i]), find(members[j]));
            }

    std::vector<int> roots;
    for (int i = 0; i < n; i++)
        if (find(i) == i)
            roots.push_back(i);
    std::sort(roots.begin(), roots.end(), [&](int a, int b) {
        i64 va = value(supp[static_cast<size_t>(a)]), vb = value(supp[static_cast<size_t>(b)]);
        if (va != vb)
            return va > vb;
        return a < b;
    });

    std::map<int, int> pos;
    for (size_t i = 0; i < roots.size(); i++)
        pos[roots[i]] = static_cast<int>(i);

    using Mask = unsigned long long;
    const Mask full = top >= 62 ? ~0ull : ((1ull << top) - 1);
    std::vector<Mask> slot(roots.size(), 0);
    std::set<Covering> out;

    std::function<void(size_t)> walk = [&](size_t at) {
        if (at == roots.size()) {
            Covering cov(static_cast<size_t>(top));
            for (int i = 0; i < n; i++) {
                Mask s = slot[static_cast<size_t>(pos.at(find(i)))];
                for (i64 j = 0; j < top; j++)
                    if (s >> j & 1)
                        cov[static_cast<size_t>(j)].push_back(supp[static_cast<size_t>(i)]);
            }
            out.insert(canonical(std::move(cov)));
            if (static_cast<i64>(out.size()) > cap)
                throw LimitError("enumerate_compatible_coverings: cap exceeded");
            return;
        }
        int root = roots[at];
        Mask allowed = full;
        for (auto& [a, b] : dag)
            if (b == root)
                allowed &= slot[static_cast<size_t>(pos.at(a))];
        i64 need = value(supp[static_cast<size_t>(root)]);
        // all subsets of allowed with popcount need
        std::vector<int> bits;
        for (i64 j = 0; j < top; j++)
            if (allowed >> j & 1)
                bits.push_back(static_cast<int>(j));
        if (static_cast<i64>(bits.size()) < need)
            return;
        std::vector<int> pick(static_cast<size_t>(need));
        std::function<void(size_t, size_t)> choose = [&](size_t from, size_t got) {
            if (got == pick.size()) {
                Mask s = 0;
                for (size_t x = 0; x < got; x++)
                    s |= 1ull << bits[static_cast<size_t>(pick[x])];
                slot[at] = s;
                walk(at + 1);
                return;
            }
            for (size_t i = from; i + (pick.size() - got) <= bits.size(); i++) {
                pick[got] = static_cast<int>(i);
                choose(i + 1, got + 1);
            }
        };
        choose(0, 0);
    };
    walk(0);

    Covering std_cov = canonical(standard_covering(chi));
    if (!out.count(std_cov))
        throw ConsistencyError("enumerate_compatible_coverings: standard covering missing");
    return {out.begin(), out.end()};
}

std::optional<OrderTuple> infer_orders(const BlockSet& m_set)
{
    if (m_set.empty())
        throw ArgumentError("infer_orders: empty set");
    std::vector<i64> primes;
    for (i64 m : m_set)
        for (auto& [p, k] : factorize(m))
            primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    OrderTuple t;
    for (i64 p : primes) {
        int sp = 0;
        for (i64 m : m_set)
            sp = std::max(sp, valuation(p, m));

        std::vector<i64> bases;
        for (i64 m : m_set)
            bases.push_back(strip_prime(p, m));
        bases = make_block_set(std::move(bases));

        std::map<i64, std::set<int>> ks;
        std::map<i64, int> g;
        for (i64 m0 : bases) {
            std::set<int> k = k_set(m_set, p, m0);
            int gv;
            if (k.count(0)) {
                gv = 0;
                while (k.count(gv + 1))
                    gv++;
            } else {
                gv = *k.begin() - 1;
            }
            ks[m0] = std::move(k);
            g[m0] = gv;
        }
        int gmin = g.begin()->second;
        for (auto& [m0, gv] : g)
            gmin = std::min(gmin, gv);

        auto closure_ok = [&](const ExcellentOrder& o) {
            for (i64 m : m_set) {
                int v = valuation(p, m);
                i64 base = strip_prime(p, m);
                for (int k = 0; k <= o.s; k++)
                    if (k != v && compare(o, k, v) == Ordering::greater &&
                        !contains(m_set, base * pow_i64(p, k)))
                        return false;
            }
            return true;
        };

        bool done = false;
        for (int pass = 0; pass < 2 && !done; pass++)
            for (i64 m0 : bases) {
                if (g[m0] != gmin)
                    continue;
                bool has_zero = ks[m0].count(0) != 0;
                if ((pass == 0) == has_zero)
                    continue;
                ExcellentOrder o;
                o.s = sp;
                o.big = ks[m0];
                o.big.erase(0);
                if (closure_ok(o)) {
                    t[p] = o;
                    done = true;
                    break;
                }
            }
        if (!done)
            return std::nullopt;
    }
    if (!is_set_compatible(m_set, t))
        return std::nullopt;
    return t;
}

} // namespace orlik
