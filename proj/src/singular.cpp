#include "orlik/singular.hpp"

#include "orlik/sdiob.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace orlik {

namespace {

void validate_chain(const std::vector<i64>& a)
{
    if (a.empty())
        throw ArgumentError("chain: at least one exponent required");
    for (i64 x : a)
        if (x < 1)
            throw ArgumentError("chain: exponents must be positive");
}

void validate_cycle(const std::vector<i64>& a)
{
    if (a.size() < 2)
        throw ArgumentError("cycle: at least two exponents required");
    for (i64 x : a)
        if (x < 1)
            throw ArgumentError("cycle: exponents must be positive");
    if (a.size() % 2 == 0) {
        bool even_all_one = true, odd_all_one = true;
        for (size_t j = 0; j < a.size(); j++) {
            if (a[j] != 1)
                ((j + 1) % 2 == 0 ? even_all_one : odd_all_one) = false;
        }
        if (even_all_one || odd_all_one)
            throw ArgumentError("cycle: with an even number of variables the exponents must "
                                "not all be 1 at the even positions or at the odd positions");
    }
}

i64 checked_mul(i64 a, i64 b, const char* what)
{
    __int128 p = static_cast<__int128>(a) * b;
    if (p > (static_cast<__int128>(1) << 62))
        throw LimitError(std::string(what) + ": product overflow");
    return static_cast<i64>(p);
}

WeightSystem reduce_weights(std::vector<mpq_class> w)
{
    WeightSystem ws;
    for (auto& q : w) {
        q.canonicalize();
        if (q <= 0 || q >= 1)
            throw ConsistencyError("weight outside (0,1)");
        if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
            throw LimitError("weight numerator or denominator too large");
        ws.s.push_back(q.get_num().get_si());
        ws.t.push_back(q.get_den().get_si());
    }
    return ws;
}

IntPolynomial block_poly(const BlockSet& m_set)
{
    IntPolynomial p = IntPolynomial::constant(1);
    for (i64 m : m_set)
        p = p * cyclotomic(m);
    return p;
}

std::vector<IntPolynomial> covering_polys(const Covering& cov)
{
    std::vector<IntPolynomial> ps;
    ps.reserve(cov.size());
    for (auto& m_set : cov)
        ps.push_back(block_poly(m_set));
    return ps;
}

BlockSet support_of(const ExponentMap& chi)
{
    BlockSet s;
    for (auto& [m, e] : chi)
        if (e != 0)
            s.push_back(m);
    return s;
}

} // namespace

WeightSystem make_weight_system(const std::vector<std::pair<i64, i64>>& fractions)
{
    if (fractions.empty())
        throw ArgumentError("weight system: at least one weight required");
    WeightSystem ws;
    for (auto& [num, den] : fractions) {
        if (den <= 0 || num <= 0 || num >= den)
            throw ArgumentError("weight system: weights must lie strictly between 0 and 1");
        i64 g = std::gcd(num, den);
        ws.s.push_back(num / g);
        ws.t.push_back(den / g);
    }
    return ws;
}

ExprPtr chain_expr(std::vector<i64> a)
{
    validate_chain(a);
    auto e = std::make_shared<SingularityExpr>();
    e->kind = SingularityExpr::Kind::chain;
    e->a = std::move(a);
    return e;
}

ExprPtr cycle_expr(std::vector<i64> a)
{
    validate_cycle(a);
    auto e = std::make_shared<SingularityExpr>();
    e->kind = SingularityExpr::Kind::cycle;
    e->a = std::move(a);
    return e;
}

ExprPtr sum_expr(ExprPtr f, ExprPtr g)
{
    if (!f || !g)
        throw ArgumentError("sum: both operands required");
    auto e = std::make_shared<SingularityExpr>();
    e->kind = SingularityExpr::Kind::sum;
    e->left = std::move(f);
    e->right = std::move(g);
    return e;
}

int variable_count(const SingularityExpr& f)
{
    if (f.kind == SingularityExpr::Kind::sum)
        return variable_count(*f.left) + variable_count(*f.right);
    return static_cast<int>(f.a.size());
}

std::string to_string(const SingularityExpr& f)
{
    if (f.kind == SingularityExpr::Kind::sum)
        return to_string(*f.left) + "+" + to_string(*f.right);
    std::ostringstream os;
    os << (f.kind == SingularityExpr::Kind::chain ? "chain(" : "cycle(");
    for (size_t i = 0; i < f.a.size(); i++)
        os << (i ? "," : "") << f.a[i];
    os << ")";
    return os.str();
}

int ChainData::chi(i64 m) const
{
    if (m < 1)
        throw ArgumentError("chain chi: m must be positive");
    int n = static_cast<int>(b.size()) - 1;
    for (int i = 0; i <= n; i++)
        if (b[static_cast<size_t>(i)] % m == 0)
            return i;
    return n + 1;
}

ChainData chain_data(const std::vector<i64>& a)
{
    validate_chain(a);
    int n = static_cast<int>(a.size());
    ChainData cd;
    cd.b.resize(static_cast<size_t>(n) + 1);
    cd.b[0] = 1;
    cd.b[1] = a[0] + 1;
    for (int k = 2; k <= n; k++)
        cd.b[static_cast<size_t>(k)] =
            checked_mul(cd.b[static_cast<size_t>(k) - 1], a[static_cast<size_t>(k) - 1], "chain");

    cd.mu = 0;
    for (int i = 0; i <= n; i++)
        cd.mu += (i % 2 == 0 ? 1 : -1) * cd.b[static_cast<size_t>(n - i)];
    if (cd.mu < 1)
        throw ConsistencyError("chain: nonpositive Milnor number");

    std::vector<i64> m_elems;
    for (i64 m : divisors(cd.b[static_cast<size_t>(n)]))
        if (cd.chi(m) % 2 == n % 2)
            m_elems.push_back(m);
    cd.m_set = make_block_set(std::move(m_elems));

    std::vector<mpq_class> w(static_cast<size_t>(n));
    w[0] = mpq_class(1, static_cast<long>(a[0] + 1));
    for (int i = 1; i < n; i++)
        w[static_cast<size_t>(i)] =
            (1 - w[static_cast<size_t>(i) - 1]) / static_cast<long>(a[static_cast<size_t>(i)]);
    cd.weights = reduce_weights(std::move(w));
    return cd;
}

CycleData cycle_data(const std::vector<i64>& a)
{
    validate_cycle(a);
    int n = static_cast<int>(a.size());
    bool even = n % 2 == 0;
    CycleData cd;
    cd.mu = 1;
    for (i64 x : a)
        cd.mu = checked_mul(cd.mu, x, "cycle");
    cd.d = cd.mu - (even ? 1 : -1);

    // close the recursion v_{i+1} = d - a_i v_i around the cycle; writing
    // v_i = alpha_i + beta_i v_1 gives v_1 = alpha_{n+1} / (1 - beta_{n+1})
    mpz_class alpha = 0, beta = 1;
    for (int i = 0; i < n; i++) {
        long ai = static_cast<long>(a[static_cast<size_t>(i)]);
        alpha = static_cast<long>(cd.d) - ai * alpha;
        beta = -ai * beta;
    }
    mpz_class denom = 1 - beta;
    if (denom == 0 || alpha % denom != 0)
        throw ConsistencyError("cycle: weight numerators are not integers");
    mpz_class v1 = alpha / denom;
    if (v1 <= 0 || !v1.fits_slong_p())
        throw ConsistencyError("cycle: nonpositive weight numerator");

    cd.v.resize(static_cast<size_t>(n));
    cd.v[0] = v1.get_si();
    for (int i = 0; i + 1 < n; i++) {
        cd.v[static_cast<size_t>(i) + 1] = cd.d - a[static_cast<size_t>(i)] * cd.v[static_cast<size_t>(i)];
        if (cd.v[static_cast<size_t>(i) + 1] <= 0)
            throw ConsistencyError("cycle: nonpositive weight numerator");
    }
    if (a[static_cast<size_t>(n) - 1] * cd.v[static_cast<size_t>(n) - 1] + cd.v[0] != cd.d)
        throw ConsistencyError("cycle: weight system does not close up");

    cd.g = std::gcd(cd.v[0], cd.d);
    for (i64 vi : cd.v)
        if (std::gcd(vi, cd.d) != cd.g)
            throw ConsistencyError("cycle: weight numerators have unequal gcd with the degree");
    cd.b = cd.d / cd.g;

    for (i64 m : divisors(cd.b))
        cd.chi[m] = cd.g;
    cd.chi[1] += even ? 1 : -1;
    if (cd.chi[1] == 0)
        cd.chi.erase(1);

    for (i64 j = 0; j < (even ? cd.g : cd.g - 1); j++)
        cd.covering.push_back(make_block_set(divisors(cd.b)));
    if (even) {
        cd.covering.push_back(make_block_set({1}));
    } else {
        std::vector<i64> last;
        for (i64 m : divisors(cd.b))
            if (m != 1)
                last.push_back(m);
        cd.covering.push_back(make_block_set(std::move(last)));
    }
    if (cd.covering != standard_covering(cd.chi))
        throw ConsistencyError("cycle: block covering disagrees with the level sets");

    std::vector<mpq_class> w;
    for (i64 vi : cd.v)
        w.emplace_back(static_cast<long>(vi), static_cast<long>(cd.d));
    cd.weights = reduce_weights(std::move(w));
    return cd;
}

Divisor milnor_orlik_divisor(const WeightSystem& w)
{
    if (w.vars() < 1)
        throw ArgumentError("weight expansion: empty weight system");
    std::map<i64, mpq_class> lam;
    lam[1] = 1;
    for (int j = 0; j < w.vars(); j++) {
        i64 sj = w.s[static_cast<size_t>(j)], tj = w.t[static_cast<size_t>(j)];
        std::map<i64, mpq_class> next;
        for (auto& [k, c] : lam) {
            i64 l = lcm_i64(k, tj);
            next[l] += c * mpq_class(static_cast<long>(std::gcd(k, tj)), static_cast<long>(sj));
            next[k] -= c;
        }
        lam.clear();
        for (auto& [k, c] : next)
            if (c != 0)
                lam[k] = c;
    }

    std::map<i64, i64> nu;
    for (auto& [k, c] : lam) {
        if (c.get_den() != 1)
            throw ConsistencyError("weight expansion: non-integral coefficient at order " +
                                   std::to_string(k));
        if (!c.get_num().fits_slong_p())
            throw LimitError("weight expansion: coefficient too large");
        nu[k] = c.get_num().get_si();
    }

    ExponentMap chi = nu_to_exponent(nu);
    for (auto& [m, e] : chi)
        if (e < 0)
            throw ConsistencyError("weight expansion: negative multiplicity at order " +
                                   std::to_string(m));
    return to_divisor(chi);
}

std::map<i64, i64> nu_map(const ExponentMap& chi)
{
    std::set<i64> keys;
    for (auto& [m, e] : chi)
        if (e != 0)
            for (i64 k : divisors(m))
                keys.insert(k);
    std::map<i64, i64> nu;
    for (i64 k : keys) {
        i64 v = 0;
        for (auto& [m, e] : chi)
            if (m % k == 0)
                v += e * moebius(m / k);
        if (v != 0)
            nu[k] = v;
    }
    return nu;
}

ExponentMap nu_to_exponent(const std::map<i64, i64>& nu)
{
    std::set<i64> keys;
    for (auto& [k, c] : nu)
        if (c != 0)
            for (i64 m : divisors(k))
                keys.insert(m);
    ExponentMap chi;
    for (i64 m : keys) {
        i64 v = 0;
        for (auto& [k, c] : nu)
            if (k % m == 0)
                v += c;
        if (v != 0)
            chi[m] = v;
    }
    return chi;
}

bool kouchnirenko_c2(const WeightSystem& w, int max_vars)
{
    int n = w.vars();
    if (n > max_vars)
        throw LimitError("kouchnirenko_c2: more variables than the configured bound");
    i64 d = 1;
    for (int j = 0; j < n; j++)
        d = lcm_i64(d, w.t[static_cast<size_t>(j)]);
    if ((static_cast<i64>(1) << n) * d > 200000000)
        throw LimitError("kouchnirenko_c2: weighted-degree search space too large");

    // common denominator d turns each emptiness test into a coin problem:
    // reach 1 - w_k scaled to d - c_k using the coins c_j over J
    std::vector<i64> coin(static_cast<size_t>(n));
    for (int j = 0; j < n; j++)
        coin[static_cast<size_t>(j)] = w.s[static_cast<size_t>(j)] * (d / w.t[static_cast<size_t>(j)]);

    std::vector<char> reach(static_cast<size_t>(d) + 1);
    for (int mask = 1; mask < (1 << n); mask++) {
        std::fill(reach.begin(), reach.end(), 0);
        reach[0] = 1;
        for (int j = 0; j < n; j++)
            if (mask & (1 << j))
                for (i64 x = coin[static_cast<size_t>(j)]; x <= d; x++)
                    reach[static_cast<size_t>(x)] |=
                        reach[static_cast<size_t>(x - coin[static_cast<size_t>(j)])];
        int hits = 0;
        for (int k = 0; k < n; k++)
            if (reach[static_cast<size_t>(d - coin[static_cast<size_t>(k)])])
                hits++;
        if (hits < __builtin_popcount(static_cast<unsigned>(mask)))
            return false;
    }
    return true;
}

OrderTuple canonical_orders(const WeightSystem& w, const BlockSet& m_f)
{
    if (m_f.empty())
        throw ArgumentError("canonical orders: empty support");
    std::set<i64> primes;
    for (i64 m : m_f)
        for (auto& [p, k] : factorize(m))
            primes.insert(p);

    OrderTuple t;
    for (i64 p : primes) {
        ExcellentOrder o;
        for (i64 m : m_f)
            o.s = std::max(o.s, valuation(p, m));
        i64 pk = 1;
        for (int k = 0; k <= o.s; k++) {
            int count = 0;
            for (i64 tj : w.t)
                if (tj % pk == 0)
                    count++;
            if (count % 2 == 1)
                o.big.insert(k);
            if (k < o.s)
                pk = checked_mul(pk, p, "canonical orders");
        }
        t[p] = o;
    }
    return t;
}

WeightSystem weights_of(const SingularityExpr& f)
{
    switch (f.kind) {
    case SingularityExpr::Kind::chain:
        return chain_data(f.a).weights;
    case SingularityExpr::Kind::cycle:
        return cycle_data(f.a).weights;
    case SingularityExpr::Kind::sum: {
        WeightSystem l = weights_of(*f.left), r = weights_of(*f.right);
        l.s.insert(l.s.end(), r.s.begin(), r.s.end());
        l.t.insert(l.t.end(), r.t.begin(), r.t.end());
        return l;
    }
    }
    throw ArgumentError("weights_of: unknown expression kind");
}

namespace {

// per-node characteristic data carried up the expression tree
struct NodeSummary {
    ExponentMap chi;
    OrderTuple orders;
    int nvars = 0;
};

// the parity count at k = 0 equals the number of variables, so a missing
// prime extends by the order ({0} or empty, s = 0) matching that parity
ExcellentOrder trivial_extension(int nvars)
{
    ExcellentOrder o;
    o.s = 0;
    if (nvars % 2 == 1)
        o.big.insert(0);
    return o;
}

ExponentMap power_exponent(const BlockSet& m_set, i64 mu)
{
    std::set<i64> image;
    for (i64 m : m_set)
        image.insert(gamma_mu(mu, m));
    ExponentMap chi;
    for (i64 nn : image)
        chi[nn] = power_multiplicity(m_set, mu, nn);
    return chi;
}

NodeSummary summarize(const SingularityExpr& f)
{
    NodeSummary out;
    switch (f.kind) {
    case SingularityExpr::Kind::chain: {
        ChainData cd = chain_data(f.a);
        out.chi = power_exponent(cd.m_set, cd.mu);
        if (out.chi != to_exponent(milnor_orlik_divisor(cd.weights)))
            throw ConsistencyError("chain: eigenvalue orders disagree with the weight expansion");
        out.orders = canonical_orders(cd.weights, support_of(out.chi));
        out.nvars = static_cast<int>(f.a.size());
        return out;
    }
    case SingularityExpr::Kind::cycle: {
        CycleData cd = cycle_data(f.a);
        out.chi = cd.chi;
        if (out.chi != to_exponent(milnor_orlik_divisor(cd.weights)))
            throw ConsistencyError("cycle: exponent map disagrees with the weight expansion");
        out.orders = canonical_orders(cd.weights, support_of(out.chi));
        out.nvars = static_cast<int>(f.a.size());
        return out;
    }
    case SingularityExpr::Kind::sum: {
        NodeSummary l = summarize(*f.left), r = summarize(*f.right);
        out.chi = tensor_exponent(l.chi, r.chi);
        std::set<i64> primes;
        for (auto& [p, o] : l.orders)
            primes.insert(p);
        for (auto& [p, o] : r.orders)
            primes.insert(p);
        for (i64 p : primes) {
            auto il = l.orders.find(p), ir = r.orders.find(p);
            ExcellentOrder ol = il != l.orders.end() ? il->second : trivial_extension(l.nvars);
            ExcellentOrder or_ = ir != r.orders.end() ? ir->second : trivial_extension(r.nvars);
            out.orders[p] = tensor_order(ol, or_);
        }
        out.nvars = l.nvars + r.nvars;
        return out;
    }
    }
    throw ArgumentError("char_exponent: unknown expression kind");
}

i64 exponent_degree(const ExponentMap& chi)
{
    i64 deg = 0;
    for (auto& [m, e] : chi)
        deg += e * euler_phi(m);
    return deg;
}

StandardDecomposition build_decomposition(const ExponentMap& chi, OrderTuple orders,
                                          bool conjectural)
{
    if (!is_map_compatible(chi, orders))
        throw ConsistencyError("decompose: exponent map is not compatible with the canonical "
                               "excellent orders");
    StandardDecomposition d;
    d.covering = standard_covering(chi);
    d.polynomials = covering_polys(d.covering);
    d.mu = exponent_degree(chi);
    d.orders = std::move(orders);
    d.conjectural = conjectural;

    i64 degsum = 0;
    for (auto& p : d.polynomials)
        degsum += p.degree();
    for (size_t j = 0; j + 1 < d.polynomials.size(); j++)
        if (!divides(d.polynomials[j + 1], d.polynomials[j]))
            throw ConsistencyError("decompose: elementary divisors fail the divisibility chain");
    if (degsum != d.mu)
        throw ConsistencyError("decompose: block degrees do not add up to the Milnor number");
    return d;
}

} // namespace

ExponentMap char_exponent(const SingularityExpr& f) { return summarize(f).chi; }

StandardDecomposition decompose(const SingularityExpr& f)
{
    NodeSummary s = summarize(f);
    return build_decomposition(s.chi, std::move(s.orders), false);
}

StandardDecomposition decompose(const WeightSystem& w)
{
    ExponentMap chi = to_exponent(milnor_orlik_divisor(w));
    OrderTuple orders = canonical_orders(w, support_of(chi));
    return build_decomposition(chi, std::move(orders), true);
}

namespace {

LinkHomology link_from(const ExponentMap& chi, const WeightSystem& w)
{
    int n = w.vars();
    if (n < 3)
        throw ArgumentError("link homology: at least three variables required");
    if (n > 20)
        throw LimitError("link homology: too many variables for the subset sum");

    // inclusion-exclusion over variable subsets; each term is
    // (-1)^|I| / (prod of weights over I times lcm of denominators over I)
    mpq_class total = 0;
    for (int mask = 0; mask < (1 << n); mask++) {
        mpq_class term = 1;
        i64 l = 1;
        for (int j = 0; j < n; j++)
            if (mask & (1 << j)) {
                term *= mpq_class(static_cast<long>(w.t[static_cast<size_t>(j)]),
                                  static_cast<long>(w.s[static_cast<size_t>(j)]));
                l = lcm_i64(l, w.t[static_cast<size_t>(j)]);
            }
        term /= static_cast<long>(l);
        if ((n - __builtin_popcount(static_cast<unsigned>(mask))) % 2 == 1)
            term = -term;
        total += term;
    }
    total.canonicalize();
    if (total.get_den() != 1 || total < 0)
        throw ConsistencyError("link homology: subset sum is not a nonnegative integer");

    LinkHomology lh;
    auto it = chi.find(1);
    lh.l = it == chi.end() ? 0 : it->second;
    if (total != static_cast<long>(lh.l))
        throw ConsistencyError("link homology: subset sum disagrees with the unit-root "
                               "multiplicity");

    Covering cov = standard_covering(chi);
    for (size_t j = static_cast<size_t>(lh.l); j < cov.size(); j++) {
        mpz_class v = 1;
        for (i64 m : cov[j])
            v *= static_cast<long>(cyclo_at_one(m));
        if (v < 1)
            throw ConsistencyError("link homology: torsion order below 1");
        if (!lh.torsion.empty() && lh.torsion.back() % v != 0)
            throw ConsistencyError("link homology: torsion orders fail the divisibility chain");
        lh.torsion.push_back(v);
    }
    return lh;
}

} // namespace

LinkHomology link_homology(const SingularityExpr& f)
{
    return link_from(char_exponent(f), weights_of(f));
}

LinkHomology link_homology(const WeightSystem& w)
{
    return link_from(to_exponent(milnor_orlik_divisor(w)), w);
}

namespace {

IntMatrix matrix_power(const IntMatrix& base, i64 e)
{
    IntMatrix acc = IntMatrix::identity(base.rows());
    IntMatrix sq = base;
    while (e > 0) {
        if (e & 1)
            acc = acc * sq;
        e >>= 1;
        if (e)
            sq = sq * sq;
    }
    return acc;
}

struct CertNode {
    IntMatrix mon;
    IntMatrix u;
    Covering covering;
};

// seed columns a_0, ..., a_{k-1} of a companion block are the first k unit
// vectors; on a tensor factor they sit at stride right_dim
IntMatrix unit_seeds(int dim, int count, int stride)
{
    IntMatrix s(dim, count);
    for (int j = 0; j < count; j++)
        s.at(j * stride, j) = 1;
    return s;
}

CertNode certify_node(const SingularityExpr& f, int max_rank)
{
    CertNode out;
    switch (f.kind) {
    case SingularityExpr::Kind::chain: {
        ChainData cd = chain_data(f.a);
        if (cd.mu > max_rank)
            throw LimitError("certify: chain rank exceeds the cap");
        IntMatrix h = companion_matrix(block_poly(cd.m_set));
        out.mon = matrix_power(h, cd.mu);
        out.covering = standard_covering(power_exponent(cd.m_set, cd.mu));
        Conjugation c = complete_decomposition(
            out.mon, covering_polys(out.covering),
            unit_seeds(h.rows(), static_cast<int>(out.covering.size()), 1));
        out.u = c.basis;
        return out;
    }
    case SingularityExpr::Kind::cycle: {
        CycleData cd = cycle_data(f.a);
        if (cd.mu > max_rank)
            throw LimitError("certify: cycle rank exceeds the cap");
        out.mon = block_companion(covering_polys(cd.covering));
        out.u = IntMatrix::identity(out.mon.rows());
        out.covering = cd.covering;
        return out;
    }
    case SingularityExpr::Kind::sum: {
        CertNode l = certify_node(*f.left, max_rank);
        CertNode r = certify_node(*f.right, max_rank);
        int rl = l.mon.rows(), rr = r.mon.rows();
        if (static_cast<i64>(rl) * rr > max_rank)
            throw LimitError("certify: sum rank exceeds the cap");
        int rank = rl * rr;
        out.mon = kronecker(l.mon, r.mon);
        IntMatrix u = kronecker(l.u, r.u);

        std::vector<int> ldim, loff, rdim, roff;
        int acc = 0;
        for (auto& m_set : l.covering) {
            loff.push_back(acc);
            int d = 0;
            for (i64 m : m_set)
                d += static_cast<int>(euler_phi(m));
            ldim.push_back(d);
            acc += d;
        }
        acc = 0;
        for (auto& m_set : r.covering) {
            roff.push_back(acc);
            int d = 0;
            for (i64 m : m_set)
                d += static_cast<int>(euler_phi(m));
            rdim.push_back(d);
            acc += d;
        }

        // regroup the Kronecker basis so that each block pair becomes one
        // contiguous Kronecker product of companion blocks
        IntMatrix perm(rank, rank);
        int pos = 0;
        for (size_t i = 0; i < l.covering.size(); i++)
            for (size_t j = 0; j < r.covering.size(); j++)
                for (int x = 0; x < ldim[i]; x++)
                    for (int y = 0; y < rdim[j]; y++)
                        perm.at((loff[i] + x) * rr + (roff[j] + y), pos++) = 1;

        IntMatrix v = IntMatrix::identity(rank);
        Covering flat;
        pos = 0;
        for (size_t i = 0; i < l.covering.size(); i++) {
            IntMatrix hi = companion_matrix(block_poly(l.covering[i]));
            for (size_t j = 0; j < r.covering.size(); j++) {
                IntMatrix hj = companion_matrix(block_poly(r.covering[j]));
                ExponentMap chi = chi_of(l.covering[i], r.covering[j]).second;
                Covering cov = standard_covering(chi);
                Conjugation c = complete_decomposition(
                    kronecker(hi, hj), covering_polys(cov),
                    unit_seeds(ldim[i] * rdim[j], static_cast<int>(cov.size()), rdim[j]));
                for (int x = 0; x < c.basis.rows(); x++)
                    for (int y = 0; y < c.basis.cols(); y++)
                        v.at(pos + x, pos + y) = c.basis.at(x, y);
                pos += c.basis.rows();
                flat.insert(flat.end(), cov.begin(), cov.end());
            }
        }

        StandardizeResult st = standardize_block_sum(flat);
        out.u = u * perm * v * st.conj.basis;
        out.covering = st.covering;
        return out;
    }
    }
    throw ArgumentError("certify: unknown expression kind");
}

} // namespace

Certificate certify(const SingularityExpr& f, int max_rank)
{
    CertNode node = certify_node(f, max_rank);
    if (node.covering != standard_covering(char_exponent(f)))
        throw ConsistencyError("certify: final covering disagrees with the exponent map");
    Certificate cert;
    cert.monodromy = node.mon;
    cert.conj = Conjugation{node.u, covering_polys(node.covering)};
    cert.covering = node.covering;
    if (!verify_conjugation(cert.monodromy, cert.conj))
        throw ConsistencyError("certify: conjugation failed verification");
    return cert;
}

} // namespace orlik
