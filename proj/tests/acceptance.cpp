// Acceptance gate. Each criterion runs independently, prints one line with
// its verdict and wall time, and the process exits nonzero when any of them
// fails. The checks pit closed forms against independent recomputations at
// desk scale; nothing here is mocked.

#include "orlik/divisor.hpp"
#include "orlik/errors.hpp"
#include "orlik/lattice.hpp"
#include "orlik/numth.hpp"
#include "orlik/orders.hpp"
#include "orlik/poly.hpp"
#include "orlik/sdiob.hpp"
#include "orlik/singular.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace orlik;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Failure(what);
}

int failures = 0;

void criterion(int id, const std::string& label, const std::function<void()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
        body();
    } catch (const std::exception& e) {
        verdict = "FAIL";
        detail = e.what();
        failures++;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s (%6.2fs) %s%s%s\n", id, verdict.c_str(), secs, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

// ---------- generated expression suite, shared by criteria 8..10 ----------

struct SuiteEntry {
    ExprPtr e;
    i64 mu = 0;
};

ExprPtr random_leaf(std::mt19937_64& gen)
{
    for (;;) {
        if (gen() % 10 < 6) {
            std::vector<i64> a;
            int len = 1 + static_cast<int>(gen() % 3);
            for (int i = 0; i < len; i++)
                a.push_back(1 + static_cast<i64>(gen() % 4));
            return chain_expr(a);
        }
        std::vector<i64> a;
        int len = 2 + static_cast<int>(gen() % 2);
        for (int i = 0; i < len; i++)
            a.push_back(1 + static_cast<i64>(gen() % 3));
        try {
            return cycle_expr(a);
        } catch (const ArgumentError&) {
        }
    }
}

std::vector<SuiteEntry> build_suite(int count, i64 max_mu)
{
    std::mt19937_64 gen(2026);
    std::vector<SuiteEntry> suite;
    while (static_cast<int>(suite.size()) < count) {
        ExprPtr e = random_leaf(gen);
        int leaves = 1 + static_cast<int>(gen() % 3);
        for (int i = 1; i < leaves; i++)
            e = sum_expr(e, random_leaf(gen));
        ExponentMap chi = char_exponent(*e);
        i64 mu = 0;
        for (auto& [m, k] : chi)
            mu += k * euler_phi(m);
        if (mu <= max_mu)
            suite.push_back({std::move(e), mu});
    }
    return suite;
}

BlockSet support_of_map(const ExponentMap& chi)
{
    BlockSet s;
    for (auto& [m, k] : chi)
        s.push_back(m);
    return s;
}

// the top set's membership of 0 never changes the order itself
bool same_order_mod_zero(const ExcellentOrder& a, const ExcellentOrder& b)
{
    auto strip = [](std::set<int> s) {
        s.erase(0);
        return s;
    };
    return a.s == b.s && strip(a.big) == strip(b.big);
}

mpz_class edge_exponent_product(const BlockSet& m, const BlockSet& n)
{
    BlockSet l = chi_of(m, n).first;
    mpz_class pred = 1;
    for (const PEdge& e : p_edges(l)) {
        XiValue x = xi(m, n, e.p, e.from, e.to);
        require(x.xi >= 0, "negative edge exponent");
        i64 count = euler_phi(e.to) * x.xi;
        for (i64 i = 0; i < count; i++)
            pred *= static_cast<long>(e.p);
    }
    return pred;
}

std::string set_str(const BlockSet& s)
{
    std::ostringstream os;
    for (size_t i = 0; i < s.size(); i++)
        os << (i ? "," : "") << s[i];
    return os.str();
}

// ---------- criteria ----------

void c1_resultants()
{
    for (i64 m = 1; m <= 60; m++)
        for (i64 n = 1; n <= 60; n++)
            require(cyclo_resultant(m, n) == resultant(cyclotomic(m), cyclotomic(n)),
                    "mismatch at (" + std::to_string(m) + "," + std::to_string(n) + ")");
}

void c2_discriminants()
{
    for (i64 m = 1; m <= 60; m++)
        require(cyclo_discriminant(m) == abs(discriminant(cyclotomic(m))),
                "mismatch at m = " + std::to_string(m));
}

void c3_lambda_counts()
{
    for (i64 m = 2; m <= 30; m++)
        for (i64 n = 2; n <= 30; n++) {
            // histogram of the orders of e(a/m - b/n) over primitive pairs
            std::map<i64, i64> hist;
            i64 g = m * n;
            for (i64 a = 1; a <= m; a++) {
                if (gcd_i64(a, m) != 1)
                    continue;
                for (i64 b = 1; b <= n; b++) {
                    if (gcd_i64(b, n) != 1)
                        continue;
                    i64 r = ((a * n - b * m) % g + g) % g;
                    hist[g / gcd_i64(r == 0 ? g : r, g)]++;
                }
            }
            for (i64 p : {2, 3, 5, 7})
                for (int k = 1; k <= 3; k++) {
                    i64 q = 1;
                    for (int i = 0; i < k; i++)
                        q *= p;
                    i64 found = hist.count(q) ? hist[q] : 0;
                    require(found == lambda_count(m, n, p, k) * euler_phi(q),
                            "mismatch at (" + std::to_string(m) + "," + std::to_string(n) +
                                "), p = " + std::to_string(p) + ", k = " + std::to_string(k));
                }
        }
}

void c4_local_tables()
{
    const BlockSet m{3}, n{2, 3}, n2{1, 2, 3};
    const i64 ls[3] = {1, 3, 6};

    require(chi_of(m, n).first == BlockSet{1, 3, 6}, "support of the first pair");

    auto check_row = [&](const char* what, const std::function<i64(i64)>& f, const i64 want[3]) {
        for (int i = 0; i < 3; i++)
            require(f(ls[i]) == want[i], std::string(what) + " at l = " + std::to_string(ls[i]));
    };

    const i64 d32[3] = {0, 0, 1}, d33[3] = {2, 1, 0}, d31[3] = {0, 1, 0};
    check_row("delta(3,2,.)", [](i64 l) { return delta(3, 2, l); }, d32);
    check_row("delta(3,3,.)", [](i64 l) { return delta(3, 3, l); }, d33);
    check_row("delta(3,1,.)", [](i64 l) { return delta(3, 1, l); }, d31);

    const i64 a231[3] = {0, 0, 1}, a233[3] = {2, 1, 0}, a312[3] = {0, 0, 1}, a311[3] = {2, 1, 0};
    check_row("first pair chi_local(2;3,1)",
              [&](i64 l) { return chi_local(m, n, 2, 3, 1, l); }, a231);
    check_row("first pair chi_local(2;3,3)",
              [&](i64 l) { return chi_local(m, n, 2, 3, 3, l); }, a233);
    check_row("first pair chi_local(3;1,2)",
              [&](i64 l) { return chi_local(m, n, 3, 1, 2, l); }, a312);
    check_row("first pair chi_local(3;1,1)",
              [&](i64 l) { return chi_local(m, n, 3, 1, 1, l); }, a311);

    CheckResult r = is_sdiob_tensor(m, n);
    require(!r.sufficient, "first pair must fail the tensor criterion");
    require(r.witness.has_value() && *r.witness == PEdge{2, 6, 3},
            "witness must be the 2-edge (6,3)");

    const i64 b231[3] = {0, 1, 1}, b233[3] = {2, 1, 0}, b312[3] = {0, 0, 1}, b311[3] = {2, 2, 0};
    check_row("extended pair chi_local(2;3,1)",
              [&](i64 l) { return chi_local(m, n2, 2, 3, 1, l); }, b231);
    check_row("extended pair chi_local(2;3,3)",
              [&](i64 l) { return chi_local(m, n2, 2, 3, 3, l); }, b233);
    check_row("extended pair chi_local(3;1,2)",
              [&](i64 l) { return chi_local(m, n2, 3, 1, 2, l); }, b312);
    check_row("extended pair chi_local(3;1,1)",
              [&](i64 l) { return chi_local(m, n2, 3, 1, 1, l); }, b311);

    require(is_sdiob_tensor(m, n2).sufficient, "extended pair must pass the tensor criterion");
}

void c5_tensor_determinants()
{
    TensorBasisResult fixed = tensor_basis_check({3}, {2, 3}, 24);
    require(abs(fixed.det) == 4 && fixed.predicted == 4, "fixed pair determinant");

    auto run_pair = [&](const BlockSet& m, const BlockSet& n) {
        TensorBasisResult r = tensor_basis_check(m, n, 24);
        require(abs(r.det) == edge_exponent_product(m, n),
                "determinant mismatch at ({" + set_str(m) + "},{" + set_str(n) + "})");
    };

    // exhaustive over the subsets of {1..6} that fit the rank cap
    std::vector<BlockSet> subsets;
    std::vector<i64> ranks;
    for (int mask = 1; mask < 64; mask++) {
        BlockSet s;
        i64 rk = 0;
        for (i64 v = 1; v <= 6; v++)
            if (mask & (1 << (v - 1))) {
                s.push_back(v);
                rk += euler_phi(v);
            }
        subsets.push_back(s);
        ranks.push_back(rk);
    }
    i64 exhaustive = 0;
    for (size_t i = 0; i < subsets.size(); i++)
        for (size_t j = 0; j < subsets.size(); j++)
            if (ranks[i] * ranks[j] <= 24) {
                run_pair(subsets[i], subsets[j]);
                exhaustive++;
            }

    // random pairs with larger elements
    std::mt19937_64 gen(7);
    i64 done = 0;
    for (int attempt = 0; attempt < 40000 && done < 300; attempt++) {
        std::vector<i64> me, ne;
        for (i64 i = 0, k = 1 + static_cast<i64>(gen() % 3); i < k; i++)
            me.push_back(1 + static_cast<i64>(gen() % 20));
        for (i64 i = 0, k = 1 + static_cast<i64>(gen() % 3); i < k; i++)
            ne.push_back(1 + static_cast<i64>(gen() % 20));
        BlockSet m = make_block_set(me), n = make_block_set(ne);
        i64 rm = 0, rn = 0;
        for (i64 x : m)
            rm += euler_phi(x);
        for (i64 x : n)
            rn += euler_phi(x);
        if (rm * rn > 24)
            continue;
        run_pair(m, n);
        done++;
    }
    require(exhaustive >= 500, "exhaustive sweep too small");
    require(done == 300, "random sweep did not reach its quota");
}

void c6_chain_pipeline()
{
    i64 instances = 0, dets = 0;
    std::vector<i64> a;
    std::function<void(i64)> go = [&](i64 bn) {
        if (!a.empty()) {
            ChainData cd = chain_data(a);
            instances++;
            i64 phisum = 0;
            for (i64 m : cd.m_set)
                phisum += euler_phi(m);
            require(phisum == cd.mu, "rank sum mismatch at " + set_str(a));
            for (i64 mt = 1; mt <= 12; mt++)
                require(is_sdiob_power(cd.m_set, mt).sufficient,
                        "power criterion failed at " + set_str(a));
            if (cd.mu <= 24) {
                PowerBasisResult pb = power_basis_check(cd.m_set, cd.mu, 24);
                require(pb.det == 1 || pb.det == -1,
                        "power determinant not a unit at " + set_str(a));
                dets++;
            }
        }
        if (a.size() >= 4)
            return;
        for (i64 next = 1;; next++) {
            i64 nb = a.empty() ? next + 1 : bn * next;
            if (nb > 200)
                break;
            a.push_back(next);
            go(nb);
            a.pop_back();
        }
    };
    go(1);
    require(instances >= 400, "chain enumeration too small");
    require(dets >= 50, "too few determinant instances");
}

void c7_cycle_crosscheck()
{
    i64 instances = 0;
    std::vector<i64> a;
    std::function<void(int, i64)> go = [&](int len, i64 prod) {
        if (static_cast<int>(a.size()) == len) {
            CycleData cd;
            try {
                cd = cycle_data(a);
            } catch (const ArgumentError&) {
                return;
            }
            instances++;
            require(cd.chi == to_exponent(milnor_orlik_divisor(cd.weights)),
                    "exponent maps disagree at " + set_str(a));
            return;
        }
        for (i64 next = 1; prod * next <= 200; next++) {
            a.push_back(next);
            go(len, prod * next);
            a.pop_back();
        }
    };
    for (int len = 2; len <= 6; len++)
        go(len, 1);
    require(instances >= 300, "cycle enumeration too small");
}

void c8_orders_of_sums(const std::vector<SuiteEntry>& suite)
{
    require(suite.size() == 200, "suite generation fell short");
    for (const SuiteEntry& it : suite) {
        ExponentMap chi = char_exponent(*it.e);
        StandardDecomposition d = decompose(*it.e);
        require(is_map_compatible(chi, d.orders),
                "incompatible orders for " + to_string(*it.e));
        OrderTuple literal = canonical_orders(weights_of(*it.e), support_of_map(chi));
        for (auto& [p, o] : literal) {
            auto found = d.orders.find(p);
            require(found != d.orders.end() && same_order_mod_zero(o, found->second),
                    "order rule failed at prime " + std::to_string(p) + " for " +
                        to_string(*it.e));
        }
    }
}

void c9_certification(const std::vector<SuiteEntry>& suite)
{
    i64 certified = 0;
    for (const SuiteEntry& it : suite) {
        if (it.mu > 16)
            continue;
        Certificate cert = certify(*it.e, 16);
        require(verify_conjugation(cert.monodromy, cert.conj),
                "conjugation failed for " + to_string(*it.e));
        StandardDecomposition d = decompose(*it.e);
        require(cert.covering == d.covering, "covering mismatch for " + to_string(*it.e));
        require(cert.conj.blocks.size() == d.polynomials.size(),
                "block count mismatch for " + to_string(*it.e));
        for (size_t j = 0; j < d.polynomials.size(); j++)
            require(cert.conj.blocks[j] == d.polynomials[j],
                    "block polynomial mismatch for " + to_string(*it.e));
        certified++;
    }
    require(certified >= 10, "too few instances under the rank cap");
}

void c10_link_homology(const std::vector<SuiteEntry>& suite)
{
    ExprPtr spheres = sum_expr(sum_expr(chain_expr({1}), chain_expr({1})), chain_expr({1}));
    LinkHomology lh = link_homology(*spheres);
    require(lh.l == 0 && lh.torsion.size() == 1 && lh.torsion[0] == 2,
            "triple join must give rank 0 and one summand of order 2");

    i64 checked = 0;
    for (const SuiteEntry& it : suite) {
        if (variable_count(*it.e) < 3)
            continue;
        LinkHomology h = link_homology(*it.e);
        ExponentMap chi = char_exponent(*it.e);
        auto at1 = chi.find(1);
        require(h.l == (at1 == chi.end() ? 0 : at1->second),
                "rank disagrees with the unit-root multiplicity for " + to_string(*it.e));
        checked++;
    }
    require(checked >= 30, "too few instances with three or more variables");
}

void c11_covering_enumeration()
{
    ExponentMap chi{{1, 2}, {2, 1}, {3, 1}};
    OrderTuple t;
    t[2] = ExcellentOrder{1, {}};
    t[3] = ExcellentOrder{1, {}};
    auto covs = enumerate_compatible_coverings(chi, t);
    require(covs.size() == 2, "expected exactly two coverings");
    Covering split{{1, 2}, {1, 3}}, joined{{1, 2, 3}, {1}};
    require(std::find(covs.begin(), covs.end(), split) != covs.end(), "missing split covering");
    require(std::find(covs.begin(), covs.end(), joined) != covs.end(), "missing nested covering");

    ExponentMap chi2 = chi;
    chi2[6] = 1;
    auto covs2 = enumerate_compatible_coverings(chi2, t);
    require(covs2.size() == 1, "extended map must admit exactly one covering");
    require(covs2[0] == Covering{{1, 2, 3, 6}, {1}}, "wrong unique covering");

    // one exchange carries the split covering into the nested one
    IntPolynomial one = IntPolynomial::constant(1);
    Conjugation conj = split_sum_exchange(one, cyclotomic(3), cyclotomic(1), cyclotomic(2));
    IntMatrix h = block_companion({cyclotomic(1) * cyclotomic(2), cyclotomic(1) * cyclotomic(3)});
    require(verify_conjugation(h, conj), "exchange conjugation failed");
    require(conj.blocks.size() == 2 &&
                conj.blocks[0] == cyclotomic(1) * cyclotomic(2) * cyclotomic(3) &&
                conj.blocks[1] == cyclotomic(1),
            "exchange produced the wrong blocks");
}

} // namespace

int main()
{
    std::vector<SuiteEntry> suite;
    try {
        suite = build_suite(200, 10000);
    } catch (const std::exception& e) {
        std::printf("suite generation failed: %s\n", e.what());
    }

    criterion(1, "cyclotomic resultant closed form vs Sylvester determinant, m,n <= 60",
              c1_resultants);
    criterion(2, "cyclotomic discriminant closed form vs Sylvester value, m <= 60",
              c2_discriminants);
    criterion(3, "unit-root difference counts vs exhaustive enumeration", c3_lambda_counts);
    criterion(4, "local multiplicity tables and tensor verdicts of two reference pairs",
              c4_local_tables);
    criterion(5, "tensor basis determinant equals the edge exponent product",
              c5_tensor_determinants);
    criterion(6, "chain pipeline: ranks, power criterion, unit determinants",
              c6_chain_pipeline);
    criterion(7, "cycle exponent maps match the weight expansion, mu <= 200",
              c7_cycle_crosscheck);
    criterion(8, "canonical orders of 200 generated sums are compatible",
              [&] { c8_orders_of_sums(suite); });
    criterion(9, "end-to-end certified decompositions at rank <= 16",
              [&] { c9_certification(suite); });
    criterion(10, "link homology: fixed case and unit-root rank on the suite",
              [&] { c10_link_homology(suite); });
    criterion(11, "covering enumeration and the connecting exchange", c11_covering_enumeration);

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
