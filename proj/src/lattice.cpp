#include "orlik/lattice.hpp"

#include "orlik/errors.hpp"
#include "orlik/sdiob.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>

namespace orlik {

namespace {

IntPolynomial phi_product(const BlockSet& s)
{
    IntPolynomial p = IntPolynomial::constant(1);
    for (i64 m : s)
        p = p * cyclotomic(m);
    return p;
}

i64 block_rank(const BlockSet& s)
{
    i64 r = 0;
    for (i64 m : s)
        r += euler_phi(m);
    return r;
}

std::vector<mpz_class> unit_vector(int n, int k)
{
    std::vector<mpz_class> e(static_cast<size_t>(n), mpz_class(0));
    if (n > 0)
        e[static_cast<size_t>(k)] = 1;
    return e;
}

bool contains_all(const BlockSet& big, const BlockSet& small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

BlockSet bs_union(const BlockSet& a, const BlockSet& b)
{
    BlockSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

BlockSet bs_inter(const BlockSet& a, const BlockSet& b)
{
    BlockSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

BlockSet bs_diff(const BlockSet& a, const BlockSet& b)
{
    BlockSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

mpz_class pow_i64(i64 base, i64 exp)
{
    mpz_class b(static_cast<long>(base)), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

} // namespace

LatticeWithEndo companion_block(const IntPolynomial& p)
{
    return LatticeWithEndo{companion_matrix(p), p};
}

LatticeWithEndo direct_sum(const LatticeWithEndo& a, const LatticeWithEndo& b)
{
    int n = a.rank() + b.rank();
    IntMatrix h(n, n);
    for (int i = 0; i < a.rank(); i++)
        for (int j = 0; j < a.rank(); j++)
            h.at(i, j) = a.h.at(i, j);
    for (int i = 0; i < b.rank(); i++)
        for (int j = 0; j < b.rank(); j++)
            h.at(a.rank() + i, a.rank() + j) = b.h.at(i, j);
    LatticeWithEndo out{h, std::nullopt};
    if (a.char_poly && b.char_poly)
        out.char_poly = *a.char_poly * *b.char_poly;
    return out;
}

LatticeWithEndo tensor_product(const LatticeWithEndo& a, const LatticeWithEndo& b)
{
    return LatticeWithEndo{kronecker(a.h, b.h), std::nullopt};
}

IntMatrix companion_matrix(const IntPolynomial& p)
{
    if (!p.is_unitary() || p.degree() < 1)
        throw ArgumentError("companion_matrix: polynomial must be unitary of degree >= 1");
    int n = p.degree();
    IntMatrix m(n, n);
    for (int i = 1; i < n; i++)
        m.at(i, i - 1) = 1;
    for (int i = 0; i < n; i++)
        m.at(i, n - 1) = -p.c[static_cast<size_t>(i)];
    return m;
}

IntMatrix block_companion(const std::vector<IntPolynomial>& ps)
{
    int n = 0;
    for (const auto& p : ps) {
        if (!p.is_unitary())
            throw ArgumentError("block_companion: factors must be unitary");
        n += p.degree();
    }
    IntMatrix m(n, n);
    int off = 0;
    for (const auto& p : ps) {
        int d = p.degree();
        if (d == 0)
            continue;
        IntMatrix c = companion_matrix(p);
        for (int i = 0; i < d; i++)
            for (int j = 0; j < d; j++)
                m.at(off + i, off + j) = c.at(i, j);
        off += d;
    }
    return m;
}

bool verify_conjugation(const IntMatrix& h, const Conjugation& c)
{
    if (h.rows() != h.cols() || c.basis.rows() != h.rows() || c.basis.cols() != h.rows())
        return false;
    mpz_class d = det(c.basis);
    if (d != 1 && d != -1)
        return false;
    return h * c.basis == c.basis * block_companion(c.blocks);
}

mpz_class resultant_index(const IntPolynomial& f, const IntPolynomial& g)
{
    mpz_class r = resultant(f, g);
    if (r == 0)
        throw ArgumentError("resultant_index: resultant is zero");
    IntMatrix s = sylvester_matrix(f, g);
    SmithForm sf = smith_normal_form(s);
    mpz_class idx = 1;
    for (int i = 0; i < std::min(s.rows(), s.cols()); i++)
        idx *= sf.d.at(i, i);
    idx = abs(idx);
    if (idx != abs(r))
        throw ConsistencyError("resultant_index: lattice index disagrees with the resultant");
    return idx;
}

std::pair<IntPolynomial, IntPolynomial> bezout_unimodular(const IntPolynomial& f,
                                                          const IntPolynomial& g)
{
    if (!f.is_unitary() || !g.is_unitary())
        throw ArgumentError("bezout_unimodular: polynomials must be unitary");
    mpz_class r = resultant(f, g);
    if (r != 1 && r != -1)
        throw ArgumentError("bezout_unimodular: resultant is not a unit");
    int m = f.degree(), n = g.degree();
    if (m == 0)
        return {IntPolynomial::constant(1), IntPolynomial()};
    if (n == 0)
        return {IntPolynomial(), IntPolynomial::constant(1)};
    IntMatrix s = sylvester_matrix(f, g);
    std::vector<mpz_class> one(static_cast<size_t>(m + n), mpz_class(0));
    one[0] = 1;
    auto x = solve(s, one);
    if (!x)
        throw ConsistencyError("bezout_unimodular: unimodular system has no integral solution");
    std::vector<mpz_class> uc(x->begin(), x->begin() + n);
    std::vector<mpz_class> vc(x->begin() + n, x->end());
    return {IntPolynomial(std::move(uc)), IntPolynomial(std::move(vc))};
}

PowerBasisResult power_basis_check(const BlockSet& m_set, i64 mu, int max_rank)
{
    if (m_set.empty())
        throw ArgumentError("power_basis_check: empty block set");
    if (mu < 1)
        throw ArgumentError("power_basis_check: power must be positive");
    i64 rk = block_rank(m_set);
    if (rk > max_rank)
        throw LimitError("power_basis_check: rank exceeds the configured bound");
    int n = static_cast<int>(rk);

    // elementary divisors of the mu-th power, from the weighted fiber sizes
    std::map<i64, i64> mult;
    for (i64 m : m_set) {
        i64 im = gamma_mu(mu, m);
        if (!mult.count(im))
            mult[im] = power_multiplicity(m_set, mu, im);
    }
    i64 top = 0;
    for (const auto& [im, k] : mult)
        top = std::max(top, k);
    std::vector<IntPolynomial> divisors;
    int degsum = 0;
    for (i64 j = 1; j <= top; j++) {
        IntPolynomial p = IntPolynomial::constant(1);
        for (const auto& [im, k] : mult)
            if (k >= j)
                p = p * cyclotomic(im);
        degsum += p.degree();
        divisors.push_back(std::move(p));
    }
    if (degsum != n)
        throw ConsistencyError("power_basis_check: divisor degrees do not sum to the rank");

    IntMatrix h = companion_matrix(phi_product(m_set));
    i64 order = 1;
    for (i64 m : m_set)
        order = lcm_i64(order, m);

    // iterates of the first basis vector, indexed modulo the order of h
    std::vector<std::vector<mpz_class>> pw;
    pw.push_back(unit_vector(n, 0));
    auto power_col = [&](i64 s) -> const std::vector<mpz_class>& {
        s %= order;
        while (static_cast<i64>(pw.size()) <= s)
            pw.push_back(h * pw.back());
        return pw[static_cast<size_t>(s)];
    };

    IntMatrix basis(n, n);
    int col = 0;
    for (size_t j = 0; j < divisors.size(); j++)
        for (int i = 0; i < divisors[j].degree(); i++)
            basis.set_col(col++, power_col(static_cast<i64>(j) + mu * i));
    return PowerBasisResult{det(basis), std::move(basis), std::move(divisors)};
}

TensorBasisResult tensor_basis_check(const BlockSet& m_set, const BlockSet& n_set, int max_rank)
{
    if (m_set.empty() || n_set.empty())
        throw ArgumentError("tensor_basis_check: empty block set");
    i64 rg = block_rank(m_set), rh = block_rank(n_set);
    if (rg * rh > max_rank)
        throw LimitError("tensor_basis_check: rank product exceeds the configured bound");
    int n = static_cast<int>(rg * rh);

    auto [support, chi] = chi_of(m_set, n_set);
    i64 chi0 = 0;
    for (const auto& [l, k] : chi)
        chi0 = std::max(chi0, k);
    std::vector<IntPolynomial> divisors;
    int degsum = 0;
    for (i64 j = 1; j <= chi0; j++) {
        IntPolynomial p = IntPolynomial::constant(1);
        for (const auto& [l, k] : chi)
            if (k >= j)
                p = p * cyclotomic(l);
        degsum += p.degree();
        divisors.push_back(std::move(p));
    }
    if (degsum != n)
        throw ConsistencyError("tensor_basis_check: divisor degrees do not sum to the rank");

    IntMatrix g = companion_matrix(phi_product(m_set));
    IntMatrix h = companion_matrix(phi_product(n_set));
    int need_g = static_cast<int>(chi0) - 1 + divisors[0].degree();
    int need_h = divisors[0].degree();
    std::vector<std::vector<mpz_class>> gp, hp;
    gp.push_back(unit_vector(static_cast<int>(rg), 0));
    while (static_cast<int>(gp.size()) < need_g)
        gp.push_back(g * gp.back());
    hp.push_back(unit_vector(static_cast<int>(rh), 0));
    while (static_cast<int>(hp.size()) < need_h)
        hp.push_back(h * hp.back());

    // column for step k of block i is the tensor of the (i+k)-th iterate on
    // the left factor with the k-th iterate on the right factor
    IntMatrix basis(n, n);
    int col = 0;
    for (size_t i = 0; i < divisors.size(); i++)
        for (int k = 0; k < divisors[i].degree(); k++) {
            const auto& u = gp[i + static_cast<size_t>(k)];
            const auto& w = hp[static_cast<size_t>(k)];
            for (i64 a = 0; a < rg; a++)
                for (i64 b = 0; b < rh; b++)
                    basis.at(static_cast<int>(a * rh + b), col) =
                        u[static_cast<size_t>(a)] * w[static_cast<size_t>(b)];
            col++;
        }

    mpz_class d = det(basis);
    mpz_class predicted = 1;
    for (const PEdge& e : p_edges(support)) {
        XiValue x = xi(m_set, n_set, e.p, e.from, e.to);
        predicted *= pow_i64(e.p, euler_phi(e.to) * x.xi);
    }
    if (abs(d) != predicted)
        throw ConsistencyError("tensor_basis_check: determinant disagrees with its prediction");
    return TensorBasisResult{std::move(d), std::move(predicted), std::move(basis),
                             std::move(divisors)};
}

Conjugation complete_decomposition(const IntMatrix& h, const std::vector<IntPolynomial>& divisors,
                                   const IntMatrix& seeds)
{
    int n = h.rows();
    if (h.cols() != n)
        throw ArgumentError("complete_decomposition: endomorphism matrix must be square");
    if (divisors.empty())
        throw ArgumentError("complete_decomposition: no divisors");
    int degsum = 0;
    for (size_t j = 0; j < divisors.size(); j++) {
        if (!divisors[j].is_unitary() || divisors[j].degree() < 1)
            throw ArgumentError("complete_decomposition: divisors must be unitary of degree >= 1");
        if (j + 1 < divisors.size() && !divides(divisors[j + 1], divisors[j]))
            throw ArgumentError("complete_decomposition: divisors must form a divisibility chain");
        degsum += divisors[j].degree();
    }
    if (degsum != n)
        throw ArgumentError("complete_decomposition: divisor degrees do not sum to the rank");
    if (seeds.rows() != n || seeds.cols() != static_cast<int>(divisors.size()))
        throw ArgumentError("complete_decomposition: one seed column per divisor is required");
    if (!apply_poly(divisors[0], h).is_zero())
        throw ArgumentError("complete_decomposition: first divisor does not annihilate the lattice");

    IntMatrix tuple(n, n);
    int col = 0;
    for (size_t j = 0; j < divisors.size(); j++) {
        std::vector<mpz_class> c = seeds.col(static_cast<int>(j));
        for (int i = 0; i < divisors[j].degree(); i++) {
            tuple.set_col(col++, c);
            c = h * c;
        }
    }
    mpz_class dt = det(tuple);
    if (dt != 1 && dt != -1)
        throw ArgumentError("complete_decomposition: seed tuple is not a basis");

    // the first block needs no correction; each later generator is adjusted
    // inside the span of the blocks already built
    IntMatrix u(n, n);
    col = 0;
    for (size_t j = 0; j < divisors.size(); j++) {
        std::vector<mpz_class> c = seeds.col(static_cast<int>(j));
        if (j > 0) {
            IntMatrix span(n, col);
            for (int t = 0; t < col; t++)
                span.set_col(t, u.col(t));
            IntMatrix pj = apply_poly(divisors[j], h);
            IntMatrix sys = pj * span;
            std::vector<mpz_class> rhs = pj * c;
            for (auto& v : rhs)
                v = -v;
            auto x = solve(sys, rhs);
            if (!x)
                throw ConsistencyError(
                    "complete_decomposition: no integral correction in the earlier blocks");
            std::vector<mpz_class> corr = span * *x;
            for (int i = 0; i < n; i++)
                c[static_cast<size_t>(i)] += corr[static_cast<size_t>(i)];
        }
        for (int i = 0; i < divisors[j].degree(); i++) {
            u.set_col(col++, c);
            c = h * c;
        }
    }
    Conjugation out{std::move(u), divisors};
    if (!verify_conjugation(h, out))
        throw ConsistencyError("complete_decomposition: completed tuple fails verification");
    return out;
}

Conjugation split_sum_exchange(const IntPolynomial& f1, const IntPolynomial& f2,
                               const IntPolynomial& f3, const IntPolynomial& f4)
{
    const IntPolynomial* fs[4] = {&f1, &f2, &f3, &f4};
    for (const auto* f : fs)
        if (!f->is_unitary())
            throw ArgumentError("split_sum_exchange: factors must be unitary");
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++)
            if (resultant(*fs[i], *fs[j]) == 0)
                throw ArgumentError("split_sum_exchange: factors share a root");
    if (abs(resultant(f1, f4)) != 1 || abs(resultant(f2, f4)) != 1)
        throw ArgumentError("split_sum_exchange: unit resultants against the fourth factor required");

    IntPolynomial q1 = f1 * f3 * f4, q2 = f2 * f3;
    IntPolynomial t1 = f2 * f3 * f4, t2 = f1 * f3;
    int d1 = q1.degree(), d2 = q2.degree(), n = d1 + d2;
    IntMatrix h = block_companion({q1, q2});
    IntMatrix h1 = d1 > 0 ? companion_matrix(q1) : IntMatrix(0, 0);
    IntMatrix h2 = d2 > 0 ? companion_matrix(q2) : IntMatrix(0, 0);

    auto [bu, bv] = bezout_unimodular(f1 * f2, f4);
    IntPolynomial g1 = bu, g4 = -bv;

    auto assemble = [&](const IntPolynomial& top, const IntPolynomial& bottom) {
        std::vector<mpz_class> v(static_cast<size_t>(n), mpz_class(0));
        if (d1 > 0 && !top.is_zero()) {
            std::vector<mpz_class> t = apply_poly(top, h1) * unit_vector(d1, 0);
            for (int i = 0; i < d1; i++)
                v[static_cast<size_t>(i)] = t[static_cast<size_t>(i)];
        }
        if (d2 > 0 && !bottom.is_zero()) {
            std::vector<mpz_class> b = apply_poly(bottom, h2) * unit_vector(d2, 0);
            for (int i = 0; i < d2; i++)
                v[static_cast<size_t>(d1 + i)] = b[static_cast<size_t>(i)];
        }
        return v;
    };
    std::vector<mpz_class> b1 = assemble(g1 * f1, IntPolynomial::constant(1));
    std::vector<mpz_class> b2 = assemble(g4 * f4, f2);

    IntMatrix u(n, n);
    int col = 0;
    std::vector<mpz_class> c = b1;
    for (int i = 0; i < t1.degree(); i++) {
        u.set_col(col++, c);
        c = h * c;
    }
    c = b2;
    for (int i = 0; i < t2.degree(); i++) {
        u.set_col(col++, c);
        c = h * c;
    }
    Conjugation out{std::move(u), {t1, t2}};
    if (!verify_conjugation(h, out))
        throw ConsistencyError("split_sum_exchange: exchange tuple fails verification");
    return out;
}

bool primitive_part_check(const IntPolynomial& p1, const IntPolynomial& p2)
{
    if (!p1.is_unitary() || p1.degree() < 1 || !p2.is_unitary() || p2.degree() < 1)
        throw ArgumentError("primitive_part_check: factors must be unitary of degree >= 1");
    IntMatrix h = companion_matrix(p1 * p2);
    int n = h.rows();
    IntMatrix a1 = apply_poly(p1, h), a2 = apply_poly(p2, h);

    SmithForm s2 = smith_normal_form(a2);
    for (int i = 0; i < n; i++)
        if (s2.d.at(i, i) != 0 && s2.d.at(i, i) != 1)
            return false;

    SmithForm s1 = smith_normal_form(a1);
    std::vector<int> kcols;
    for (int i = 0; i < n; i++)
        if (s1.d.at(i, i) == 0)
            kcols.push_back(i);
    IntMatrix k(n, static_cast<int>(kcols.size()));
    for (size_t j = 0; j < kcols.size(); j++)
        for (int i = 0; i < n; i++)
            k.at(i, static_cast<int>(j)) = s1.v.at(i, kcols[j]);

    for (int j = 0; j < n; j++)
        if (!solve(k, a2.col(j)))
            return false;
    for (int j = 0; j < k.cols(); j++)
        if (!solve(a2, k.col(j)))
            return false;
    return true;
}

StandardizeResult standardize_block_sum(const std::vector<BlockSet>& blocks)
{
    if (blocks.empty())
        throw ArgumentError("standardize_block_sum: no blocks");
    std::vector<BlockSet> cur;
    for (const auto& b : blocks) {
        if (b.empty())
            throw ArgumentError("standardize_block_sum: empty block set");
        cur.push_back(make_block_set(b));
    }
    int n = 0;
    for (const auto& b : cur)
        n += static_cast<int>(block_rank(b));

    auto polys_of = [](const std::vector<BlockSet>& bs) {
        std::vector<IntPolynomial> ps;
        for (const auto& b : bs)
            ps.push_back(phi_product(b));
        return ps;
    };
    IntMatrix h0 = block_companion(polys_of(cur));
    IntMatrix u = IntMatrix::identity(n);

    auto offsets = [&]() {
        std::vector<int> off(cur.size() + 1, 0);
        for (size_t t = 0; t < cur.size(); t++)
            off[t + 1] = off[t] + static_cast<int>(block_rank(cur[t]));
        return off;
    };

    // reorder the summands; the base change is the corresponding permutation
    auto apply_order = [&](const std::vector<size_t>& order) {
        std::vector<int> off = offsets();
        IntMatrix p(n, n);
        int col = 0;
        for (size_t t : order)
            for (int r = 0; r < static_cast<int>(block_rank(cur[t])); r++)
                p.at(off[t] + r, col++) = 1;
        u = u * p;
        std::vector<BlockSet> next;
        for (size_t t : order)
            next.push_back(cur[t]);
        cur = std::move(next);
    };

    auto move_block = [&](size_t j, size_t q) {
        if (j == q)
            return;
        std::vector<size_t> order;
        for (size_t t = 0; t < q; t++)
            order.push_back(t);
        order.push_back(j);
        for (size_t t = q; t < cur.size(); t++)
            if (t != j)
                order.push_back(t);
        apply_order(order);
    };

    auto exchange_adjacent = [&](size_t q) {
        BlockSet a = cur[q], b = cur[q + 1];
        BlockSet inter = bs_inter(a, b), left = bs_diff(a, b), right = bs_diff(b, a);
        for (i64 ma : left)
            for (i64 mb : right)
                if (abs(cyclo_resultant(ma, mb)) != 1)
                    throw ArgumentError("standardize_block_sum: blocks do not admit an exchange");
        Conjugation w = split_sum_exchange(IntPolynomial::constant(1), phi_product(right),
                                           phi_product(inter), phi_product(left));
        std::vector<int> off = offsets();
        IntMatrix e = IntMatrix::identity(n);
        int base = off[q], span = off[q + 2] - off[q];
        for (int i = 0; i < span; i++)
            for (int j = 0; j < span; j++)
                e.at(base + i, base + j) = w.basis.at(i, j);
        u = u * e;
        cur[q] = bs_union(a, b);
        if (inter.empty())
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(q) + 1);
        else
            cur[q + 1] = inter;
    };

    // grow the block at each position until it swallows everything later;
    // every step strictly enlarges it, so the scan terminates
    for (size_t pos = 0; pos < cur.size(); pos++) {
        bool again = true;
        while (again) {
            again = false;
            for (size_t j = pos + 1; j < cur.size(); j++) {
                if (contains_all(cur[pos], cur[j]))
                    continue;
                move_block(j, pos + 1);
                if (contains_all(cur[pos + 1], cur[pos]))
                    move_block(pos + 1, pos);
                else
                    exchange_adjacent(pos);
                again = true;
                break;
            }
        }
    }

    Conjugation out{std::move(u), polys_of(cur)};
    if (!verify_conjugation(h0, out))
        throw ConsistencyError("standardize_block_sum: exchange chain fails verification");
    return StandardizeResult{std::move(out), std::move(cur)};
}

} // namespace orlik
