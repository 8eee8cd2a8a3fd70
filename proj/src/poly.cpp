#include "orlik/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace orlik {

namespace {

void trim(std::vector<mpz_class>& c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(c); }

IntPolynomial IntPolynomial::constant(const mpz_class& v)
{
    IntPolynomial p;
    if (v != 0)
        p.c.push_back(v);
    return p;
}

IntPolynomial IntPolynomial::monomial(int k, const mpz_class& coeff)
{
    if (k < 0)
        throw ArgumentError("monomial: negative degree");
    IntPolynomial p;
    if (coeff != 0) {
        p.c.assign(static_cast<size_t>(k) + 1, mpz_class(0));
        p.c.back() = coeff;
    }
    return p;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c == b.c; }

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<mpz_class> c(std::max(a.c.size(), b.c.size()), mpz_class(0));
    for (size_t i = 0; i < a.c.size(); i++)
        c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); i++)
        c[i] += b.c[i];
    trim(c);
    IntPolynomial p;
    p.c = std::move(c);
    return p;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<mpz_class> c(std::max(a.c.size(), b.c.size()), mpz_class(0));
    for (size_t i = 0; i < a.c.size(); i++)
        c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); i++)
        c[i] -= b.c[i];
    trim(c);
    IntPolynomial p;
    p.c = std::move(c);
    return p;
}

IntPolynomial operator-(const IntPolynomial& a)
{
    IntPolynomial p = a;
    for (auto& x : p.c)
        x = -x;
    return p;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return IntPolynomial();
    std::vector<mpz_class> c(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0)
            continue;
        for (size_t j = 0; j < b.c.size(); j++)
            c[i + j] += a.c[i] * b.c[j];
    }
    IntPolynomial p;
    p.c = std::move(c);
    return p;
}

IntPolynomial divexact(const IntPolynomial& num, const IntPolynomial& den)
{
    if (!den.is_unitary())
        throw ArgumentError("divexact: divisor must be unitary");
    if (num.is_zero())
        return IntPolynomial();
    int dn = num.degree(), dd = den.degree();
    if (dn < dd)
        throw ArgumentError("divexact: division not exact");
    std::vector<mpz_class> r = num.c;
    std::vector<mpz_class> q(static_cast<size_t>(dn - dd) + 1, mpz_class(0));
    for (int k = dn - dd; k >= 0; k--) {
        mpz_class coef = r[static_cast<size_t>(k + dd)];
        q[static_cast<size_t>(k)] = coef;
        if (coef == 0)
            continue;
        for (int i = 0; i <= dd; i++)
            r[static_cast<size_t>(k + i)] -= coef * den.c[static_cast<size_t>(i)];
    }
    for (auto& x : r)
        if (x != 0)
            throw ArgumentError("divexact: division not exact");
    IntPolynomial p;
    p.c = std::move(q);
    trim(p.c);
    return p;
}

bool divides(const IntPolynomial& den, const IntPolynomial& num)
{
    if (!den.is_unitary())
        throw ArgumentError("divides: divisor must be unitary");
    if (num.is_zero())
        return true;
    int dn = num.degree(), dd = den.degree();
    if (dn < dd)
        return false;
    std::vector<mpz_class> r = num.c;
    for (int k = dn - dd; k >= 0; k--) {
        mpz_class coef = r[static_cast<size_t>(k + dd)];
        if (coef == 0)
            continue;
        for (int i = 0; i <= dd; i++)
            r[static_cast<size_t>(k + i)] -= coef * den.c[static_cast<size_t>(i)];
    }
    for (const auto& x : r)
        if (x != 0)
            return false;
    return true;
}

IntPolynomial derivative(const IntPolynomial& f)
{
    IntPolynomial p;
    for (size_t i = 1; i < f.c.size(); i++)
        p.c.push_back(mpz_class(i) * f.c[i]);
    trim(p.c);
    return p;
}

mpz_class eval(const IntPolynomial& f, const mpz_class& x)
{
    mpz_class v = 0;
    for (size_t i = f.c.size(); i-- > 0;)
        v = v * x + f.c[i];
    return v;
}

IntMatrix apply_poly(const IntPolynomial& f, const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw ArgumentError("apply_poly: matrix not square");
    int n = m.rows();
    IntMatrix r(n, n);
    for (size_t i = f.c.size(); i-- > 0;) {
        r = r * m;
        if (f.c[i] != 0)
            for (int d = 0; d < n; d++)
                r.at(d, d) += f.c[i];
    }
    return r;
}

std::string to_string(const IntPolynomial& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = f.degree(); i >= 0; i--) {
        const mpz_class& a = f.c[static_cast<size_t>(i)];
        if (a == 0)
            continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0)
                out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1)
            out << mag.get_str();
        if (i >= 1)
            out << "t";
        if (i >= 2)
            out << "^" << i;
    }
    return out.str();
}

IntPolynomial cyclotomic(i64 m)
{
    if (m < 1)
        throw ArgumentError("cyclotomic: m must be positive");
    static std::mutex mx;
    static std::map<i64, IntPolynomial> memo;
    std::lock_guard<std::mutex> lock(mx);
    auto it = memo.find(m);
    if (it != memo.end())
        return it->second;
    for (i64 d : divisors(m)) {
        if (memo.count(d))
            continue;
        std::vector<mpz_class> c(static_cast<size_t>(d) + 1, mpz_class(0));
        c[0] = -1;
        c[static_cast<size_t>(d)] = 1;
        IntPolynomial q;
        q.c = std::move(c);
        for (i64 e : divisors(d))
            if (e < d)
                q = divexact(q, memo.at(e));
        memo.emplace(d, std::move(q));
    }
    return memo.at(m);
}

IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g)
{
    if (f.is_zero() || g.is_zero())
        throw ArgumentError("sylvester_matrix: zero polynomial");
    int m = f.degree(), n = g.degree();
    IntMatrix a(m + n, m + n);
    for (int j = 0; j < n; j++)
        for (int i = 0; i <= m; i++)
            a.at(i + j, j) = f.c[static_cast<size_t>(i)];
    for (int j = 0; j < m; j++)
        for (int i = 0; i <= n; i++)
            a.at(i + j, n + j) = g.c[static_cast<size_t>(i)];
    return a;
}

mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g)
{
    if (f.is_zero() || g.is_zero())
        throw ArgumentError("resultant: zero polynomial");
    // the ascending column layout differs from the root-product value
    // by the sign (-1)^{deg f * deg g}
    mpz_class d = det(sylvester_matrix(f, g));
    return (f.degree() * g.degree()) % 2 ? mpz_class(-d) : d;
}

mpz_class discriminant(const IntPolynomial& f)
{
    if (f.degree() < 1)
        throw ArgumentError("discriminant: degree must be at least 1");
    return resultant(f, derivative(f));
}

mpz_class cyclo_resultant(i64 m, i64 n)
{
    if (m < 1 || n < 1)
        throw ArgumentError("cyclo_resultant: arguments must be positive");
    if (m == n)
        return 0;
    if (m + n == 3)
        return m == 1 ? 2 : -2;
    mpz_class r;
    if (auto [p, k] = prime_power_ratio(m, n); p != 0) {
        mpz_pow_ui(r.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t(), static_cast<unsigned long>(euler_phi(n)));
        return r;
    }
    if (auto [p, k] = prime_power_ratio(n, m); p != 0) {
        mpz_pow_ui(r.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t(), static_cast<unsigned long>(euler_phi(m)));
        return r;
    }
    return 1;
}

mpz_class cyclo_discriminant(i64 m)
{
    if (m < 1)
        throw ArgumentError("cyclo_discriminant: m must be positive");
    i64 phi = euler_phi(m);
    mpz_class r = 1;
    for (auto& [p, k] : factorize(m)) {
        // (v_p(m) - 1/(p-1)) * phi(m); integral since (p-1) | phi(m)
        i64 e = k * phi - phi / (p - 1);
        mpz_class pp;
        mpz_pow_ui(pp.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t(), static_cast<unsigned long>(e));
        r *= pp;
    }
    return r;
}

i64 cyclo_at_one(i64 m)
{
    if (m < 1)
        throw ArgumentError("cyclo_at_one: m must be positive");
    if (m == 1)
        return 0;
    auto f = factorize(m);
    return f.size() == 1 ? f[0].first : 1;
}

i64 lambda_count(i64 m, i64 n, i64 p, int k)
{
    if (m < 2 || n < 2)
        throw ArgumentError("lambda_count: m and n must be at least 2");
    if (!is_prime(p))
        throw ArgumentError("lambda_count: p must be prime");
    if (k < 1)
        throw ArgumentError("lambda_count: k must be positive");
    if (m == n) {
        int v = valuation(p, m);
        if (v < k)
            return 0;
        i64 phi = euler_phi(m);
        return v == k ? phi / (p - 1) * (p - 2) : phi;
    }
    i64 big = std::max(m, n), small = std::min(m, n);
    auto [q, l] = prime_power_ratio(big, small);
    if (q == 0)
        return 0;
    return (p == q && k == valuation(p, big)) ? euler_phi(small) : 0;
}

} // namespace orlik
