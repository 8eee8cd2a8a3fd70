#include "orlik/intmatrix.hpp"

#include <cstdlib>
#include <utility>

namespace orlik {

IntMatrix::IntMatrix(int rows, int cols) : r_(rows), c_(cols)
{
    if (rows < 0 || cols < 0)
        throw ArgumentError("IntMatrix: negative dimension");
    a_.assign(static_cast<size_t>(rows) * cols, mpz_class(0));
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; i++)
        m.at(i, i) = 1;
    return m;
}

std::vector<mpz_class> IntMatrix::col(int j) const
{
    std::vector<mpz_class> v(r_);
    for (int i = 0; i < r_; i++)
        v[i] = at(i, j);
    return v;
}

void IntMatrix::set_col(int j, const std::vector<mpz_class>& v)
{
    if (static_cast<int>(v.size()) != r_)
        throw ArgumentError("set_col: length mismatch");
    for (int i = 0; i < r_; i++)
        at(i, j) = v[i];
}

bool IntMatrix::is_zero() const
{
    for (auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

bool IntMatrix::is_identity() const
{
    if (r_ != c_)
        return false;
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < c_; j++)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

void IntMatrix::swap_rows(int i, int j)
{
    for (int k = 0; k < c_; k++)
        std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j)
{
    for (int k = 0; k < r_; k++)
        std::swap(at(k, i), at(k, j));
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++)
            if (a.at(i, j) != b.at(i, j))
                return false;
    return true;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ArgumentError("matrix sum: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++)
            c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ArgumentError("matrix difference: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++)
            c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw ArgumentError("matrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    mpz_class t;
    for (int i = 0; i < a.rows(); i++)
        for (int k = 0; k < a.cols(); k++) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols(); j++) {
                t = aik * b.at(k, j);
                c.at(i, j) += t;
            }
        }
    return c;
}

std::vector<mpz_class> operator*(const IntMatrix& a, const std::vector<mpz_class>& x)
{
    if (a.cols() != static_cast<int>(x.size()))
        throw ArgumentError("matrix-vector product: shape mismatch");
    std::vector<mpz_class> y(a.rows(), mpz_class(0));
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++)
            if (a.at(i, j) != 0)
                y[i] += a.at(i, j) * x[j];
    return y;
}

mpz_class det(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw ArgumentError("det: matrix not square");
    int n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; k++) {
        int piv = -1;
        for (int i = k; i < n; i++)
            if (a.at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            return 0;
        if (piv != k) {
            a.swap_rows(piv, k);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++) {
            for (int j = k + 1; j < n; j++) {
                mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

// smallest nonzero entry by absolute value in the trailing block
bool find_pivot(const IntMatrix& d, int t, int& pi, int& pj)
{
    bool found = false;
    mpz_class best;
    for (int i = t; i < d.rows(); i++)
        for (int j = t; j < d.cols(); j++) {
            const mpz_class& x = d.at(i, j);
            if (x == 0)
                continue;
            mpz_class ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    SmithForm s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    IntMatrix& d = s.d;
    int n = std::min(a.rows(), a.cols());
    for (int t = 0; t < n; t++) {
        int pi, pj;
        if (!find_pivot(d, t, pi, pj))
            break;
        for (;;) {
            if (pi != t) {
                d.swap_rows(pi, t);
                s.u.swap_rows(pi, t);
            }
            if (pj != t) {
                d.swap_cols(pj, t);
                s.v.swap_cols(pj, t);
            }
            bool dirty = false;
            for (int i = t + 1; i < d.rows(); i++) {
                if (d.at(i, t) == 0)
                    continue;
                mpz_class q = d.at(i, t) / d.at(t, t);
                if (q != 0)
                    for (int j = 0; j < d.cols(); j++)
                        d.at(i, j) -= q * d.at(t, j);
                for (int j = 0; j < s.u.cols(); j++)
                    s.u.at(i, j) -= q * s.u.at(t, j);
                if (d.at(i, t) != 0)
                    dirty = true;
            }
            for (int j = t + 1; j < d.cols(); j++) {
                if (d.at(t, j) == 0)
                    continue;
                mpz_class q = d.at(t, j) / d.at(t, t);
                if (q != 0)
                    for (int i = 0; i < d.rows(); i++)
                        d.at(i, j) -= q * d.at(i, t);
                for (int i = 0; i < s.v.rows(); i++)
                    s.v.at(i, j) -= q * s.v.at(i, t);
                if (d.at(t, j) != 0)
                    dirty = true;
            }
            if (dirty) {
                find_pivot(d, t, pi, pj);
                continue;
            }
            // every remaining entry must be a multiple of the pivot
            bool divisible = true;
            for (int i = t + 1; i < d.rows() && divisible; i++)
                for (int j = t + 1; j < d.cols() && divisible; j++)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        for (int jj = 0; jj < d.cols(); jj++)
                            d.at(t, jj) += d.at(i, jj);
                        for (int jj = 0; jj < s.u.cols(); jj++)
                            s.u.at(t, jj) += s.u.at(i, jj);
                        divisible = false;
                    }
            if (divisible)
                break;
            find_pivot(d, t, pi, pj);
        }
        if (d.at(t, t) < 0) {
            for (int j = 0; j < d.cols(); j++)
                d.at(t, j) = -d.at(t, j);
            for (int j = 0; j < s.u.cols(); j++)
                s.u.at(t, j) = -s.u.at(t, j);
        }
    }
    return s;
}

int rank(const IntMatrix& a)
{
    SmithForm s = smith_normal_form(a);
    int n = std::min(a.rows(), a.cols());
    int r = 0;
    while (r < n && s.d.at(r, r) != 0)
        r++;
    return r;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++) {
            if (a.at(i, j) == 0)
                continue;
            for (int k = 0; k < b.rows(); k++)
                for (int l = 0; l < b.cols(); l++)
                    c.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return c;
}

std::optional<std::vector<mpz_class>> solve(const IntMatrix& a, const std::vector<mpz_class>& b)
{
    if (a.rows() != static_cast<int>(b.size()))
        throw ArgumentError("solve: length mismatch");
    SmithForm s = smith_normal_form(a);
    std::vector<mpz_class> ub = s.u * b;
    std::vector<mpz_class> y(a.cols(), mpz_class(0));
    int n = std::min(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); i++) {
        if (i >= n || s.d.at(i, i) == 0) {
            if (ub[i] != 0)
                return std::nullopt;
            continue;
        }
        if (ub[i] % s.d.at(i, i) != 0)
            return std::nullopt;
        y[i] = ub[i] / s.d.at(i, i);
    }
    return s.v * y;
}

IntMatrix inverse_unimodular(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw ArgumentError("inverse_unimodular: matrix not square");
    SmithForm s = smith_normal_form(a);
    if (!s.d.is_identity())
        throw ArgumentError("inverse_unimodular: determinant is not a unit");
    return s.v * s.u;
}

} // namespace orlik
