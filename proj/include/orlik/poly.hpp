#pragma once

// Exact integer-polynomial arithmetic and the cyclotomic toolkit: Phi_m,
// Sylvester matrices, resultants, discriminants, their closed forms for
// cyclotomic arguments, and the multiplicity counts for differences of
// primitive unit roots.

#include "orlik/intmatrix.hpp"
#include "orlik/numth.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace orlik {

// coefficient of t^i at index i; empty list is the zero polynomial
struct IntPolynomial {
    std::vector<mpz_class> c;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial constant(const mpz_class& v);
    static IntPolynomial monomial(int k, const mpz_class& coeff = 1);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_unitary() const { return !c.empty() && c.back() == 1; }

    // coefficient of t^i, zero outside the stored range
    mpz_class coeff(int i) const
    {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : mpz_class(0);
    }
};

bool operator==(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);

// exact quotient by a unitary divisor; nonzero remainder is an error
IntPolynomial divexact(const IntPolynomial& num, const IntPolynomial& den);

// true when the unitary polynomial den divides num over the integers
bool divides(const IntPolynomial& den, const IntPolynomial& num);

IntPolynomial derivative(const IntPolynomial& f);
mpz_class eval(const IntPolynomial& f, const mpz_class& x);

// f(M) for a square matrix M
IntMatrix apply_poly(const IntPolynomial& f, const IntMatrix& m);

std::string to_string(const IntPolynomial& f);

// Phi_m, unitary of degree phi(m); memoized, safe under concurrent calls
IntPolynomial cyclotomic(i64 m);

// columns are f, tf, ..., t^{deg g - 1}f, g, tg, ..., t^{deg f - 1}g in the
// basis 1, t, ..., t^{deg f + deg g - 1}; they span the degree-bounded part
// of the ideal (f, g) when f and g are unitary
IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g);

// det of the Sylvester matrix, oriented so that the value equals
// lc(f)^{deg g} * product of g over the roots of f
mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g);

// resultant(f, f')
mpz_class discriminant(const IntPolynomial& f);

// closed form for resultant(Phi_m, Phi_n)
mpz_class cyclo_resultant(i64 m, i64 n);

// |discriminant(Phi_m)|, assembled from per-prime valuations
mpz_class cyclo_discriminant(i64 m);

// Phi_m(1): 0 for m = 1, p for m = p^k, 1 otherwise
i64 cyclo_at_one(i64 m);

// multiplicity with which e(a/m - b/n) hits a fixed unit root of order p^k
// as (a, b) runs over the primitive residue pairs
i64 lambda_count(i64 m, i64 n, i64 p, int k);

} // namespace orlik
