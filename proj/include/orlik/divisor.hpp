#pragma once

// The divisor ring on unit-root orbit classes, in the basis of the classes
// Psi_m of primitive m-th roots. Products reduce through the beta/delta
// combinatorics; exponent maps record characteristic polynomials as
// multiplicities of cyclotomic factors.

#include "orlik/numth.hpp"
#include "orlik/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace orlik {

// sorted duplicate-free set of positive integers
using BlockSet = std::vector<i64>;

// sorts, removes duplicates, validates positivity; empty input stays empty
BlockSet make_block_set(std::vector<i64> elems);

// finite integer combination of the classes Psi_m; stored entries nonzero
struct Divisor {
    std::map<i64, i64> c;

    i64 coeff(i64 m) const
    {
        auto it = c.find(m);
        return it == c.end() ? 0 : it->second;
    }
    void add(i64 m, i64 k);
};

bool operator==(const Divisor& a, const Divisor& b);
Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);
Divisor operator*(i64 k, const Divisor& d);

// multiplicity map m -> exponent of Phi_m; absent = 0
using ExponentMap = std::map<i64, i64>;

Divisor psi(i64 m);

// class of all m-th roots of unity, sum of psi(d) over d | m
Divisor lambda_div(i64 m);

i64 degree(const Divisor& d);

// product over primes with equal positive valuation in m and n
i64 beta(i64 m, i64 n);

// multiplicity of Psi_l in Psi_m * Psi_n
i64 delta(i64 m, i64 n, i64 l);

Divisor mul(const Divisor& a, const Divisor& b);

// product of the two cyclotomic-exponent maps in the divisor ring
ExponentMap tensor_exponent(const ExponentMap& chi1, const ExponentMap& chi2);

// support L and multiplicity map of the product of the Psi-sums over M and N
std::pair<BlockSet, ExponentMap> chi_of(const BlockSet& m_set, const BlockSet& n_set);

// product of Phi_m to the power chi(m)
IntPolynomial exponent_to_poly(const ExponentMap& chi);

Divisor to_divisor(const ExponentMap& chi);
ExponentMap to_exponent(const Divisor& d);

} // namespace orlik
