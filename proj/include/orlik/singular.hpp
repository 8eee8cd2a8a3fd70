#pragma once

// Quasihomogeneous singularity front end: weight systems, chain and cycle
// data, Thom-Sebastiani sums, the weight-product expansion of the
// characteristic divisor, canonical excellent orders, standard
// decompositions of the monodromy, link homology, and the end-to-end
// lattice certificate. Values that admit two independent routes are
// computed both ways; disagreement throws ConsistencyError.

#include "orlik/divisor.hpp"
#include "orlik/lattice.hpp"
#include "orlik/numth.hpp"
#include "orlik/orders.hpp"
#include "orlik/poly.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace orlik {

// reduced fractions s_j/t_j strictly between 0 and 1, one per variable
struct WeightSystem {
    std::vector<i64> s;
    std::vector<i64> t;

    int vars() const { return static_cast<int>(t.size()); }
};

WeightSystem make_weight_system(const std::vector<std::pair<i64, i64>>& fractions);

// expression tree over the two singularity families, summed in disjoint
// variables
struct SingularityExpr {
    enum class Kind { chain, cycle, sum };

    Kind kind;
    std::vector<i64> a;
    std::shared_ptr<const SingularityExpr> left;
    std::shared_ptr<const SingularityExpr> right;
};

using ExprPtr = std::shared_ptr<const SingularityExpr>;

// x1^{a1+1} + x1 x2^{a2} + ... + x_{n-1} x_n^{a_n}; requires each a_i >= 1
ExprPtr chain_expr(std::vector<i64> a);

// x1^{a1} x2 + ... + x_n^{a_n} x1; requires n >= 2, and for even n that
// neither all even-indexed nor all odd-indexed exponents equal 1
ExprPtr cycle_expr(std::vector<i64> a);

ExprPtr sum_expr(ExprPtr f, ExprPtr g);

int variable_count(const SingularityExpr& f);

std::string to_string(const SingularityExpr& f);

struct ChainData {
    // b[k] = (a1+1) a2 ... ak, with b[0] = 1
    std::vector<i64> b;
    i64 mu = 0;
    // orders of the eigenvalues of the root h with h^mu = monodromy
    BlockSet m_set;
    WeightSystem weights;

    // smallest i with m | b[i]; n+1 when m does not divide b[n]
    int chi(i64 m) const;
};

ChainData chain_data(const std::vector<i64>& a);

struct CycleData {
    i64 mu = 0;
    // degree of the weight denominators, mu - (-1)^n
    i64 d = 0;
    // weight numerators, solved from a_i v_i + v_{i+1} = d cyclically
    std::vector<i64> v;
    // common value gcd(v_i, d)
    i64 g = 0;
    // d / g; the characteristic polynomial is (t^b-1)^g (t-1)^{+-1}
    i64 b = 0;
    ExponentMap chi;
    Covering covering;
    WeightSystem weights;
};

CycleData cycle_data(const std::vector<i64>& a);

// expands the product of (1/s_j) Lambda_{t_j} - Lambda_1 over the variables;
// the rational coefficients must cancel to a nonnegative integer combination
// of the Psi classes, anything else throws ConsistencyError
Divisor milnor_orlik_divisor(const WeightSystem& w);

// Moebius transform nu with chi(m) = sum of nu(k) over multiples k of m;
// equivalently the coefficients of chi's divisor in the Lambda basis
std::map<i64, i64> nu_map(const ExponentMap& chi);

// inverse of nu_map
ExponentMap nu_to_exponent(const std::map<i64, i64>& nu);

// true when every nonempty variable subset J admits |J| indices k whose
// weighted-degree equation sum_{j in J} w_j alpha_j = 1 - w_k has a
// nonnegative integer solution
bool kouchnirenko_c2(const WeightSystem& w, int max_vars = 8);

// one excellent order per prime dividing an element of m_f: s = the largest
// exponent of p in m_f, and S = the set of k in [0,s] at which p^k divides
// an odd number of weight denominators. 0 enters S exactly when the number
// of variables is odd; this follows the defining count literally, although
// membership of 0 never changes the resulting order.
OrderTuple canonical_orders(const WeightSystem& w, const BlockSet& m_f);

// concatenation over the expression's variables
WeightSystem weights_of(const SingularityExpr& f);

// exponent map of the characteristic polynomial of the monodromy; sums are
// tensor products of the summands' maps, and each leaf is computed from its
// weight system and cross-checked against the chain/cycle closed form
ExponentMap char_exponent(const SingularityExpr& f);

struct StandardDecomposition {
    // nested sets M_1 >= M_2 >= ... >= M_k of eigenvalue orders
    Covering covering;
    // p_j = product of Phi_m over M_j; p_k | ... | p_1
    std::vector<IntPolynomial> polynomials;
    i64 mu = 0;
    OrderTuple orders;
    // set when the input is a bare weight system outside the families the
    // decomposition is proved for; the covering is then a prediction
    bool conjectural = false;
};

StandardDecomposition decompose(const SingularityExpr& f);
StandardDecomposition decompose(const WeightSystem& w);

struct LinkHomology {
    // rank of the middle link homology, the multiplicity of t-1 in the
    // characteristic polynomial
    i64 l = 0;
    // orders p_j(1) of the finite cyclic summands, j = l+1 .. k
    std::vector<mpz_class> torsion;
};

// requires at least three variables; the rank is computed both from the
// exponent map and from the inclusion-exclusion sum over variable subsets,
// which must agree and be integral
LinkHomology link_homology(const SingularityExpr& f);
LinkHomology link_homology(const WeightSystem& w);

// end-to-end certificate: the monodromy matrix built recursively from the
// expression (Kronecker products over sums) together with a unimodular
// conjugation onto the standard block companion form of decompose(f)
struct Certificate {
    IntMatrix monodromy;
    Conjugation conj;
    Covering covering;
};

Certificate certify(const SingularityExpr& f, int max_rank = 16);

} // namespace orlik
