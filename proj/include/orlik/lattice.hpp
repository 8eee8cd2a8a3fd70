#pragma once

// Exact lattice certificates for decompositions into companion blocks:
// companion matrices, the power and tensor basis tuples with their
// determinants, integral Bezout cofactors, the inductive block-completion
// solver, the two-block exchange move, and chains of exchanges that carry
// an arbitrary compatible covering into the standard one. Everything here
// works over Z and double-checks itself; a failed internal identity throws
// ConsistencyError.

#include "orlik/divisor.hpp"
#include "orlik/intmatrix.hpp"
#include "orlik/poly.hpp"

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace orlik {

struct LatticeWithEndo {
    IntMatrix h;
    std::optional<IntPolynomial> char_poly;

    int rank() const { return h.rows(); }
};

LatticeWithEndo companion_block(const IntPolynomial& p);
LatticeWithEndo direct_sum(const LatticeWithEndo& a, const LatticeWithEndo& b);
// Kronecker product; the characteristic polynomial is left unset because it
// is not determined by the factors' polynomials alone at this level
LatticeWithEndo tensor_product(const LatticeWithEndo& a, const LatticeWithEndo& b);

// certified base change: basis has determinant +-1 and conjugates the
// ambient endomorphism into the block companion form of `blocks`
struct Conjugation {
    IntMatrix basis;
    std::vector<IntPolynomial> blocks;
};

IntMatrix companion_matrix(const IntPolynomial& p);

// block diagonal of companion matrices; degree-0 factors contribute nothing
IntMatrix block_companion(const std::vector<IntPolynomial>& ps);

bool verify_conjugation(const IntMatrix& h, const Conjugation& c);

// index of the sublattice spanned by the shifted copies of f and g inside
// the degree-bounded polynomial lattice; equals |resultant(f, g)|
mpz_class resultant_index(const IntPolynomial& f, const IntPolynomial& g);

// (u, v) with u*f + v*g = 1, deg u < deg g, deg v < deg f;
// requires |resultant(f, g)| = 1
std::pair<IntPolynomial, IntPolynomial> bezout_unimodular(const IntPolynomial& f,
                                                          const IntPolynomial& g);

struct PowerBasisResult {
    mpz_class det;
    IntMatrix basis;
    std::vector<IntPolynomial> divisors;
};

// On the block with characteristic polynomial prod Phi_m over m_set, the
// iterates of the mu-th power of the generator endomorphism laid out along
// the elementary divisors of that power. |det| = 1 certifies a standard
// decomposition of the power.
PowerBasisResult power_basis_check(const BlockSet& m_set, i64 mu, int max_rank = 24);

struct TensorBasisResult {
    mpz_class det;
    mpz_class predicted;
    IntMatrix basis;
    std::vector<IntPolynomial> divisors;
};

// Same for the tensor product of the blocks over m_set and n_set; the
// determinant is checked against its closed-form prediction from the edge
// exponents and a mismatch is a hard ConsistencyError.
TensorBasisResult tensor_basis_check(const BlockSet& m_set, const BlockSet& n_set,
                                     int max_rank = 24);

// Completion of a seed tuple into a certified standard decomposition.
// seeds holds one column per divisor; column j and its iterates under h
// must assemble to a basis of the lattice. The corrections for the later
// blocks are solved exactly inside the span of the earlier ones.
Conjugation complete_decomposition(const IntMatrix& h,
                                   const std::vector<IntPolynomial>& divisors,
                                   const IntMatrix& seeds);

// On H^[f1 f3 f4] + H^[f2 f3], the base change onto companion blocks of
// f2 f3 f4 and f1 f3. Requires |Res(f1, f4)| = |Res(f2, f4)| = 1 and all
// pairwise resultants nonzero.
Conjugation split_sum_exchange(const IntPolynomial& f1, const IntPolynomial& f2,
                               const IntPolynomial& f3, const IntPolynomial& f4);

// On the companion block of p1*p2: the column lattice of p2 applied to the
// endomorphism is primitive and equals the kernel lattice of p1 applied
bool primitive_part_check(const IntPolynomial& p1, const IntPolynomial& p2);

struct StandardizeResult {
    Conjugation conj;
    std::vector<BlockSet> covering;
};

// Carries a direct sum of blocks indexed by block sets into nested form by
// permutations and exchange moves. The input must be a covering whose
// incomparable pairs all satisfy the unit-resultant condition across their
// set differences; otherwise ArgumentError.
StandardizeResult standardize_block_sum(const std::vector<BlockSet>& blocks);

} // namespace orlik
