#pragma once

// Decidable sufficiency criteria for splitting a block with eigenvalue-order
// set M into the standard direct sum. Power case: the mu-th power of the
// multiplication automorphism. Tensor case: the product of two blocks. Both
// reduce to conditions on prime-power divisibility edges between orders.

#include "orlik/divisor.hpp"
#include "orlik/numth.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace orlik {

// directed edge from a larger order to a smaller one with ratio p^k, k >= 1
struct PEdge {
    i64 p;
    i64 from;
    i64 to;
};

bool operator==(const PEdge& a, const PEdge& b);
bool operator<(const PEdge& a, const PEdge& b);

// all prime-power-ratio pairs inside M, sorted by (p, from, to)
std::vector<PEdge> p_edges(const BlockSet& m_set);

// m / gcd(m, mu)
i64 gamma_mu(i64 mu, i64 m);

// full preimage of n under gamma_mu, always finite
BlockSet gamma_fiber(i64 mu, i64 n);

// exponents k with p^k * m0 in M; m0 must be coprime to p
std::set<int> k_set(const BlockSet& m_set, i64 p, i64 m0);

// orbit sizes: (sum of phi(m) over the fiber of n inside M) / phi(n)
i64 power_multiplicity(const BlockSet& m_set, i64 mu, i64 n);

struct CheckResult {
    bool sufficient;
    std::optional<PEdge> witness;
};

// every edge of the projected graph admits one of the two fiber-transport
// conditions; witness is the first failing edge in (p, from, to) order
CheckResult is_sdiob_power(const BlockSet& m_set, i64 mu);

// partial multiplicity of Psi_l restricted to the p-towers over m0 and n0
i64 chi_local(const BlockSet& m_set, const BlockSet& n_set, i64 p, i64 m0, i64 n0, i64 l);

// every p-edge of the product support satisfies one of the two one-sided
// comparisons of the local multiplicities, over all tower-base pairs
CheckResult is_sdiob_tensor(const BlockSet& m_set, const BlockSet& n_set);

struct XiValue {
    i64 xi1;
    i64 xi2p;
    i64 xi;
};

// exponent of p in the basis determinant contributed by one p-edge of the
// product support; zero exactly when the edge passes the tensor criterion
XiValue xi(const BlockSet& m_set, const BlockSet& n_set, i64 p, i64 l_a, i64 l_b);

} // namespace orlik
