#pragma once

// Excellent orders on exponent ranges, their tensor product, the quadrant
// graph they induce on products of prime powers, compatibility of sets and
// multiplicity maps with an order tuple, coverings of a multiplicity map,
// and inference of a compatible order tuple from a block set.

#include "orlik/divisor.hpp"
#include "orlik/numth.hpp"
#include "orlik/sdiob.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace orlik {

// total order on [0, s]: members of big (then 0) rank high by value,
// the rest rank low by reversed value
struct ExcellentOrder {
    int s = 0;
    std::set<int> big;
};

using OrderTuple = std::map<i64, ExcellentOrder>;

using Covering = std::vector<BlockSet>;

enum class Ordering { less, equal, greater };

Ordering compare(const ExcellentOrder& o, int a, int b);

// the maximal element, max(big set and 0)
int s_plus(const ExcellentOrder& o);

ExcellentOrder tensor_order(const ExcellentOrder& a, const ExcellentOrder& b);

// true iff k is a descending-prefix of the order (an up-set), incl. empty
// and the full range
bool is_subset_compatible(const std::set<int>& k, const ExcellentOrder& o);

struct VEdge {
    i64 p;
    i64 from;
    i64 to;
};

struct Quadrant {
    BlockSet vertices;
    std::vector<VEdge> edges;
    i64 center;
};

// all products of p^k over p in the tuple with k in [0, s_p]; edges join
// vertices differing in one prime, directed by that prime's order
Quadrant quadrant(const OrderTuple& t, i64 max_vertices = 1 << 20);

// m lies inside the quadrant and is closed under edge sources
bool is_set_compatible(const BlockSet& m_set, const OrderTuple& t);

// support lies inside the quadrant and chi never grows along an edge
bool is_map_compatible(const ExponentMap& chi, const OrderTuple& t);

// the nested covering by super-level sets of chi
Covering standard_covering(const ExponentMap& chi);

// all coverings of chi whose members are each set-compatible with t,
// canonicalized (sets ordered by descending size then lexicographically)
// and sorted; always includes the standard covering
std::vector<Covering> enumerate_compatible_coverings(const ExponentMap& chi, const OrderTuple& t,
                                                     i64 cap = 100000);

// order tuple making m_set compatible, if the construction succeeds
std::optional<OrderTuple> infer_orders(const BlockSet& m_set);

} // namespace orlik
