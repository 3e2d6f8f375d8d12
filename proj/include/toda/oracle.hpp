#pragma once

#include <span>
#include <vector>

#include "toda/partition.hpp"
#include "toda/rational.hpp"

namespace toda {

// One-line notation: perm[x] is the image of x, acting on {0..d-1}.
using Perm = std::vector<int>;

Partition cycle_type(const Perm& p);

// Canonical class representative: consecutive cycles (0..m1-1)(m1..)...
Perm class_representative(const Partition& type);

// True iff the group generated by gens has a single orbit on {0..d-1}.
bool is_transitive(std::span<const Perm> gens, int d);

struct OracleResult {
  Rational value;            // tuple_count / d!
  Integer tuple_count;       // transitive tuples, all alpha in the class
  Integer rep_tuple_count;   // transitive tuples with alpha fixed to the rep
  Integer rep_match_count;   // tuples matching the cycle type, transitivity not required
  unsigned long long visited_nodes = 0;
};

// Counts tuples (alpha, tau_1..tau_l, beta) in S_d with cycle types
// (delta, transpositions, delta_bar), product alpha tau_1 .. tau_l beta =
// identity and transitive joint action; l = len(delta)+len(delta_bar)-2.
// alpha is fixed to one class representative and the count is scaled by
// class_size(delta); beta is determined as the inverse of the partial
// product and only its cycle type is tested.
//
// Throws BudgetError when C(d,2)^l exceeds `budget` (the estimate already
// assumes the fixed representative); never returns a partial count.
OracleResult oracle_hurwitz_genus0(const Partition& delta, const Partition& delta_bar,
                                   const Integer& budget = Integer(500000000),
                                   int jobs = 1);

}  // namespace toda
