#pragma once

#include <span>

#include "toda/cache.hpp"
#include "toda/coeff_matrix.hpp"
#include "toda/partition.hpp"
#include "toda/rational.hpp"

namespace toda {

// Number of pairs of positive-integer sequences (i_1..i_m), (j_1..j_m) with
// sum(i_t) = i, sum(j_t) = j and i_t + j_t = r_t.  Zero when sum(r) != i+j
// or some r_t < 2.
long long p_count(int i, int j, std::span<const int> r);

// T_{ij}(p_1..p_m): alternating sum over ordered compositions (n_1..n_k)
// of m with coefficient (-1)^{m+1}/(k n_1!..n_k!) applied to P at the
// consecutive block sums of p.  Zero when i + j != sum(p).
Rational t_pair(int i, int j, std::span<const int> p, CoefficientCache& cache);

// T with l-labels.  Base cases: a single index is 1 exactly on the matrix
// ((i)|(0)); two indices reduce to t_pair when every l is 1.  Longer index
// lists recurse by peeling the last index and merging a contiguous column
// range into one column (s|l) with a multinomial factor, skipping merges
// with s <= 0 or l <= 0.  Zero whenever sum(s) != sum(idx), or
// sum(ell) != m + k - 2, or (for k >= 2) some l-label is nonpositive.
Rational t_multi(std::span<const int> idx, std::span<const int> s,
                 std::span<const int> ell, CoefficientCache& cache);

// N-tilde for ordered index lists and an ordered matrix: prefactor
// (prod idx * prod bar)/(prod s) times the sum, over all typed position
// partitions of bar into blocks with sums s_j, of T at l_j = r_j - n_j + 1.
// Zero when the weights disagree, when sum(r) != k + kbar - 2, or when no
// typed partition exists.
Rational n_tilde(std::span<const int> idx, std::span<const int> bar,
                 const CoeffMatrix& matrix, CoefficientCache& cache);

// Universal coefficient N for two diagrams of equal weight: n_tilde at the
// canonical (sorted, non-increasing) index lists divided by
// sigma(delta) * sigma(delta_bar).  Throws DomainError on weight mismatch.
Rational n_coeff(const Partition& delta, const Partition& delta_bar,
                 const CoeffMatrix& matrix, CoefficientCache& cache);

}  // namespace toda
