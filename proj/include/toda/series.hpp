#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "toda/background.hpp"
#include "toda/cache.hpp"
#include "toda/partition.hpp"

namespace toda {

// A monomial t_delta tbar_deltabar in the time variables.
struct SeriesKey {
  Partition delta;
  Partition delta_bar;

  friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
  std::string to_string() const;  // "t[2,1]*tbar[3]"
};

// Finite map from time monomials to coefficients in the background algebra,
// truncated at a per-side weight bound: only monomials with |delta| <= bound
// and |delta_bar| <= bound are stored.  All operations re-truncate, so a
// series is complete on the stored region whenever its inputs were (the
// differential operators only move weight downward; multiplications by t_k
// move it upward together with the data they need).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int bound);

  int bound() const { return bound_; }
  const std::map<SeriesKey, BgTerm>& coefficients() const { return c_; }

  BgTerm coeff(const Partition& delta, const Partition& delta_bar) const;
  void set(const Partition& delta, const Partition& delta_bar, BgTerm value);
  void add(const SeriesKey& key, const BgTerm& value);

  TruncatedSeries d_k(int k) const;      // d/dt_k
  TruncatedSeries dbar_k(int k) const;   // d/dtbar_k
  TruncatedSeries mul_tk(int k) const;   // multiply by t_k
  TruncatedSeries mul_tbark(int k) const;

  TruncatedSeries d_t0(const BackgroundAlgebra& algebra) const;
  TruncatedSeries d_beta(const BackgroundAlgebra& algebra) const;
  TruncatedSeries d_logq(const BackgroundAlgebra& algebra) const;

  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries scale(const Rational& c) const;
  TruncatedSeries scale_term(const BgTerm& c) const;

  static TruncatedSeries constant(int bound, const BgTerm& value);

  // exp of a series with no constant (vacuum) coefficient, truncated at
  // t-weight `order`: sum_{n<=order} x^n/n!.
  static TruncatedSeries exp_truncated(const TruncatedSeries& x, int order);

  // Coefficient-wise comparison over all monomials with per-side weight
  // <= weight_bound.  On mismatch, reports the first offending monomial.
  bool equal_up_to(const TruncatedSeries& other, int weight_bound,
                   std::string* first_mismatch = nullptr) const;

 private:
  int bound_;
  std::map<SeriesKey, BgTerm> c_;
};

// Taylor expansion of the symmetric solution determined by the family, all
// coefficients with |delta| = |delta_bar| <= bound plus the vacuum.
TruncatedSeries expand_tau(const BackgroundAlgebra& algebra, int bound,
                           CoefficientCache& cache);

struct CheckItem {
  std::string identity;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::vector<CheckItem> items;

  bool pass() const;
  const CheckItem* first_failure() const;
};

// Verifies the coefficients of t_i tbar_j and of single-row-against-many
// monomials against the closed forms i f^i and (prod ibar / sigma) *
// d0^{kbar-1}(f^i), in both orientations.
CheckReport check_mixed_derivatives(const TruncatedSeries& series,
                                    const BackgroundAlgebra& algebra);

// Leading lattice equation: d1 dbar1 F = exp(d0^2 F), checked as exact
// truncated series up to per-side weight `depth` (needs depth < bound of
// `series`).  Hurwitz family only.
CheckReport check_toda_equation(const TruncatedSeries& series,
                                const BackgroundAlgebra& algebra, int depth);

// The two differential relations of the Hurwitz generating function:
//   dF/dlogQ = t0^2/2 + sum_k k t_k d_k F,
//   dF/dbeta = t0^3/6 + t0 sum_k k t_k d_k F
//            + 1/2 sum_{k,l} (k l t_k t_l d_{k+l} F
//                             + (k+l) t_{k+l} d_k F d_l F).
CheckReport check_cut_and_join(const TruncatedSeries& series,
                               const BackgroundAlgebra& algebra);

// Hurwitz family:  2F = -beta dF/dbeta + t0 d0 F + sum_k (t_k d_k + tbar_k dbar_k) F.
// Homogeneous:     4 alpha F = -t0^2 + 2 alpha t0 d0 F
//                             + sum_k (2 alpha - k)(t_k d_k + tbar_k dbar_k) F.
CheckReport check_homogeneity(const TruncatedSeries& series,
                              const BackgroundAlgebra& algebra);

}  // namespace toda
