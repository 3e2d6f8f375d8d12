#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toda/cache.hpp"
#include "toda/partition.hpp"
#include "toda/rational.hpp"

namespace toda {

// One evaluated pair.  d = |delta| = |delta_bar|; l = len(delta) +
// len(delta_bar) - 2 is the number of simple branch points at genus 0.
struct HurwitzRecord {
  Partition delta;
  Partition delta_bar;
  int d = 0;
  int l = 0;
  Rational value;
  std::string method;  // "theorem31" | "closed_form" | "oracle"
  std::optional<Rational> closed_form;
  std::optional<Rational> oracle;
  std::optional<std::string> oracle_error;  // e.g. "budget_exceeded"
};

// The weighted coefficient sum  sum over matrices of s_1^{r_1}..s_m^{r_m} *
// N(delta|delta_bar)(s|r), with sum(s) = d and sum(r) = l.  Strictly
// positive for every valid pair.
Rational n_weighted_sum(const Partition& delta, const Partition& delta_bar,
                        CoefficientCache& cache);

// Genus-0 double Hurwitz number:  l!/(rho(delta) rho(delta_bar)) times the
// weighted sum above.  Requires equal positive weights.
Rational hurwitz_genus0(const Partition& delta, const Partition& delta_bar,
                        CoefficientCache& cache);

// Closed-form reference value when one of the four special shapes applies,
// in this dispatch order:
//   1. both diagrams have exactly two rows;
//   2. one diagram is a single row [n];
//   3. one diagram is [1^d];
//   4. one diagram is [2,1^{d-2}].
// All applicable forms are evaluated and must agree.  Returns nullopt when
// none applies.
std::optional<Rational> hurwitz_closed_form(const Partition& delta,
                                            const Partition& delta_bar);

struct TableOptions {
  bool with_oracle = false;
  Integer oracle_budget = Integer(500000000);
  int jobs = 1;
};

// Every pair with |delta| = |delta_bar| = d <= d_max, evaluated via the
// coefficient formula and annotated with the applicable closed form (and,
// when requested and feasible, the oracle value).  Deterministic order:
// by d, then both diagrams in enumeration order.  Oracle budget misses are
// recorded in the row, never dropped.
std::vector<HurwitzRecord> hurwitz_table(int d_max, const TableOptions& options,
                                         CoefficientCache& cache);

}  // namespace toda
