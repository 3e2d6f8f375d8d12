#include "toda/series.hpp"

#include <algorithm>

#include "toda/coefficients.hpp"
#include "toda/errors.hpp"

namespace toda {

namespace {

// Multiset union of two canonical part lists.
Partition merge_partitions(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  parts.insert(parts.end(), a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

// Count of a part value in a canonical partition.
int multiplicity(const Partition& p, int k) {
  return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), k));
}

// Removes one copy of k; the caller guarantees it is present.
Partition remove_part(const Partition& p, int k) {
  std::vector<int> parts = p.parts();
  parts.erase(std::find(parts.begin(), parts.end(), k));
  return Partition(std::move(parts));
}

Partition add_part(const Partition& p, int k) {
  std::vector<int> parts = p.parts();
  parts.push_back(k);
  return Partition(std::move(parts));
}

}  // namespace

std::string SeriesKey::to_string() const {
  return "t" + delta.to_string() + "*tbar" + delta_bar.to_string();
}

TruncatedSeries::TruncatedSeries(int bound) : bound_(bound) {
  if (bound < 0) throw DomainError("series weight bound must be >= 0");
}

BgTerm TruncatedSeries::coeff(const Partition& delta, const Partition& delta_bar) const {
  auto it = c_.find(SeriesKey{delta, delta_bar});
  return it == c_.end() ? BgTerm{} : it->second;
}

void TruncatedSeries::set(const Partition& delta, const Partition& delta_bar,
                          BgTerm value) {
  if (delta.weight() > bound_ || delta_bar.weight() > bound_) return;
  SeriesKey key{delta, delta_bar};
  if (value.is_zero()) {
    c_.erase(key);
  } else {
    c_[key] = std::move(value);
  }
}

void TruncatedSeries::add(const SeriesKey& key, const BgTerm& value) {
  if (key.delta.weight() > bound_ || key.delta_bar.weight() > bound_) return;
  if (value.is_zero()) return;
  auto [it, inserted] = c_.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) c_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::d_k(int k) const {
  TruncatedSeries out(bound_);
  for (const auto& [key, value] : c_) {
    int mult = multiplicity(key.delta, k);
    if (!mult) continue;
    out.add(SeriesKey{remove_part(key.delta, k), key.delta_bar}, value * Rational(mult));
  }
  return out;
}

TruncatedSeries TruncatedSeries::dbar_k(int k) const {
  TruncatedSeries out(bound_);
  for (const auto& [key, value] : c_) {
    int mult = multiplicity(key.delta_bar, k);
    if (!mult) continue;
    out.add(SeriesKey{key.delta, remove_part(key.delta_bar, k)}, value * Rational(mult));
  }
  return out;
}

TruncatedSeries TruncatedSeries::mul_tk(int k) const {
  TruncatedSeries out(bound_);
  for (const auto& [key, value] : c_) {
    out.add(SeriesKey{add_part(key.delta, k), key.delta_bar}, value);
  }
  return out;
}

TruncatedSeries TruncatedSeries::mul_tbark(int k) const {
  TruncatedSeries out(bound_);
  for (const auto& [key, value] : c_) {
    out.add(SeriesKey{key.delta, add_part(key.delta_bar, k)}, value);
  }
  return out;
}

TruncatedSeries TruncatedSeries::d_t0(const BackgroundAlgebra& algebra) const {
  TruncatedSeries out(bound_);
  for (const auto& [key, value] : c_) out.add(key, algebra.d_t0(value));
  return out;
}

TruncatedSeries TruncatedSeries::d_beta(const BackgroundAlgebra& algebra) const {
  TruncatedSeries out(bound_);
  for (const auto& [key, value] : c_) out.add(key, algebra.d_beta(value));
  return out;
}

TruncatedSeries TruncatedSeries::d_logq(const BackgroundAlgebra& algebra) const {
  TruncatedSeries out(bound_);
  for (const auto& [key, value] : c_) out.add(key, algebra.d_logq(value));
  return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
  TruncatedSeries out(std::min(bound_, other.bound_));
  for (const auto& [key, value] : c_) out.add(key, value);
  for (const auto& [key, value] : other.c_) out.add(key, value);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
  return *this + other.scale(-1);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  TruncatedSeries out(std::min(bound_, other.bound_));
  for (const auto& [ka, va] : c_) {
    for (const auto& [kb, vb] : other.c_) {
      if (ka.delta.weight() + kb.delta.weight() > out.bound_) continue;
      if (ka.delta_bar.weight() + kb.delta_bar.weight() > out.bound_) continue;
      out.add(SeriesKey{merge_partitions(ka.delta, kb.delta),
                        merge_partitions(ka.delta_bar, kb.delta_bar)},
              va * vb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scale(const Rational& c) const {
  TruncatedSeries out(bound_);
  if (c == 0) return out;
  for (const auto& [key, value] : c_) out.add(key, value * c);
  return out;
}

TruncatedSeries TruncatedSeries::scale_term(const BgTerm& c) const {
  TruncatedSeries out(bound_);
  for (const auto& [key, value] : c_) out.add(key, value * c);
  return out;
}

TruncatedSeries TruncatedSeries::constant(int bound, const BgTerm& value) {
  TruncatedSeries out(bound);
  out.set(Partition(), Partition(), value);
  return out;
}

TruncatedSeries TruncatedSeries::exp_truncated(const TruncatedSeries& x, int order) {
  if (!x.coeff(Partition(), Partition()).is_zero()) {
    throw DomainError("exp_truncated needs a series without constant term");
  }
  TruncatedSeries acc = constant(x.bound(), BgTerm::constant(1));
  TruncatedSeries power = acc;
  Rational inv_factorial = 1;
  for (int n = 1; n <= order; ++n) {
    power = power * x;
    inv_factorial /= n;
    acc = acc + power.scale(inv_factorial);
  }
  return acc;
}

bool TruncatedSeries::equal_up_to(const TruncatedSeries& other, int weight_bound,
                                  std::string* first_mismatch) const {
  if (weight_bound > bound_ || weight_bound > other.bound_) {
    throw DomainError("equal_up_to beyond the truncation bound");
  }
  auto in_range = [&](const SeriesKey& key) {
    return key.delta.weight() <= weight_bound && key.delta_bar.weight() <= weight_bound;
  };
  std::map<SeriesKey, BgTerm> keys;
  for (const auto& [key, value] : c_)
    if (in_range(key)) keys.emplace(key, value);
  for (const auto& [key, value] : other.c_)
    if (in_range(key)) keys.emplace(key, BgTerm{});
  for (const auto& [key, lhs] : keys) {
    BgTerm l = coeff(key.delta, key.delta_bar);
    BgTerm r = other.coeff(key.delta, key.delta_bar);
    if (!(l == r)) {
      if (first_mismatch) {
        *first_mismatch = key.to_string() + ": " + l.to_string() + " vs " + r.to_string();
      }
      return false;
    }
  }
  return true;
}

TruncatedSeries expand_tau(const BackgroundAlgebra& algebra, int bound,
                           CoefficientCache& cache) {
  TruncatedSeries series(bound);
  series.set(Partition(), Partition(), algebra.vacuum());
  for (int d = 1; d <= bound; ++d) {
    auto partitions = enumerate_partitions(d);
    for (const Partition& delta : partitions) {
      for (const Partition& delta_bar : partitions) {
        int r_total = delta.length() + delta_bar.length() - 2;
        BgTerm sum;
        for (const CoeffMatrix& matrix : enumerate_coeff_matrices(d, r_total)) {
          Rational n = n_coeff(delta, delta_bar, matrix, cache);
          if (n == 0) continue;
          BgTerm product = BgTerm::constant(n);
          for (int j = 0; j < matrix.cols(); ++j) {
            product = product * algebra.d0_f_pow(matrix.s[j], matrix.r[j]);
          }
          sum += product;
        }
        series.set(delta, delta_bar, std::move(sum));
      }
    }
  }
  return series;
}

bool CheckReport::pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& i) { return i.pass; });
}

const CheckItem* CheckReport::first_failure() const {
  for (const auto& item : items)
    if (!item.pass) return &item;
  return nullptr;
}

CheckReport check_mixed_derivatives(const TruncatedSeries& series,
                                    const BackgroundAlgebra& algebra) {
  CheckReport report{"mixed_derivatives", {}};
  const int bound = series.bound();

  // coeff(t_i tbar_j) = i f^i when i = j, absent otherwise.
  for (int i = 1; i <= bound; ++i) {
    for (int j = 1; j <= bound; ++j) {
      BgTerm actual = series.coeff(Partition({i}), Partition({j}));
      BgTerm expected = i == j ? algebra.f_pow(i) * Rational(i) : BgTerm{};
      bool ok = actual == expected;
      report.items.push_back(
          {"coeff(t_" + std::to_string(i) + ", tbar_" + std::to_string(j) + ")", ok,
           ok ? "" : actual.to_string() + " vs expected " + expected.to_string()});
    }
  }

  // Single row against a full diagram, both orientations:
  // coeff(t_i, tbar_Delta) = (prod(Delta)/sigma(Delta)) d0^{len-1}(f^i)
  // when |Delta| = i, absent otherwise.
  for (int i = 1; i <= bound; ++i) {
    for (int w = 1; w <= bound; ++w) {
      for (const Partition& other : enumerate_partitions(w)) {
        if (other.length() == 1) continue;  // covered above
        BgTerm expected;
        if (w == i) {
          Rational pref = Rational(rho(other)) / Rational(sigma(other));
          expected = algebra.d0_f_pow(i, other.length() - 1) * pref;
        }
        for (bool barred_side : {false, true}) {
          BgTerm actual = barred_side ? series.coeff(Partition({i}), other)
                                      : series.coeff(other, Partition({i}));
          std::string name = barred_side
                                 ? "coeff(t_" + std::to_string(i) + ", tbar" + other.to_string() + ")"
                                 : "coeff(t" + other.to_string() + ", tbar_" + std::to_string(i) + ")";
          bool ok = actual == expected;
          report.items.push_back(
              {name, ok,
               ok ? "" : actual.to_string() + " vs expected " + expected.to_string()});
        }
      }
    }
  }
  return report;
}

CheckReport check_toda_equation(const TruncatedSeries& series,
                                const BackgroundAlgebra& algebra, int depth) {
  if (algebra.family().kind != FamilyKind::hurwitz) {
    throw DomainError("the lattice-equation check is scoped to the hurwitz family");
  }
  if (depth < 0 || depth >= series.bound()) {
    throw DomainError("lattice-equation check needs 0 <= depth < expansion bound");
  }
  CheckReport report{"toda_leading", {}};

  TruncatedSeries lhs = series.d_k(1).dbar_k(1);

  // exp(d0^2 F) = f * exp(d0^2 (F - vacuum)); the non-vacuum part has no
  // constant coefficient, so the truncated exp is a finite sum.
  TruncatedSeries second = series.d_t0(algebra).d_t0(algebra);
  TruncatedSeries nonvac = second;
  nonvac.set(Partition(), Partition(), BgTerm{});
  TruncatedSeries rhs =
      TruncatedSeries::exp_truncated(nonvac, depth).scale_term(algebra.f());

  std::string mismatch;
  bool ok = lhs.equal_up_to(rhs, depth, &mismatch);
  report.items.push_back({"d1 dbar1 F = exp(d0^2 F) up to weight " + std::to_string(depth),
                          ok, mismatch});
  return report;
}

namespace {

// sum_k k t_k d_k F, complete on the full stored region.
TruncatedSeries weighted_t_euler(const TruncatedSeries& f) {
  TruncatedSeries acc(f.bound());
  for (int k = 1; k <= f.bound(); ++k) {
    acc = acc + f.d_k(k).mul_tk(k).scale(k);
  }
  return acc;
}

}  // namespace

CheckReport check_cut_and_join(const TruncatedSeries& series,
                               const BackgroundAlgebra& algebra) {
  if (algebra.family().kind != FamilyKind::hurwitz) {
    throw DomainError("the cut-and-join check is scoped to the hurwitz family");
  }
  CheckReport report{"cut_and_join", {}};
  const int bound = series.bound();

  BgMonomial t0_sq;
  t0_sq.t0_pow = 2;
  BgMonomial t0_cube;
  t0_cube.t0_pow = 3;

  {
    TruncatedSeries lhs = series.d_logq(algebra);
    TruncatedSeries rhs =
        TruncatedSeries::constant(bound, BgTerm::monomial(t0_sq, Rational(1, 2))) +
        weighted_t_euler(series);
    std::string mismatch;
    bool ok = lhs.equal_up_to(rhs, bound, &mismatch);
    report.items.push_back({"dF/dlogQ = t0^2/2 + sum k t_k d_k F", ok, mismatch});
  }

  {
    TruncatedSeries lhs = series.d_beta(algebra);
    TruncatedSeries rhs =
        TruncatedSeries::constant(bound, BgTerm::monomial(t0_cube, Rational(1, 6))) +
        weighted_t_euler(series).scale_term(algebra.t0());
    for (int k = 1; k < bound; ++k) {
      for (int l = 1; k + l <= bound; ++l) {
        rhs = rhs + series.d_k(k + l).mul_tk(l).mul_tk(k).scale(Rational(k * l, 2));
        rhs = rhs + (series.d_k(k) * series.d_k(l)).mul_tk(k + l).scale(Rational(k + l, 2));
      }
    }
    std::string mismatch;
    bool ok = lhs.equal_up_to(rhs, bound, &mismatch);
    report.items.push_back({"dF/dbeta = cut-and-join right-hand side", ok, mismatch});
  }
  return report;
}

CheckReport check_homogeneity(const TruncatedSeries& series,
                              const BackgroundAlgebra& algebra) {
  CheckReport report{"homogeneity", {}};
  const int bound = series.bound();

  TruncatedSeries euler(bound);
  for (int k = 1; k <= bound; ++k) {
    euler = euler + series.d_k(k).mul_tk(k) + series.dbar_k(k).mul_tbark(k);
  }

  if (algebra.family().kind == FamilyKind::hurwitz) {
    // 2F = tau d_tau F + t0 d0 F + sum (t_k d_k + tbar_k dbar_k) F,
    // with tau d_tau = -beta d_beta.
    BgMonomial beta;
    beta.beta_pow = 1;
    TruncatedSeries lhs = series.scale(2);
    TruncatedSeries rhs = series.d_beta(algebra).scale_term(BgTerm::monomial(beta, -1)) +
                          series.d_t0(algebra).scale_term(algebra.t0()) + euler;
    std::string mismatch;
    bool ok = lhs.equal_up_to(rhs, bound, &mismatch);
    report.items.push_back({"2F = -beta dF/dbeta + t0 d0 F + Euler", ok, mismatch});
    return report;
  }

  // 4 alpha F = -t0^2 + 2 alpha t0 d0 F + sum (2 alpha - k)(t_k d_k + tbar_k dbar_k) F.
  const Rational alpha = algebra.family().alpha;
  TruncatedSeries lhs = series.scale(4 * alpha);
  TruncatedSeries graded(bound);
  for (int k = 1; k <= bound; ++k) {
    graded = graded +
             (series.d_k(k).mul_tk(k) + series.dbar_k(k).mul_tbark(k))
                 .scale(2 * alpha - k);
  }
  TruncatedSeries rhs =
      TruncatedSeries::constant(bound, -(algebra.t0() * algebra.t0())) +
      series.d_t0(algebra).scale_term(algebra.t0()).scale(2 * alpha) + graded;
  std::string mismatch;
  bool ok = lhs.equal_up_to(rhs, bound, &mismatch);
  report.items.push_back(
      {"4*alpha*F = -t0^2 + 2*alpha*t0*d0F + graded Euler (alpha=" +
           rat_pretty(alpha) + ")",
       ok, mismatch});
  return report;
}

}  // namespace toda
