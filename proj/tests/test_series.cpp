#include <doctest.h>

#include <algorithm>

#include "toda/hurwitz.hpp"
#include "toda/series.hpp"

using namespace toda;

namespace {

BgMonomial e_beta(int e, int b) {
  BgMonomial m;
  m.e_pow = e;
  m.beta_pow = b;
  return m;
}

}  // namespace

TEST_CASE("background algebra differentiates the vacuum correctly") {
  BackgroundAlgebra hz(BackgroundFamily::hurwitz());
  // d0^2 of (beta t0^3/6 + t0^2 log Q / 2) = beta t0 + log Q.
  BgTerm second = hz.d_t0(hz.d_t0(hz.vacuum()));
  BgMonomial bt0;
  bt0.beta_pow = 1;
  bt0.t0_pow = 1;
  BgMonomial lq;
  lq.logq_pow = 1;
  BgTerm expected = BgTerm::monomial(bt0) + BgTerm::monomial(lq);
  CHECK(second == expected);

  // Closed-form derivative of powers of f matches repeated differentiation.
  for (int s = 1; s <= 4; ++s) {
    BgTerm acc = hz.f_pow(s);
    for (int r = 0; r <= 4; ++r) {
      CHECK(acc == hz.d0_f_pow(s, r));
      acc = hz.d_t0(acc);
    }
  }

  BackgroundAlgebra hom(BackgroundFamily::homogeneous(Rational(1, 2)));
  for (int s = 1; s <= 4; ++s) {
    BgTerm acc = hom.f_pow(s);
    for (int r = 0; r <= 4; ++r) {
      CHECK(acc == hom.d0_f_pow(s, r));
      acc = hom.d_t0(acc);
    }
  }
}

TEST_CASE("expansion reproduces the lattice two-point coefficients") {
  CoefficientCache cache;
  BackgroundAlgebra hz(BackgroundFamily::hurwitz());
  auto series = expand_tau(hz, 3, cache);

  CHECK(series.coeff(Partition({1}), Partition({1})) == BgTerm::monomial(e_beta(1, 0)));
  CHECK(series.coeff(Partition({2}), Partition({2})) ==
        BgTerm::monomial(e_beta(2, 0), 2));
  CHECK(series.coeff(Partition({1}), Partition({2})).is_zero());
  CHECK(series.coeff(Partition({2, 1}), Partition({2, 1})) ==
        BgTerm::monomial(e_beta(3, 2), 8));
  // (2*1/sigma) d0(f^3) = 6 beta E^3 at (t_3, tbar_{2,1}).
  CHECK(series.coeff(Partition({3}), Partition({2, 1})) ==
        BgTerm::monomial(e_beta(3, 1), 6));
}

TEST_CASE("the expansion coefficient equals the Hurwitz route term by term") {
  CoefficientCache cache;
  BackgroundAlgebra hz(BackgroundFamily::hurwitz());
  const int bound = 5;
  auto series = expand_tau(hz, bound, cache);
  for (int d = 1; d <= bound; ++d) {
    auto partitions = enumerate_partitions(d);
    for (const auto& a : partitions) {
      for (const auto& b : partitions) {
        int l = a.length() + b.length() - 2;
        Rational coefficient = Rational(rho(a) * rho(b)) *
                               hurwitz_genus0(a, b, cache) / Rational(factorial(l));
        CHECK(series.coeff(a, b) == BgTerm::monomial(e_beta(d, l), coefficient));
      }
    }
  }
}

TEST_CASE("differential operators commute on stored series") {
  CoefficientCache cache;
  BackgroundAlgebra hz(BackgroundFamily::hurwitz());
  auto series = expand_tau(hz, 4, cache);
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      auto kl = series.d_k(k).d_k(l);
      auto lk = series.d_k(l).d_k(k);
      CHECK(kl.equal_up_to(lk, 4 - k - l >= 0 ? 4 - k - l : 0));
      auto kbl = series.d_k(k).dbar_k(l);
      auto blk = series.dbar_k(l).d_k(k);
      CHECK(kbl.equal_up_to(blk, 4 - std::max(k, l)));
    }
  }
}

TEST_CASE("mixed-derivative identities hold at bound 3 for both families") {
  CoefficientCache cache;
  for (auto family : {BackgroundFamily::hurwitz(),
                      BackgroundFamily::homogeneous(Rational(2))}) {
    BackgroundAlgebra algebra(family);
    auto series = expand_tau(algebra, 3, cache);
    auto report = check_mixed_derivatives(series, algebra);
    INFO(family.name());
    CHECK(report.pass());
    CHECK(report.items.size() > 9);
  }
}

TEST_CASE("lattice equation leading order holds to depth 3") {
  CoefficientCache cache;
  BackgroundAlgebra hz(BackgroundFamily::hurwitz());
  auto series = expand_tau(hz, 4, cache);
  for (int depth = 0; depth <= 3; ++depth) {
    CHECK(check_toda_equation(series, hz, depth).pass());
  }
}

TEST_CASE("cut-and-join relations hold at bound 3") {
  CoefficientCache cache;
  BackgroundAlgebra hz(BackgroundFamily::hurwitz());
  auto series = expand_tau(hz, 3, cache);
  auto report = check_cut_and_join(series, hz);
  if (!report.pass()) {
    INFO(report.first_failure()->identity, ": ", report.first_failure()->detail);
    CHECK(false);
  }
  CHECK(report.pass());
}

TEST_CASE("homogeneity holds for both families at small bounds") {
  CoefficientCache cache;
  {
    BackgroundAlgebra hz(BackgroundFamily::hurwitz());
    auto series = expand_tau(hz, 3, cache);
    CHECK(check_homogeneity(series, hz).pass());
  }
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(1, 2)}) {
    BackgroundAlgebra hom(BackgroundFamily::homogeneous(alpha));
    auto series = expand_tau(hom, 2, cache);
    auto report = check_homogeneity(series, hom);
    if (!report.pass()) {
      INFO(report.first_failure()->detail);
      CHECK(false);
    }
    CHECK(report.pass());
  }
}

TEST_CASE("a corrupted coefficient is caught by the checks") {
  CoefficientCache cache;
  BackgroundAlgebra hz(BackgroundFamily::hurwitz());
  auto series = expand_tau(hz, 2, cache);
  auto broken = series;
  // A stray beta power breaks every identity that tracks the branch grading.
  broken.set(Partition({1}), Partition({1}), BgTerm::monomial(e_beta(1, 1)));
  CHECK(!check_mixed_derivatives(broken, hz).pass());
  CHECK(!check_homogeneity(broken, hz).pass());
}

TEST_CASE("vacuum-only expansion passes the vacuum identities") {
  CoefficientCache cache;
  BackgroundAlgebra hz(BackgroundFamily::hurwitz());
  auto series = expand_tau(hz, 0, cache);
  CHECK(check_homogeneity(series, hz).pass());
  CHECK(check_cut_and_join(series, hz).pass());
}
