#pragma once

#include <compare>
#include <map>
#include <string>

#include "toda/rational.hpp"

namespace toda {

enum class FamilyKind { hurwitz, homogeneous };

// The concrete background f(t0) a symmetric solution is built on.
//   hurwitz:      f(t0) = Q exp(beta t0), Q and beta formal symbols;
//   homogeneous:  f(t0) = (alpha t0)^(1/alpha), alpha a fixed positive
//                 rational folded into the coefficients.
struct BackgroundFamily {
  FamilyKind kind = FamilyKind::hurwitz;
  Rational alpha = 1;

  static BackgroundFamily hurwitz() { return {FamilyKind::hurwitz, 1}; }
  static BackgroundFamily homogeneous(const Rational& a);

  std::string name() const;
};

// One monomial of the coefficient algebra.
//
// Hurwitz family:     E^e beta^b t0^c (log Q)^g   with E = Q e^{beta t0};
// homogeneous family: u^q (log u)^h               with u = alpha t0.
//
// The E (respectively u) pairing keeps the algebra closed under d/dt0,
// d/dbeta and d/dlogQ with integer bookkeeping everywhere except the
// rational u exponent.
struct BgMonomial {
  int e_pow = 0;
  int beta_pow = 0;
  int t0_pow = 0;
  int logq_pow = 0;
  Rational u_pow = 0;
  int logu_pow = 0;

  friend bool operator==(const BgMonomial&, const BgMonomial&) = default;
  friend bool operator<(const BgMonomial& a, const BgMonomial& b);

  std::string to_string() const;
};

// A finite rational combination of monomials.  Zero coefficients are never
// stored, so equality of the underlying maps is equality in the algebra.
class BgTerm {
 public:
  BgTerm() = default;
  static BgTerm constant(const Rational& c);
  static BgTerm monomial(const BgMonomial& m, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<BgMonomial, Rational>& terms() const { return terms_; }

  void add(const BgMonomial& m, const Rational& c);
  BgTerm& operator+=(const BgTerm& other);
  BgTerm& operator-=(const BgTerm& other);
  BgTerm operator+(const BgTerm& other) const;
  BgTerm operator-(const BgTerm& other) const;
  BgTerm operator*(const BgTerm& other) const;
  BgTerm operator*(const Rational& c) const;
  BgTerm operator-() const;

  friend bool operator==(const BgTerm&, const BgTerm&) = default;

  std::string to_string() const;  // "0" when empty

 private:
  std::map<BgMonomial, Rational> terms_;
};

// Family-aware operations on the algebra.
class BackgroundAlgebra {
 public:
  explicit BackgroundAlgebra(const BackgroundFamily& fam) : fam_(fam) {}
  const BackgroundFamily& family() const { return fam_; }

  BgTerm f() const;                        // f(t0)
  BgTerm f_pow(int s) const;               // f^s, s >= 1
  BgTerm d0_f_pow(int s, int r) const;     // d/dt0 applied r times to f^s
  BgTerm vacuum() const;                   // F(t0), the vacuum coefficient
  BgTerm t0() const;                       // t0 as an algebra element

  BgTerm d_t0(const BgTerm& x) const;
  BgTerm d_beta(const BgTerm& x) const;    // hurwitz family only
  BgTerm d_logq(const BgTerm& x) const;    // hurwitz family only

 private:
  BackgroundFamily fam_;
};

}  // namespace toda
