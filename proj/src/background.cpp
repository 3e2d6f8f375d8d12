#include "toda/background.hpp"

#include <tuple>

#include "toda/errors.hpp"

namespace toda {

BackgroundFamily BackgroundFamily::homogeneous(const Rational& a) {
  if (a <= 0) throw DomainError("homogeneous family needs alpha > 0");
  return {FamilyKind::homogeneous, a};
}

std::string BackgroundFamily::name() const {
  return kind == FamilyKind::hurwitz ? "hurwitz" : "homogeneous";
}

bool operator<(const BgMonomial& a, const BgMonomial& b) {
  auto ta = std::tie(a.e_pow, a.beta_pow, a.t0_pow, a.logq_pow, a.logu_pow);
  auto tb = std::tie(b.e_pow, b.beta_pow, b.t0_pow, b.logq_pow, b.logu_pow);
  if (ta != tb) return ta < tb;
  return a.u_pow < b.u_pow;
}

std::string BgMonomial::to_string() const {
  std::string out;
  auto append = [&](const std::string& sym, const std::string& pow) {
    if (!out.empty()) out += '*';
    out += sym;
    if (pow != "1") out += "^" + pow;
  };
  if (e_pow) append("(Q*exp(beta*t0))", std::to_string(e_pow));
  if (beta_pow) append("beta", std::to_string(beta_pow));
  if (t0_pow) append("t0", std::to_string(t0_pow));
  if (logq_pow) append("log(Q)", std::to_string(logq_pow));
  if (u_pow != 0) append("(alpha*t0)", rat_pretty(u_pow));
  if (logu_pow) append("log(alpha*t0)", std::to_string(logu_pow));
  return out.empty() ? "1" : out;
}

BgTerm BgTerm::constant(const Rational& c) {
  BgTerm t;
  t.add(BgMonomial{}, c);
  return t;
}

BgTerm BgTerm::monomial(const BgMonomial& m, const Rational& c) {
  BgTerm t;
  t.add(m, c);
  return t;
}

void BgTerm::add(const BgMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BgTerm& BgTerm::operator+=(const BgTerm& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

BgTerm& BgTerm::operator-=(const BgTerm& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

BgTerm BgTerm::operator+(const BgTerm& other) const {
  BgTerm out = *this;
  out += other;
  return out;
}

BgTerm BgTerm::operator-(const BgTerm& other) const {
  BgTerm out = *this;
  out -= other;
  return out;
}

BgTerm BgTerm::operator*(const BgTerm& other) const {
  BgTerm out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      BgMonomial m{ma.e_pow + mb.e_pow,       ma.beta_pow + mb.beta_pow,
                   ma.t0_pow + mb.t0_pow,     ma.logq_pow + mb.logq_pow,
                   ma.u_pow + mb.u_pow,       ma.logu_pow + mb.logu_pow};
      out.add(m, ca * cb);
    }
  }
  return out;
}

BgTerm BgTerm::operator*(const Rational& c) const {
  BgTerm out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.add(m, coeff * c);
  return out;
}

BgTerm BgTerm::operator-() const { return *this * Rational(-1); }

std::string BgTerm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += rat_pretty(c);
    if (!(m == BgMonomial{})) out += "*" + m.to_string();
  }
  return out;
}

BgTerm BackgroundAlgebra::f() const { return f_pow(1); }

BgTerm BackgroundAlgebra::f_pow(int s) const {
  if (s < 1) throw DomainError("f_pow needs s >= 1");
  BgMonomial m;
  if (fam_.kind == FamilyKind::hurwitz) {
    m.e_pow = s;
  } else {
    m.u_pow = Rational(s) / fam_.alpha;
  }
  return BgTerm::monomial(m);
}

BgTerm BackgroundAlgebra::d0_f_pow(int s, int r) const {
  if (s < 1 || r < 0) throw DomainError("d0_f_pow needs s >= 1, r >= 0");
  BgMonomial m;
  if (fam_.kind == FamilyKind::hurwitz) {
    // d0^r (E^s) = (s beta)^r E^s.
    m.e_pow = s;
    m.beta_pow = r;
    return BgTerm::monomial(m, Rational(int_pow(s, r)));
  }
  // d0^r (u^{s/alpha}) = q(q-1)..(q-r+1) alpha^r u^{q-r},  q = s/alpha.
  Rational q = Rational(s) / fam_.alpha;
  Rational coeff = rational_pow(fam_.alpha, r);
  for (int t = 0; t < r; ++t) coeff *= q - t;
  m.u_pow = q - r;
  return BgTerm::monomial(m, coeff);
}

BgTerm BackgroundAlgebra::vacuum() const {
  BgTerm out;
  if (fam_.kind == FamilyKind::hurwitz) {
    // beta t0^3/6 + (t0^2/2) log Q.
    BgMonomial cubic;
    cubic.beta_pow = 1;
    cubic.t0_pow = 3;
    out.add(cubic, Rational(1, 6));
    BgMonomial quad;
    quad.t0_pow = 2;
    quad.logq_pow = 1;
    out.add(quad, Rational(1, 2));
    return out;
  }
  // t0^2/(2 alpha) log(alpha t0) - 3 t0^2/(4 alpha)
  //   = u^2 log(u)/(2 alpha^3) - 3 u^2/(4 alpha^3).
  Rational a3 = rational_pow(fam_.alpha, 3);
  BgMonomial with_log;
  with_log.u_pow = 2;
  with_log.logu_pow = 1;
  out.add(with_log, Rational(1, 2) / a3);
  BgMonomial plain;
  plain.u_pow = 2;
  out.add(plain, Rational(-3, 4) / a3);
  return out;
}

BgTerm BackgroundAlgebra::t0() const {
  BgMonomial m;
  if (fam_.kind == FamilyKind::hurwitz) {
    m.t0_pow = 1;
    return BgTerm::monomial(m);
  }
  m.u_pow = 1;
  return BgTerm::monomial(m, Rational(1) / fam_.alpha);
}

BgTerm BackgroundAlgebra::d_t0(const BgTerm& x) const {
  BgTerm out;
  for (const auto& [m, c] : x.terms()) {
    if (m.e_pow) {
      BgMonomial n = m;
      ++n.beta_pow;
      out.add(n, c * m.e_pow);
    }
    if (m.t0_pow) {
      BgMonomial n = m;
      --n.t0_pow;
      out.add(n, c * m.t0_pow);
    }
    if (m.u_pow != 0) {
      BgMonomial n = m;
      n.u_pow -= 1;
      out.add(n, c * m.u_pow * fam_.alpha);
    }
    if (m.logu_pow) {
      BgMonomial n = m;
      --n.logu_pow;
      n.u_pow -= 1;
      out.add(n, c * m.logu_pow * fam_.alpha);
    }
  }
  return out;
}

BgTerm BackgroundAlgebra::d_beta(const BgTerm& x) const {
  if (fam_.kind != FamilyKind::hurwitz) {
    throw DomainError("d_beta is defined for the hurwitz family only");
  }
  BgTerm out;
  for (const auto& [m, c] : x.terms()) {
    if (m.beta_pow) {
      BgMonomial n = m;
      --n.beta_pow;
      out.add(n, c * m.beta_pow);
    }
    if (m.e_pow) {
      BgMonomial n = m;
      ++n.t0_pow;
      out.add(n, c * m.e_pow);
    }
  }
  return out;
}

BgTerm BackgroundAlgebra::d_logq(const BgTerm& x) const {
  if (fam_.kind != FamilyKind::hurwitz) {
    throw DomainError("d_logq is defined for the hurwitz family only");
  }
  BgTerm out;
  for (const auto& [m, c] : x.terms()) {
    if (m.e_pow) out.add(m, c * m.e_pow);
    if (m.logq_pow) {
      BgMonomial n = m;
      --n.logq_pow;
      out.add(n, c * m.logq_pow);
    }
  }
  return out;
}

}  // namespace toda
