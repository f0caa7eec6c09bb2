#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ckit/rational.hpp"

namespace ckit {

// Laurent polynomial in one variable with exact coefficients C.
// Canonical form: no zero coefficients stored.
template <class C>
class LaurentT {
 public:
  std::map<long long, C> terms;  // exponent -> coefficient

  LaurentT() = default;
  explicit LaurentT(long long k) {
    if (!(C(k) == C(0))) terms[0] = C(k);
  }
  explicit LaurentT(const C &c) {
    if (!(c == C(0))) terms[0] = c;
  }

  static LaurentT monomial(const C &c, long long exp) {
    LaurentT p;
    if (!(c == C(0))) p.terms[exp] = c;
    return p;
  }
  static LaurentT var(long long exp = 1) { return monomial(C(1), exp); }

  bool is_zero() const { return terms.empty(); }

  C coeff(long long exp) const {
    auto it = terms.find(exp);
    return it == terms.end() ? C(0) : it->second;
  }

  long long valuation() const {
    if (is_zero()) throw std::runtime_error("valuation of zero");
    return terms.begin()->first;
  }
  long long degree() const {
    if (is_zero()) throw std::runtime_error("degree of zero");
    return terms.rbegin()->first;
  }

  LaurentT operator-() const {
    LaurentT r;
    for (auto &[e, c] : terms) r.terms[e] = C(0) - c;
    return r;
  }

  LaurentT operator+(const LaurentT &o) const {
    LaurentT r = *this;
    for (auto &[e, c] : o.terms) {
      auto it = r.terms.find(e);
      if (it == r.terms.end()) {
        r.terms[e] = c;
      } else {
        it->second = it->second + c;
        if (it->second == C(0)) r.terms.erase(it);
      }
    }
    return r;
  }
  LaurentT operator-(const LaurentT &o) const { return *this + (-o); }

  LaurentT operator*(const LaurentT &o) const {
    LaurentT r;
    for (auto &[e1, c1] : terms)
      for (auto &[e2, c2] : o.terms) {
        C p = c1 * c2;
        if (p == C(0)) continue;
        auto it = r.terms.find(e1 + e2);
        if (it == r.terms.end()) {
          r.terms[e1 + e2] = p;
        } else {
          it->second = it->second + p;
          if (it->second == C(0)) r.terms.erase(it);
        }
      }
    return r;
  }

  LaurentT scaled(const C &s) const {
    LaurentT r;
    if (s == C(0)) return r;
    for (auto &[e, c] : terms) r.terms[e] = c * s;
    return r;
  }

  LaurentT shifted(long long k) const {
    LaurentT r;
    for (auto &[e, c] : terms) r.terms[e + k] = c;
    return r;
  }

  // Substitute var -> var^k (k != 0, possibly negative).
  LaurentT subst_pow(long long k) const {
    if (k == 0) throw std::runtime_error("subst_pow: zero power");
    LaurentT r;
    for (auto &[e, c] : terms) r.terms[e * k] = c;
    return r;
  }

  LaurentT pow(long long n) const {
    if (n < 0) throw std::runtime_error("pow: negative");
    LaurentT r(1);
    LaurentT b = *this;
    while (n > 0) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }

  bool operator==(const LaurentT &o) const { return terms == o.terms; }
  bool operator!=(const LaurentT &o) const { return !(*this == o); }

  C eval(const C &x) const {  // substitute a coefficient value for the variable
    C r(0);
    C xinv(0);
    for (auto &[e, c] : terms) {
      C p(1);
      if (e >= 0) {
        for (long long k = 0; k < e; ++k) p = p * x;
      } else {
        if (xinv == C(0)) xinv = C(1) / x;
        for (long long k = 0; k < -e; ++k) p = p * xinv;
      }
      r = r + c * p;
    }
    return r;
  }
};

template <class C>
LaurentT<C> operator*(const C &s, const LaurentT<C> &p) {
  return p.scaled(s);
}

// Quotient/remainder in the polynomial sense after clearing valuations.
// Requires b != 0. Returns q, r with a = q*b + r and deg r < deg b
// (valuation-shifted). Only used on honest polynomials internally.
template <class C>
void laurent_divmod(const LaurentT<C> &a, const LaurentT<C> &b, LaurentT<C> &q, LaurentT<C> &r) {
  if (b.is_zero()) throw std::runtime_error("divmod by zero");
  q = LaurentT<C>();
  r = a;
  long long db = b.degree();
  C lead = b.coeff(db);
  while (!r.is_zero() && r.degree() >= db) {
    long long sh = r.degree() - db;
    C f = r.coeff(r.degree()) / lead;
    LaurentT<C> t = LaurentT<C>::monomial(f, sh);
    q = q + t;
    r = r - t * b;
  }
}

template <class C>
LaurentT<C> laurent_divexact(const LaurentT<C> &a, const LaurentT<C> &b) {
  if (a.is_zero()) return a;
  long long va = a.valuation(), vb = b.valuation();
  LaurentT<C> q, r;
  laurent_divmod(a.shifted(-va), b.shifted(-vb), q, r);
  if (!r.is_zero()) throw std::runtime_error("divexact: not divisible");
  return q.shifted(va - vb);
}

// Monic gcd of the valuation-0 normalizations.
template <class C>
LaurentT<C> laurent_gcd(LaurentT<C> a, LaurentT<C> b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) a = b;
  a = a.shifted(-a.valuation());
  if (!b.is_zero()) {
    b = b.shifted(-b.valuation());
    while (!b.is_zero()) {
      LaurentT<C> q, r;
      laurent_divmod(a, b, q, r);
      a = b;
      b = r.is_zero() ? r : r.shifted(-r.valuation());
    }
  }
  return a.scaled(C(1) / a.coeff(a.degree()));
}

using LaurentPoly = LaurentT<Rational>;

// Bar involution q_s -> q_s^{-1}.
inline LaurentPoly bar(const LaurentPoly &p) { return p.subst_pow(-1); }

inline bool has_integer_coeffs(const LaurentPoly &p) {
  for (auto &[e, c] : p.terms)
    if (!is_integral(c)) return false;
  return true;
}

// Membership in 1 + q Z[q].
inline bool in_one_plus_qZq(const LaurentPoly &p) {
  if (p.coeff(0) != Rational(1)) return false;
  if (!has_integer_coeffs(p)) return false;
  return p.is_zero() ? false : p.valuation() >= 0;
}

inline std::string laurent_to_string(const LaurentPoly &p, const std::string &v = "q") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto &[e, c] : p.terms) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational ac = c > 0 ? c : Rational(-c);
    bool show_c = (ac != 1) || e == 0;
    if (show_c) os << rational_to_string(ac);
    if (e != 0) {
      if (show_c) os << "*";
      os << v;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

// Reduced fraction of Laurent polynomials in q_s.
// Canonical: denominator has valuation 0 and constant term 1, so
// "regular at q_s = 0" is the syntactic condition val(num) >= 0.
class RationalFunc {
 public:
  LaurentPoly num, den;

  RationalFunc() : num(), den(LaurentPoly(1)) {}
  RationalFunc(long long k) : num(LaurentPoly(k)), den(LaurentPoly(1)) {}
  RationalFunc(const Rational &r) : num(LaurentPoly::monomial(r, 0)), den(LaurentPoly(1)) {}
  explicit RationalFunc(const LaurentPoly &p) : num(p), den(LaurentPoly(1)) {}
  RationalFunc(const LaurentPoly &n, const LaurentPoly &d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den.is_zero()) throw std::runtime_error("RationalFunc: zero denominator");
    if (num.is_zero()) {
      den = LaurentPoly(1);
      return;
    }
    LaurentPoly g = laurent_gcd(num, den);
    num = laurent_divexact(num, g);
    den = laurent_divexact(den, g);
    long long vd = den.valuation();
    num = num.shifted(-vd);
    den = den.shifted(-vd);
    Rational c0 = den.coeff(0);
    num = num.scaled(Rational(1) / c0);
    den = den.scaled(Rational(1) / c0);
  }

  bool is_zero() const { return num.is_zero(); }

  RationalFunc operator+(const RationalFunc &o) const {
    return RationalFunc(num * o.den + o.num * den, den * o.den);
  }
  RationalFunc operator-(const RationalFunc &o) const {
    return RationalFunc(num * o.den - o.num * den, den * o.den);
  }
  RationalFunc operator-() const {
    RationalFunc r = *this;
    r.num = -r.num;
    return r;
  }
  RationalFunc operator*(const RationalFunc &o) const {
    return RationalFunc(num * o.num, den * o.den);
  }
  RationalFunc operator/(const RationalFunc &o) const {
    if (o.is_zero()) throw std::runtime_error("RationalFunc: division by zero");
    return RationalFunc(num * o.den, den * o.num);
  }
  bool operator==(const RationalFunc &o) const { return num == o.num && den == o.den; }
  bool operator!=(const RationalFunc &o) const { return !(*this == o); }

  bool regular_at_zero() const { return is_zero() || num.valuation() >= 0; }

  Rational value_at_zero() const {
    if (!regular_at_zero()) throw std::runtime_error("pole at q_s = 0");
    return num.coeff(0);  // den(0) == 1 by canonical form
  }

  bool is_polynomial() const { return den == LaurentPoly(1); }

  const LaurentPoly &as_polynomial() const {
    if (!is_polynomial()) throw std::runtime_error("not a Laurent polynomial: denominator " +
                                                   laurent_to_string(den));
    return num;
  }

  std::string str(const std::string &v = "q") const {
    if (is_polynomial()) return laurent_to_string(num, v);
    return "(" + laurent_to_string(num, v) + ")/(" + laurent_to_string(den, v) + ")";
  }
};

inline RationalFunc bar(const RationalFunc &f) {
  return RationalFunc(bar(f.num), bar(f.den));
}

}  // namespace ckit
