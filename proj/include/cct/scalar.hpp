#pragma once

// Exact scalars: rationals (GMP) and the biquadratic field Q(sqrt2, sqrt3).

#include <cmath>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "cct/error.hpp"

namespace cct {

using Rational = mpq_class;

inline int sgn(const Rational& q) { return ::sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::Schema, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::Schema, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational coefficients.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational a, Rational b, Rational c = 0, Rational d = 0)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static FieldElement sqrt2() { return {0, 1, 0, 0}; }
  static FieldElement sqrt3() { return {0, 0, 1, 0}; }
  static FieldElement sqrt6() { return {0, 0, 0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  // True when the element lies in Q(sqrt2).
  bool in_q_sqrt2() const { return sgn(c_) == 0 && sgn(d_) == 0; }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
  }
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
  }
  FieldElement operator-() const { return {-a_, -b_, -c_, -d_}; }

  friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    if (x.in_q_sqrt2() && y.in_q_sqrt2()) {
      return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, 0, 0};
    }
    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2
    Rational a = x.a_ * y.a_ + 2 * x.b_ * y.b_ + 3 * x.c_ * y.c_ + 6 * x.d_ * y.d_;
    Rational b = x.a_ * y.b_ + x.b_ * y.a_ + 3 * (x.c_ * y.d_ + x.d_ * y.c_);
    Rational c = x.a_ * y.c_ + x.c_ * y.a_ + 2 * (x.b_ * y.d_ + x.d_ * y.b_);
    Rational d = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
  }

  FieldElement inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    // x = P + sqrt3 Q with P, Q in Q(sqrt2); 1/x = (P - sqrt3 Q) / (P^2 - 3 Q^2)
    Rational m = a_ * a_ + 2 * b_ * b_ - 3 * c_ * c_ - 6 * d_ * d_;
    Rational n = 2 * a_ * b_ - 6 * c_ * d_;
    // 1/(m + n sqrt2) = (m - n sqrt2) / (m^2 - 2 n^2)
    Rational den = m * m - 2 * n * n;
    Rational im = m / den, in = -n / den;
    FieldElement conj{a_, b_, -c_, -d_};
    return conj * FieldElement(im, in, 0, 0);
  }

  friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    if (y.is_rational()) return {x.a_ / y.a_, x.b_ / y.a_, x.c_ / y.a_, x.d_ / y.a_};
    return x * y.inverse();
  }

  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
  FieldElement& operator/=(const FieldElement& y) { return *this = *this / y; }

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

  // Galois conjugate flipping the signs of sqrt2 and/or sqrt3.
  FieldElement conjugate(bool flip2, bool flip3) const {
    Rational b = flip2 ? Rational(-b_) : b_;
    Rational c = flip3 ? Rational(-c_) : c_;
    Rational d = (flip2 != flip3) ? Rational(-d_) : d_;
    return {a_, std::move(b), std::move(c), std::move(d)};
  }

  // Field norm down to Q: product of the four conjugates.
  Rational norm() const {
    FieldElement p = *this * conjugate(true, false) * conjugate(false, true) * conjugate(true, true);
    return p.a_;
  }

  double to_double() const {
    return a_.get_d() + b_.get_d() * M_SQRT2 + c_.get_d() * std::sqrt(3.0) + d_.get_d() * std::sqrt(6.0);
  }

  int sign() const;
  std::string str() const;

 private:
  Rational a_, b_, c_, d_;
};

namespace detail {

// Exact sign of p + q sqrt2.
inline int sign_q2(const Rational& p, const Rational& q) {
  int sp = sgn(p), sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  Rational n = p * p - 2 * q * q;
  return sp * sgn(n);
}

}  // namespace detail

inline int FieldElement::sign() const {
  if (is_zero()) return 0;
  // Floating filter: accept when the value clearly exceeds the rounding error.
  double ta = a_.get_d(), tb = b_.get_d() * M_SQRT2, tc = c_.get_d() * std::sqrt(3.0),
         td = d_.get_d() * std::sqrt(6.0);
  double v = ta + tb + tc + td;
  double mag = std::fabs(ta) + std::fabs(tb) + std::fabs(tc) + std::fabs(td);
  if (std::isfinite(v) && std::isfinite(mag) && mag > 1e-280 && std::fabs(v) > 1e-12 * mag) {
    return v > 0 ? 1 : -1;
  }
  // x = P + sqrt3 Q; compare the two parts through P^2 - 3 Q^2 when their signs differ.
  int sP = detail::sign_q2(a_, b_), sQ = detail::sign_q2(c_, d_);
  if (sQ == 0) return sP;
  if (sP == 0 || sP == sQ) return sQ;
  Rational m = a_ * a_ + 2 * b_ * b_ - 3 * c_ * c_ - 6 * d_ * d_;
  Rational n = 2 * a_ * b_ - 6 * c_ * d_;
  return sP * detail::sign_q2(m, n);
}

inline std::string FieldElement::str() const {
  std::string out;
  auto term = [&](const Rational& q, const char* unit) {
    if (sgn(q) == 0) return;
    std::string s = q.get_str();
    if (!out.empty()) {
      if (sgn(q) < 0) {
        out += " - ";
        s = Rational(-q).get_str();
      } else {
        out += " + ";
      }
    }
    out += s;
    out += unit;
  };
  term(a_, "");
  term(b_, "*sqrt2");
  term(c_, "*sqrt3");
  term(d_, "*sqrt6");
  return out.empty() ? "0" : out;
}

enum class FieldOp { add, sub, mul, div };

inline FieldElement field_arith(const FieldElement& x, const FieldElement& y, FieldOp op) {
  switch (op) {
    case FieldOp::add: return x + y;
    case FieldOp::sub: return x - y;
    case FieldOp::mul: return x * y;
    case FieldOp::div: return x / y;
  }
  return {};
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.str(); }

inline int sign_exact(const FieldElement& x) { return x.sign(); }

inline int sgn(const FieldElement& x) { return x.sign(); }

inline FieldElement abs(const FieldElement& x) { return x.sign() < 0 ? -x : x; }

// "(p+q√2)/r" with r > 0 and integer p, q. Requires an element of Q(sqrt2).
inline std::string format_sqrt2(const FieldElement& x) {
  if (!x.in_q_sqrt2()) throw Error(ErrorCode::Precondition, "format_sqrt2 needs an element of Q(sqrt2)");
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), x.a().get_den_mpz_t(), x.b().get_den_mpz_t());
  mpz_class p = x.a().get_num() * (r / x.a().get_den());
  mpz_class q = x.b().get_num() * (r / x.b().get_den());
  if (q == 0) return x.a().get_str();
  std::string body;
  std::string qs = (abs(q) == 1) ? std::string() : mpz_class(abs(q)).get_str();
  if (p != 0) {
    body = p.get_str() + (q < 0 ? "-" : "+") + qs + "√2";
  } else {
    body = (q < 0 ? "-" : "") + qs + "√2";
  }
  if (r == 1) return body;
  return "(" + body + ")/" + r.get_str();
}

// Parses the format written by format_sqrt2 (also plain "p/q").
inline FieldElement parse_sqrt2(const std::string& text) {
  const std::string root = "√2";
  std::string s = text;
  mpz_class r = 1;
  if (!s.empty() && s.front() == '(') {
    auto close = s.find(")/");
    if (close == std::string::npos) throw Error(ErrorCode::Schema, "bad element '" + text + "'");
    r = mpz_class(s.substr(close + 2));
    s = s.substr(1, close - 1);
  }
  auto rp = s.find(root);
  if (rp == std::string::npos) {
    Rational v = parse_rational(s);
    return FieldElement(Rational(v / r));
  }
  // split "p±q√2" at the last sign before the root
  std::size_t split = std::string::npos;
  for (std::size_t i = rp; i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  std::string ps = split == std::string::npos ? "0" : s.substr(0, split);
  std::string qs = split == std::string::npos ? s.substr(0, rp) : s.substr(split, rp - split);
  if (qs.empty() || qs == "+") qs = "1";
  if (qs == "-") qs = "-1";
  if (qs.front() == '+') qs = qs.substr(1);
  Rational p(mpz_class(ps), r), q(mpz_class(qs), r);
  p.canonicalize();
  q.canonicalize();
  return {p, q, 0, 0};
}

}  // namespace cct
