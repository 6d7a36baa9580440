#pragma once

// MPFR-backed floating scalar with per-value precision (round to nearest).

#include <algorithm>
#include <cstdlib>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "cct/scalar.hpp"

namespace cct {

inline constexpr long kDefaultPrecision = 256;

class BigFloat {
 public:
  BigFloat() : BigFloat(0L, kDefaultPrecision) {}
  BigFloat(long v, long prec = kDefaultPrecision) {  // NOLINT(google-explicit-constructor)
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
  }
  BigFloat(int v) : BigFloat(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit BigFloat(double v, long prec = kDefaultPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, v, MPFR_RNDN);
  }
  explicit BigFloat(const Rational& q, long prec = kDefaultPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const std::string& s, long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  static BigFloat zero(long prec) { return BigFloat(0L, prec); }
  static BigFloat pi(long prec) {
    BigFloat r(0L, prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  // Scientific notation with the given number of significant digits.
  std::string str(int digits = 0) const {
    if (digits <= 0) digits = static_cast<int>(precision() * 0.30103) + 1;
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

#define CCT_BF_BINOP(op, fn)                                                 \
  friend BigFloat operator op(const BigFloat& x, const BigFloat& y) {        \
    BigFloat r(0L, std::max(x.precision(), y.precision()));                 \
    fn(r.v_, x.v_, y.v_, MPFR_RNDN);                                         \
    return r;                                                                \
  }                                                                          \
  BigFloat& operator op##=(const BigFloat& y) { return *this = *this op y; }
  CCT_BF_BINOP(+, mpfr_add)
  CCT_BF_BINOP(-, mpfr_sub)
  CCT_BF_BINOP(*, mpfr_mul)
  CCT_BF_BINOP(/, mpfr_div)
#undef CCT_BF_BINOP

  BigFloat operator-() const {
    BigFloat r(0L, precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
  friend bool operator>(const BigFloat& x, const BigFloat& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
  friend bool operator<=(const BigFloat& x, const BigFloat& y) { return mpfr_lessequal_p(x.v_, y.v_) != 0; }
  friend bool operator>=(const BigFloat& x, const BigFloat& y) { return mpfr_greaterequal_p(x.v_, y.v_) != 0; }
  friend bool operator==(const BigFloat& x, const BigFloat& y) { return mpfr_equal_p(x.v_, y.v_) != 0; }
  friend bool operator!=(const BigFloat& x, const BigFloat& y) { return !(x == y); }

  template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
  BigFloat apply() const {
    BigFloat r(0L, precision());
    F(r.v_, v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

inline BigFloat sqrt(const BigFloat& x) { return x.apply<mpfr_sqrt>(); }
inline BigFloat sin(const BigFloat& x) { return x.apply<mpfr_sin>(); }
inline BigFloat cos(const BigFloat& x) { return x.apply<mpfr_cos>(); }
inline BigFloat atan(const BigFloat& x) { return x.apply<mpfr_atan>(); }
inline BigFloat acos(const BigFloat& x) { return x.apply<mpfr_acos>(); }
inline BigFloat abs(const BigFloat& x) { return x.apply<mpfr_abs>(); }
inline BigFloat cbrt(const BigFloat& x) { return x.apply<mpfr_cbrt>(); }
inline int sgn(const BigFloat& x) { return x.sign(); }

inline BigFloat pow(const BigFloat& x, const Rational& e) {
  BigFloat ef(e, x.precision());
  BigFloat r(0L, x.precision());
  mpfr_pow(r.get(), x.get(), ef.get(), MPFR_RNDN);
  return r;
}

// Value of x rounded to `precision` bits. The working precision is raised
// until cancellation between the four terms cannot affect the rounding.
inline BigFloat approx(const FieldElement& x, long precision) {
  if (precision < 16) throw Error(ErrorCode::Precondition, "approx needs at least 16 bits");
  if (x.is_zero()) return BigFloat(0L, precision);
  for (long work = precision + 64;; work *= 2) {
    BigFloat s2 = sqrt(BigFloat(2L, work)), s3 = sqrt(BigFloat(3L, work)), s6 = sqrt(BigFloat(6L, work));
    BigFloat terms[4] = {BigFloat(x.a(), work), BigFloat(x.b(), work) * s2, BigFloat(x.c(), work) * s3,
                         BigFloat(x.d(), work) * s6};
    BigFloat v = terms[0] + terms[1] + terms[2] + terms[3];
    long emax = mpfr_get_emin();
    for (auto& t : terms) {
      if (!t.is_zero()) emax = std::max<long>(emax, mpfr_get_exp(t.get()));
    }
    // lost bits from cancellation must stay below the guard bits
    if (!v.is_zero() && emax - mpfr_get_exp(v.get()) < work - precision - 8) {
      BigFloat out(0L, precision);
      mpfr_set(out.get(), v.get(), MPFR_RNDN);
      return out;
    }
  }
}

}  // namespace cct
