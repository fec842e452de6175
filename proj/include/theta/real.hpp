#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace theta {

mpfr_prec_t decimal_digits_to_bits(unsigned digits);

// Arbitrary-precision real value backed by MPFR. New values are created at
// the process-wide default precision (set in decimal digits); arithmetic
// results carry the larger precision of their operands, so a temporary
// precision boost propagates through a computation.
class Real {
 public:
  static unsigned default_digits();
  static void set_default_digits(unsigned digits);
  static mpfr_prec_t default_prec();

  Real() { mpfr_init2(v_, default_prec()); mpfr_set_zero(v_, 1); }
  Real(long x) { mpfr_init2(v_, default_prec()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x) : Real(static_cast<long>(x)) {}
  Real(unsigned long x) { mpfr_init2(v_, default_prec()); mpfr_set_ui(v_, x, MPFR_RNDN); }
  Real(unsigned x) : Real(static_cast<unsigned long>(x)) {}
  Real(double x) { mpfr_init2(v_, default_prec()); mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit Real(const mpz_class& z) {
    mpfr_init2(v_, default_prec());
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  explicit Real(const std::string& decimal) {
    mpfr_init2(v_, default_prec());
    mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
  }

  static Real with_prec(mpfr_prec_t prec) {
    Real r(nullptr);
    mpfr_init2(r.v_, prec);
    mpfr_set_zero(r.v_, 1);
    return r;
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_nan() const { return mpfr_nan_p(v_); }

  Real& operator+=(const Real& o) { return apply_(mpfr_add, o); }
  Real& operator-=(const Real& o) { return apply_(mpfr_sub, o); }
  Real& operator*=(const Real& o) { return apply_(mpfr_mul, o); }
  Real& operator/=(const Real& o) { return apply_(mpfr_div, o); }

  friend Real operator+(const Real& a, const Real& b) { return bin_(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return bin_(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return bin_(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return bin_(mpfr_div, a, b); }
  friend Real operator-(const Real& a) {
    Real r = Real::with_prec(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

 private:
  explicit Real(std::nullptr_t) {}  // uninitialized; for with_prec only

  using mpfr_bin_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  Real& apply_(mpfr_bin_fn fn, const Real& o) {
    if (prec() < o.prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    fn(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  static Real bin_(mpfr_bin_fn fn, const Real& a, const Real& b) {
    Real r = Real::with_prec(std::max(a.prec(), b.prec()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

// Temporarily raises (or changes) the module default precision.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(Real::default_digits()) {
    Real::set_default_digits(digits);
  }
  ~PrecisionGuard() { Real::set_default_digits(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline Real unary_(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Real& x) {
  Real r = Real::with_prec(x.prec());
  fn(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline Real sqrt(const Real& x) { return unary_(mpfr_sqrt, x); }
inline Real exp(const Real& x) { return unary_(mpfr_exp, x); }
inline Real log(const Real& x) { return unary_(mpfr_log, x); }
inline Real sinh(const Real& x) { return unary_(mpfr_sinh, x); }
inline Real cosh(const Real& x) { return unary_(mpfr_cosh, x); }
inline Real tanh(const Real& x) { return unary_(mpfr_tanh, x); }
inline Real atanh(const Real& x) { return unary_(mpfr_atanh, x); }
inline Real abs(const Real& x) { return unary_(mpfr_abs, x); }
inline Real sech(const Real& x) { return Real(1) / cosh(x); }

inline Real pow(const Real& x, unsigned long e) {
  Real r = Real::with_prec(x.prec());
  mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, const Real& e) {
  Real r = Real::with_prec(std::max(x.prec(), e.prec()));
  mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
  return r;
}

inline Real pi() {
  Real r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

inline Real factorial(unsigned long n) {
  Real r;
  mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
  return r;
}

inline Real binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Real(b);
}

inline Real mul_z(const Real& x, const mpz_class& z) {
  Real r = Real::with_prec(x.prec());
  mpfr_mul_z(r.raw(), x.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

// Integer power with the 0^0 = 1 convention used throughout the operator
// expansions (mu = 0 must select the ell = 0 terms).
inline Real ipow(const Real& x, unsigned long e) {
  if (e == 0) return Real(1);
  return pow(x, e);
}

// Minimal complex value for the sector-restricted evaluations.
struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

inline Real abs(const Complex& z) {
  Real r = Real::with_prec(std::max(z.re.prec(), z.im.prec()));
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

inline Complex exp(const Complex& z) {
  Real m = exp(z.re);
  Real s = Real::with_prec(z.im.prec());
  Real c = Real::with_prec(z.im.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return {m * c, m * s};
}

}  // namespace theta
