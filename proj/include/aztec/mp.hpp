#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aztec {

// Thin RAII wrapper over mpfr_t with value semantics. New values pick up the
// MPFR per-thread default precision; scope it with PrecisionGuard.
class MpFloat {
 public:
  MpFloat() { mpfr_init(v_); mpfr_set_zero(v_, 1); }
  MpFloat(int x) { mpfr_init(v_); mpfr_set_si(v_, x, MPFR_RNDN); }
  MpFloat(long x) { mpfr_init(v_); mpfr_set_si(v_, x, MPFR_RNDN); }
  MpFloat(double x) { mpfr_init(v_); mpfr_set_d(v_, x, MPFR_RNDN); }
  MpFloat(const mpq_class& q) { mpfr_init(v_); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  MpFloat(const MpFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  MpFloat(MpFloat&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  MpFloat& operator=(const MpFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  MpFloat& operator=(MpFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~MpFloat() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  MpFloat& operator+=(const MpFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpFloat& operator-=(const MpFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpFloat& operator*=(const MpFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpFloat& operator/=(const MpFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  friend MpFloat operator+(MpFloat a, const MpFloat& b) { return a += b; }
  friend MpFloat operator-(MpFloat a, const MpFloat& b) { return a -= b; }
  friend MpFloat operator*(MpFloat a, const MpFloat& b) { return a *= b; }
  friend MpFloat operator/(MpFloat a, const MpFloat& b) { return a /= b; }
  MpFloat operator-() const { MpFloat r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

  friend bool operator<(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator==(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  bool is_zero() const { return mpfr_zero_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  static MpFloat pi() { MpFloat r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  friend MpFloat abs(const MpFloat& x) { MpFloat r(x); mpfr_abs(r.v_, r.v_, MPFR_RNDN); return r; }
  friend MpFloat sqrt(const MpFloat& x) { MpFloat r(x); mpfr_sqrt(r.v_, r.v_, MPFR_RNDN); return r; }
  friend MpFloat pow_si(const MpFloat& x, long e) {
    MpFloat r;
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
  }
  friend void sin_cos(MpFloat& s, MpFloat& c, const MpFloat& x) {
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
  }

 private:
  mpfr_t v_;
};

struct PrecisionGuard {
  mpfr_prec_t old;
  explicit PrecisionGuard(long bits) : old(mpfr_get_default_prec()) {
    mpfr_set_default_prec(std::max<long>(bits, 64));
  }
  ~PrecisionGuard() { mpfr_set_default_prec(old); }
  PrecisionGuard(const PrecisionGuard&) = delete;
};

struct MpComplex {
  MpFloat re, im;

  MpComplex() = default;
  MpComplex(int x) : re((long)x) {}
  MpComplex(long x) : re(x) {}
  MpComplex(double x) : re(x) {}
  MpComplex(MpFloat r) : re(std::move(r)) {}
  MpComplex(MpFloat r, MpFloat i) : re(std::move(r)), im(std::move(i)) {}
  MpComplex(const mpq_class& r) : re(r) {}
  MpComplex(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  MpComplex operator-() const { return {-re, -im}; }
  MpComplex& operator+=(const MpComplex& o) { re += o.re; im += o.im; return *this; }
  MpComplex& operator-=(const MpComplex& o) { re -= o.re; im -= o.im; return *this; }
  MpComplex& operator*=(const MpComplex& o) {
    MpFloat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  MpComplex& operator/=(const MpComplex& o) {
    MpFloat d = o.re * o.re + o.im * o.im;
    if (d.is_zero()) throw std::domain_error("MpComplex: division by zero");
    MpFloat r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  friend MpComplex operator+(MpComplex a, const MpComplex& b) { return a += b; }
  friend MpComplex operator-(MpComplex a, const MpComplex& b) { return a -= b; }
  friend MpComplex operator*(MpComplex a, const MpComplex& b) { return a *= b; }
  friend MpComplex operator/(MpComplex a, const MpComplex& b) { return a /= b; }

  friend MpFloat abs(const MpComplex& z) { return sqrt(z.re * z.re + z.im * z.im); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  friend MpComplex pow_si(const MpComplex& z, long e) {
    if (e < 0) return MpComplex(1) / pow_si(z, -e);
    MpComplex out(1), base = z;
    unsigned long k = e;
    while (k) {
      if (k & 1) out *= base;
      base *= base;
      k >>= 1;
    }
    return out;
  }
};

// Nodes of the N-point trapezoid rule on a circle; returns unit-circle points.
// The rule (1/2pi i) * oint f(w) dw over |w - c| = rad is the plain average of
// f(c + rad*u) * rad*u over these points u.
std::vector<MpComplex> unit_circle_nodes(int n_nodes);

}  // namespace aztec
