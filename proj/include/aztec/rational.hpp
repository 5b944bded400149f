#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace aztec {

// Element of Q(i), the Gaussian rationals. Exact kernel and linear-algebra
// values live in this field whenever the weight a is rational.
struct GQ {
  mpq_class re{0}, im{0};

  GQ() = default;
  GQ(long r) : re(r) {}
  GQ(mpq_class r) : re(std::move(r)) {}
  GQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GQ i() { return GQ(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GQ conj() const { return GQ(re, -im); }
  mpq_class norm2() const { return re * re + im * im; }

  GQ operator-() const { return GQ(-re, -im); }
  GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
  GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
  GQ& operator*=(const GQ& o) {
    mpq_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GQ& operator/=(const GQ& o) {
    mpq_class d = o.norm2();
    if (d == 0) throw std::domain_error("GQ: division by zero");
    mpq_class r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }

  friend GQ operator+(GQ a, const GQ& b) { return a += b; }
  friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
  friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
  friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

// i^k for any integer k.
inline GQ ipow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GQ(1);
    case 1: return GQ::i();
    case 2: return GQ(-1);
    default: return -GQ::i();
  }
}

inline mpq_class qpow(const mpq_class& x, long e) {
  mpq_class out(1), base = x;
  bool invert = e < 0;
  unsigned long k = invert ? -(unsigned long)e : (unsigned long)e;
  while (k) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  if (invert) {
    if (out == 0) throw std::domain_error("qpow: zero to negative power");
    out = 1 / out;
  }
  return out;
}

// Domino weight: exact rational when given as "p/q" (or an integer), plain
// double otherwise. Rational weights put the whole pipeline in the exact regime.
struct Weight {
  std::optional<mpq_class> exact;
  double value = 1.0;

  Weight() = default;
  Weight(double v) : value(v) {}
  Weight(const mpq_class& q) : exact(q), value(q.get_d()) {}

  bool is_exact() const { return exact.has_value(); }
  const mpq_class& rat() const {
    if (!exact) throw std::logic_error("Weight: not in the exact regime");
    return *exact;
  }

  static Weight parse(const std::string& s);
  std::string str() const;
};

}  // namespace aztec
