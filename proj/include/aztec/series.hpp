#pragma once

#include <stdexcept>
#include <vector>

namespace aztec {

// Dense polynomial / truncated power-series helpers over any field type T
// (GQ for the exact regime, MpComplex for the numeric one). A vector holds
// coefficients by ascending power.

template <class T>
std::vector<T> poly_mul(const std::vector<T>& p, const std::vector<T>& q) {
  std::vector<T> out(p.size() + q.size() - 1, T(0));
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (size_t j = 0; j < q.size(); ++j) {
      if (q[j].is_zero()) continue;
      out[i + j] += p[i] * q[j];
    }
  }
  return out;
}

// (c0 + c1 t)^m, m >= 0, via the binomial recurrence.
template <class T>
std::vector<T> binom_poly(const T& c0, const T& c1, long m) {
  if (m < 0) throw std::invalid_argument("binom_poly: negative exponent");
  std::vector<T> out(m + 1);
  // out[k] = C(m,k) c0^{m-k} c1^k
  T cur = T(1);
  for (long j = 0; j < m; ++j) cur *= c0;
  for (long k = 0; k <= m; ++k) {
    out[k] = cur;
    if (k < m) {
      cur *= T(m - k);
      cur *= c1;
      cur /= T(k + 1);
      cur /= c0;
    }
  }
  return out;
}

template <class T>
std::vector<T> series_mul(const std::vector<T>& p, const std::vector<T>& q, size_t order) {
  std::vector<T> out(order, T(0));
  for (size_t i = 0; i < p.size() && i < order; ++i) {
    if (p[i].is_zero()) continue;
    for (size_t j = 0; j < q.size() && i + j < order; ++j) {
      if (q[j].is_zero()) continue;
      out[i + j] += p[i] * q[j];
    }
  }
  return out;
}

// (c0 + c1 t)^m as a series in t to 'order' terms; m any integer, c0 != 0.
template <class T>
std::vector<T> binom_series(const T& c0, const T& c1, long m, size_t order) {
  std::vector<T> out(order, T(0));
  if (order == 0) return out;
  T cur = T(1);
  if (m >= 0) {
    for (long j = 0; j < m; ++j) cur *= c0;
  } else {
    T inv = T(1) / c0;
    for (long j = 0; j < -m; ++j) cur *= inv;
  }
  out[0] = cur;
  for (size_t k = 1; k < order; ++k) {
    if (m >= 0 && (long)k > m) break;   // polynomial cut-off
    cur *= T(m - (long)(k - 1));
    cur *= c1;
    cur /= T((long)k);
    cur /= c0;
    out[k] = cur;
  }
  return out;
}

template <class T>
std::vector<T> binom_series(const T& c0, long m, size_t order) {
  return binom_series(c0, T(1), m, order);
}

// Laurent series around 0 on a finite window: sum c[k] z^{lo+k}.
template <class T>
struct Laurent {
  long lo = 0;
  std::vector<T> c;

  long hi() const { return lo + (long)c.size() - 1; }

  const T coeff(long power) const {
    if (power < lo || power > hi()) return T(0);
    return c[power - lo];
  }
};

template <class T>
Laurent<T> laurent_mul(const Laurent<T>& a, const Laurent<T>& b, long lo_keep, long hi_keep) {
  Laurent<T> out{lo_keep, std::vector<T>(hi_keep - lo_keep + 1, T(0))};
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      long p = a.lo + (long)i + b.lo + (long)j;
      if (p < lo_keep || p > hi_keep || b.c[j].is_zero()) continue;
      out.c[p - lo_keep] += a.c[i] * b.c[j];
    }
  }
  return out;
}

// Coefficient of z^{-1}. Coefficients below the window start are exact zeros
// (series are built upward from their true leading exponent), so a window
// starting above -1 yields residue 0; a window truncated below -1 has lost
// the coefficient and raises TruncationTooShort (std::out_of_range).
template <class T>
T residue_at_zero(const Laurent<T>& s) {
  if (s.hi() < -1)
    throw std::out_of_range("residue_at_zero: truncation window does not cover z^-1");
  if (s.lo > -1) return T(0);
  return s.coeff(-1);
}

}  // namespace aztec
