#include "aztec/scalinglimits.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/airy.hpp>

#include <algorithm>
#include <cmath>

namespace aztec {

double ellipse_residual(double u, double v, double a) {
  double p = 1.0 / (1.0 + a * a);
  double d = v - u, s = u + v - 1.0;
  return d * d / (1.0 - p) + s * s / p - 1.0;
}

Quad ellipse_residual_exact(const Quad& u, const Quad& v, const mpq_class& a) {
  mpq_class s2 = u.s2;
  if (s2 != 1 + a * a) throw std::invalid_argument("ellipse_residual_exact: field mismatch");
  Quad one = Quad::rational(1, s2);
  Quad p = Quad::rational(mpq_class(1) / (1 + a * a), s2);
  Quad d = v - u;
  Quad s = u + v - one;
  return d * d / (one - p) + s * s / p - one;
}

EdgeParamsExact edge_params_exact(const mpq_class& k, const mpq_class& a) {
  mpq_class s2 = 1 + a * a;
  auto rat = [&](const mpq_class& r) { return Quad::rational(r, s2); };
  Quad rt = Quad::root(s2);   // sqrt(1+a^2)
  Quad one = rat(1);
  Quad ak = rat(a * k);
  Quad u = one / (rat((1 + a * a) * (1 + k * k)) + rat(2) * ak * rt);
  Quad v = one - rat(k * k) * u;
  Quad z_c = one / (rat(a) + rat(k) * rt);
  Quad beta = -(rat(a) * (rat(a) + rat(k) * rt));
  Quad alpha = one / (one - beta);
  Quad num = rat(a) * (rat(a) + rat(k) * rt) * (rat(a) + rat(k) * rt);
  Quad den = rat(1 + a * a) * (rat(a * k * k) + rat(k) * rt) *
             (rat((1 + a * a) * (1 + k * k)) + rat(2 * a * k) * rt);
  Quad lambda3 = num / den;
  if (k < 0) lambda3 = -lambda3;
  return {u, v, z_c, alpha, beta, lambda3};
}

EdgeParams edge_params(double k, double a) {
  double sq = std::sqrt(1.0 + a * a);
  BoundaryRegime regime;
  if (k > 0) {
    regime = BoundaryRegime::North;
  } else if (k > -sq / a && k < -a / sq) {
    regime = BoundaryRegime::South;
  } else {
    throw std::domain_error("edge_params: k outside the northern/southern ranges (OutOfRange)");
  }
  EdgeParams p{};
  p.k = k;
  p.a = a;
  p.u = 1.0 / ((1 + a * a) * (1 + k * k) + 2 * a * sq * k);
  p.v = 1.0 - k * k * p.u;
  p.z_c = 1.0 / (a + k * sq);
  p.beta = -a * (a + k * sq);
  p.alpha = 1.0 / (1.0 - p.beta);
  double lam3 = a * (a + k * sq) * (a + k * sq) /
                ((1 + a * a) * (a * k * k + k * sq) * ((1 + a * a) * (1 + k * k) + 2 * a * k * sq));
  if (k < 0) lam3 = -lam3;
  p.lambda = std::cbrt(lam3);
  p.regime = regime;
  return p;
}

std::complex<double> saddle_g_deriv(std::complex<double> z, double xi1, double xi2, double a,
                                    int order) {
  using C = std::complex<double>;
  C apz = a + z, az1 = a * z - 1.0;
  switch (order) {
    case 1: return xi2 / apz + (1 - xi2) * a / az1 - xi1 / z;
    case 2: return -xi2 / (apz * apz) - (1 - xi2) * a * a / (az1 * az1) + xi1 / (z * z);
    case 3:
      return 2.0 * xi2 / (apz * apz * apz) + 2.0 * (1 - xi2) * a * a * a / (az1 * az1 * az1) -
             2.0 * xi1 / (z * z * z);
  }
  throw std::invalid_argument("saddle_g_deriv: order must be 1, 2 or 3");
}

std::optional<std::complex<double>> omega_map(double xi1, double xi2, double a) {
  double t = xi2 - xi1 + a * a * (xi2 + xi1 - 1);
  double disc = 4 * a * a * (1 - xi1) * xi1 - t * t;
  if (disc <= 0) return std::nullopt;
  double re = (a * a * xi1 - xi1 + xi2 + a * a * xi2 - a * a) / (2 * a * (1 - xi1));
  double im = std::sqrt(disc) / (2 * a * (1 - xi1));
  return std::complex<double>(re, im);
}

double airy_ai(double x) {
  if (x < -40 || x > 40) throw std::domain_error("airy_ai: supported range is [-40,40] (OutOfRange)");
  return boost::math::airy_ai(x);
}

double airy_ai_prime(double x) {
  if (x < -40 || x > 40) throw std::domain_error("airy_ai_prime: OutOfRange");
  return boost::math::airy_ai_prime(x);
}

double airy_kernel_closed_form(double x, double y) {
  if (std::abs(x - y) < 1e-7) {
    double m = 0.5 * (x + y);
    double ai = airy_ai(m), aip = airy_ai_prime(m);
    return aip * aip - m * ai * ai;
  }
  return (airy_ai(x) * airy_ai_prime(y) - airy_ai_prime(x) * airy_ai(y)) / (x - y);
}

double airy_kernel(double x, double y) {
  // Tail beyond T: Ai(x+t)Ai(y+t) <= Ai(x+T)Ai(y+T) decay; with T = 40 - max(x,y)
  // capped at 16 the remainder is far below 1e-12 for arguments >= -6.
  double top = std::min(16.0, 40.0 - std::max(x, y));
  if (top <= 0) throw std::domain_error("airy_kernel: arguments too large");
  boost::math::quadrature::gauss<double, 30> quad;
  auto integrand = [&](double t) { return airy_ai(x + t) * airy_ai(y + t); };
  int panels = 4;
  double prev = 0, cur = 0;
  for (int iter = 0; iter < 8; ++iter) {
    cur = 0;
    double h = top / panels;
    for (int i = 0; i < panels; ++i)
      cur += quad.integrate(integrand, i * h, (i + 1) * h);
    if (iter > 0 && std::abs(cur - prev) < 1e-12 * (1 + std::abs(cur))) return cur;
    prev = cur;
    panels *= 2;
  }
  return cur;
}

double det_real(std::vector<std::vector<double>> m) {
  size_t sz = m.size();
  double det = 1.0;
  for (size_t c = 0; c < sz; ++c) {
    size_t p = c;
    double best = 0;
    for (size_t r = c; r < sz; ++r)
      if (std::abs(m[r][c]) > best) { best = std::abs(m[r][c]); p = r; }
    if (best == 0) return 0.0;
    if (p != c) { std::swap(m[p], m[c]); det = -det; }
    det *= m[c][c];
    for (size_t r = c + 1; r < sz; ++r) {
      double f = m[r][c] / m[c][c];
      if (f == 0) continue;
      for (size_t j = c; j < sz; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

double thinned_gen_functional(const DiscreteKernel& kernel, const std::vector<double>& phi,
                              double alpha) {
  size_t sz = kernel.size();
  if (phi.size() != sz) throw std::invalid_argument("thinned_gen_functional: size mismatch");
  std::vector<std::vector<double>> m(sz, std::vector<double>(sz));
  for (size_t i = 0; i < sz; ++i)
    for (size_t j = 0; j < sz; ++j)
      m[i][j] = (i == j ? 1.0 : 0.0) - phi[i] * alpha * kernel.k[i][j];
  return det_real(std::move(m));
}

double thickened_gen_functional(const DiscreteKernel& kernel, const std::vector<double>& phi,
                                double beta) {
  size_t sz = kernel.size();
  if (phi.size() != sz) throw std::invalid_argument("thickened_gen_functional: size mismatch");
  std::vector<std::vector<double>> m(sz, std::vector<double>(sz));
  for (size_t i = 0; i < sz; ++i) {
    double f = phi[i] / (1.0 - beta + beta * phi[i]);
    for (size_t j = 0; j < sz; ++j) m[i][j] = (i == j ? 1.0 : 0.0) - f * kernel.k[i][j];
  }
  return det_real(std::move(m));
}

ScaledKernelValue scaled_finite_kernel(LineKernelEvaluator& ev, const EdgeParams& p, int n,
                                       double xi, double eta) {
  if (p.regime != BoundaryRegime::North)
    throw std::domain_error("scaled_finite_kernel: defined for the northern regime (k > 0)");
  double scale = p.lambda * std::cbrt((double)n);
  int x1 = (int)std::lround(p.u * n - scale * xi);
  int x2 = (int)std::lround(p.u * n - scale * eta);
  if (x1 < 1 || x1 > n || x2 < 1 || x2 > n)
    throw std::out_of_range("scaled_finite_kernel: lattice point outside 1..n");
  KernelEntry l = ev.eval(x1, x2);
  double v = scale * std::pow(p.z_c, x1 - x2) * l.value.real();
  return {v, x1, x2, (p.u * n - x1) / scale, (p.u * n - x2) / scale};
}

double poisson_density(double xi) { return xi >= 1.0 ? 0.0 : std::sqrt(1.0 - xi); }

double poisson_c(double a, double k) {
  return std::pow(M_PI, 2.0 / 3.0) * std::cbrt(1.0 + 1.0 / k) * std::pow(a, 2.0 / 3.0);
}

// ---------------------------------------------------------------------------
// Gibbs
// ---------------------------------------------------------------------------

namespace {

struct GibbsInner {
  double a, ex, ey;   // e^{Bx}, e^{By}
  int k;              // w-exponent beta2 - alpha2

  // inner unit-circle integral in w at fixed z on the unit circle
  std::complex<double> operator()(std::complex<double> z) const {
    std::complex<double> iz = 1.0 / (z * ex);
    std::complex<double> A = std::complex<double>(0, a) - iz;
    std::complex<double> B = 1.0 - std::complex<double>(0, a) * iz;
    if (std::abs(A) < 1e-140) {
      // P ~ B/W: only the k = -1 Fourier mode survives
      return k == -1 ? std::complex<double>(ey) / B : std::complex<double>(0.0);
    }
    std::complex<double> wstar = -B / (A * ey);
    double mod = std::abs(wstar);
    if (k >= 0) return mod < 1.0 ? std::pow(wstar, k) / A : std::complex<double>(0.0);
    return mod > 1.0 ? -std::pow(wstar, k) / A : std::complex<double>(0.0);
  }

  double pole_modulus(double theta) const {
    std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> iz = 1.0 / (z * ex);
    std::complex<double> A = std::complex<double>(0, a) - iz;
    std::complex<double> B = 1.0 - std::complex<double>(0, a) * iz;
    if (std::abs(A) == 0.0) return 1e300;
    return std::abs(-B / (A * ey));
  }
};

}  // namespace

std::complex<double> gibbs_inverse_entry(int alpha1, int alpha2, int beta1, int beta2, double bx,
                                         double by, double a) {
  GibbsInner inner{a, std::exp(bx), std::exp(by), beta2 - alpha2};
  int j = alpha1 - beta1;

  // locate the contour crossings |w*(theta)| = 1
  const int scan = 4096;
  std::vector<double> cuts;
  double prev = inner.pole_modulus(0.0) - 1.0;
  double prev_th = 0.0;
  double min_abs = std::abs(prev);
  for (int i = 1; i <= scan; ++i) {
    double th = 2.0 * M_PI * i / scan;
    double cur = inner.pole_modulus(th) - 1.0;
    min_abs = std::min(min_abs, std::abs(cur));
    if ((prev < 0) != (cur < 0)) {
      double lo = prev_th, hi = th, flo = prev;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = inner.pole_modulus(mid) - 1.0;
        if ((flo < 0) != (fm < 0)) hi = mid; else { lo = mid; flo = fm; }
      }
      cuts.push_back(0.5 * (lo + hi));
    }
    prev = cur;
    prev_th = th;
  }
  // Tangency of |w*| = 1 signals parameters on a frozen-phase boundary: either
  // the modulus touches 1 without crossing, or rounding splits the touch into
  // a pair of nearly coincident crossings.
  double min_away = 1e300;
  for (int i = 0; i < scan; ++i) {
    double th = 2.0 * M_PI * i / scan;
    double dmin = 1e300;
    for (double c : cuts) {
      double dd = std::abs(th - c);
      dmin = std::min(dmin, std::min(dd, 2 * M_PI - dd));
    }
    if (dmin > 0.02) min_away = std::min(min_away, std::abs(inner.pole_modulus(th) - 1.0));
  }
  if (min_away < 1e-6)
    throw std::domain_error("gibbs_inverse_entry: spectral curve tangent to the torus (PoleOnContour)");
  for (size_t i = 0; i < cuts.size(); ++i) {
    double gap = (i + 1 < cuts.size()) ? cuts[i + 1] - cuts[i]
                                       : cuts.front() + 2 * M_PI - cuts.back();
    if (cuts.size() > 1 && gap < 1e-3)
      throw std::domain_error("gibbs_inverse_entry: degenerate contour crossing (PoleOnContour)");
  }

  std::vector<double> pts{0.0};
  for (double c : cuts) pts.push_back(c);
  pts.push_back(2.0 * M_PI);
  std::sort(pts.begin(), pts.end());

  auto integrand = [&](double th) {
    std::complex<double> z = std::polar(1.0, th);
    // (1/2pi i) * z^{j-1} I(z) dz = (1/2pi) z^j I(z) dtheta
    return std::pow(z, j) * inner(z);
  };
  std::complex<double> total = 0.0;
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double lo = pts[i], hi = pts[i + 1];
    if (hi - lo < 1e-13) continue;
    auto re = [&](double th) { return integrand(th).real(); };
    auto im = [&](double th) { return integrand(th).imag(); };
    total += std::complex<double>(GK::integrate(re, lo, hi, 10, 1e-12),
                                  GK::integrate(im, lo, hi, 10, 1e-12));
  }
  return total / (2.0 * M_PI);
}

namespace {

std::complex<double> bulk_entry_prediction(int alpha1, int alpha2, int beta1, int beta2, double r1,
                                           double r2, double a, int sign_candidate) {
  std::complex<double> kp =
      gibbs_inverse_entry(alpha1, alpha2, beta1, beta2, -std::log(r1), -std::log(r2), a);
  double flip = ((beta1 + beta2) % 2 + 2) % 2 == 1 ? -1.0 : 1.0;
  double pref = std::pow(r1, sign_candidate * alpha1 + beta1) * std::pow(r2, alpha2 - beta2);
  return flip * pref * kp;
}

}  // namespace

std::complex<double> gibbs_inverse_prediction(int alpha1, int alpha2, int beta1, int beta2,
                                              double xi1, double xi2, double a,
                                              int sign_candidate) {
  double r1 = std::sqrt(xi1 / (1 - xi1));
  double r2 = std::sqrt(xi2 / (1 - xi2));
  return bulk_entry_prediction(alpha1, alpha2, beta1, beta2, r1, r2, a, sign_candidate);
}

GibbsEdgeProbabilities gibbs_edge_probabilities(double xi1, double xi2, double a) {
  double r1 = std::sqrt(xi1 / (1 - xi1));
  double r2 = std::sqrt(xi2 / (1 - xi2));
  // edges around the white vertex of the base fundamental domain (alpha = 0),
  // with the finite-diamond Kasteleyn weights at w = (1,0).
  const std::complex<double> i_a(0, a);
  auto entry = [&](int b1, int b2, std::complex<double> k_orig) {
    std::complex<double> pred = bulk_entry_prediction(0, 0, b1, b2, r1, r2, a, -1);
    std::complex<double> p = k_orig * pred;
    return p.real();
  };
  GibbsEdgeProbabilities out{};
  out.north = entry(0, -1, -1.0);
  out.south = entry(1, 0, +1.0);
  out.west = entry(0, 0, i_a);
  out.east = entry(1, -1, -i_a);
  return out;
}

double fredholm_gap(GapMode mode, double param, double xi, double T) {
  double alpha = mode == GapMode::Thinned ? param : 1.0;
  if (mode == GapMode::Thinned && (param < 0 || param > 1))
    throw std::domain_error("fredholm_gap: alpha must lie in [0,1]");
  if (alpha == 0.0) return 1.0;
  boost::math::quadrature::gauss<double, 16> panel_rule;
  double prev = 0;
  for (int panels = 4; panels <= 512; panels *= 2) {
    // composite Gauss-Legendre Nystrom grid on [xi, xi+T]
    std::vector<double> xs, ws;
    double h = T / panels;
    auto abscissa = panel_rule.abscissa();
    auto weights = panel_rule.weights();
    for (int p = 0; p < panels; ++p) {
      double mid = xi + (p + 0.5) * h;
      for (size_t q = 0; q < abscissa.size(); ++q) {
        // boost stores nonnegative abscissae only; expand symmetrically
        double t = abscissa[q];
        double w = weights[q] * h / 2;
        if (t == 0.0) {
          xs.push_back(mid);
          ws.push_back(w);
        } else {
          xs.push_back(mid + t * h / 2);
          ws.push_back(w);
          xs.push_back(mid - t * h / 2);
          ws.push_back(w);
        }
      }
    }
    size_t sz = xs.size();
    std::vector<std::vector<double>> m(sz, std::vector<double>(sz));
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = i; j < sz; ++j) {
        double v = std::sqrt(ws[i] * ws[j]) * alpha * airy_kernel_closed_form(xs[i], xs[j]);
        m[i][j] = (i == j ? 1.0 : 0.0) - v;
        if (j > i) m[j][i] = -v;
      }
    double det = det_real(std::move(m));
    if (panels > 4 && std::abs(det - prev) < 1e-6 * (1 + std::abs(det))) return det;
    prev = det;
  }
  throw std::runtime_error("fredholm_gap: Nystrom grid did not converge (NotConverged)");
}

}  // namespace aztec
