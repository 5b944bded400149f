#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "aztec/kernelcalc.hpp"
#include "aztec/rational.hpp"

namespace aztec {

// Elements p + q*sqrt(s2) of the real quadratic field Q(sqrt(1+a^2)); the
// algebraic scaling-limit parameters (u, v, z_c, alpha, beta, lambda^3) all
// live here for rational a and k, which keeps the identity tests exact.
struct Quad {
  mpq_class p, q, s2;   // value = p + q*sqrt(s2)

  Quad() : p(0), q(0), s2(0) {}
  Quad(mpq_class rational, mpq_class root_coeff, mpq_class root_square)
      : p(std::move(rational)), q(std::move(root_coeff)), s2(std::move(root_square)) {}
  static Quad rational(const mpq_class& r, const mpq_class& s2) { return {r, 0, s2}; }
  static Quad root(const mpq_class& s2) { return {0, 1, s2}; }

  bool is_zero() const { return p == 0 && q == 0; }
  Quad operator-() const { return {-p, -q, s2}; }
  Quad& operator+=(const Quad& o) { p += o.p; q += o.q; return *this; }
  Quad& operator-=(const Quad& o) { p -= o.p; q -= o.q; return *this; }
  Quad& operator*=(const Quad& o) {
    mpq_class np = p * o.p + q * o.q * s2;
    q = p * o.q + q * o.p;
    p = std::move(np);
    return *this;
  }
  Quad& operator/=(const Quad& o) {
    mpq_class d = o.p * o.p - o.q * o.q * s2;
    if (d == 0) throw std::domain_error("Quad: division by zero");
    mpq_class np = (p * o.p - q * o.q * s2) / d;
    q = (q * o.p - p * o.q) / d;
    p = std::move(np);
    return *this;
  }
  friend Quad operator+(Quad a, const Quad& b) { return a += b; }
  friend Quad operator-(Quad a, const Quad& b) { return a -= b; }
  friend Quad operator*(Quad a, const Quad& b) { return a *= b; }
  friend Quad operator/(Quad a, const Quad& b) { return a /= b; }
  friend bool operator==(const Quad& a, const Quad& b) { return a.p == b.p && a.q == b.q; }
  double to_double() const { return p.get_d() + q.get_d() * std::sqrt(s2.get_d()); }
};

// ---------------------------------------------------------------------------
// Arctic ellipse and edge parameters
// ---------------------------------------------------------------------------

// (v-u)^2/(1-p) + (u+v-1)^2/p - 1 with p = 1/(1+a^2): negative inside, zero on,
// positive outside the arctic ellipse.
double ellipse_residual(double u, double v, double a);
Quad ellipse_residual_exact(const Quad& u, const Quad& v, const mpq_class& a);

enum class BoundaryRegime { North, South };

struct EdgeParams {
  double k, a;
  double u, v;        // u(k), v(k) = 1 - k^2 u(k)
  double z_c;         // double zero of the saddle function
  double alpha, beta; // thinning / thickening parameters, alpha = 1/(1-beta)
  double lambda;      // positive cube root of lambda^3
  BoundaryRegime regime;
};

// Exact counterparts over Q(sqrt(1+a^2)) for identity tests.
struct EdgeParamsExact {
  Quad u, v, z_c, alpha, beta, lambda3;
};

// k > 0: northern boundary; k in (-sqrt(1+a^2)/a, -a/sqrt(1+a^2)): southern.
// OutOfRange (std::domain_error) otherwise.
EdgeParams edge_params(double k, double a);
EdgeParamsExact edge_params_exact(const mpq_class& k, const mpq_class& a);

// Saddle function g(z; xi) = xi2 log(a+z) + (1-xi2) log(az-1) - xi1 log z and
// derivatives (complex logs; used only through derivatives, branch-free).
std::complex<double> saddle_g_deriv(std::complex<double> z, double xi1, double xi2, double a,
                                    int order);   // order in {1,2,3}

// Unique upper-half-plane root of g'(z; xi) = 0, defined inside the ellipse.
// Returns nullopt (OutsideLiquidRegion) when the discriminant is <= 0.
std::optional<std::complex<double>> omega_map(double xi1, double xi2, double a);

// ---------------------------------------------------------------------------
// Airy function and kernel
// ---------------------------------------------------------------------------

// Ai(x) on [-40, 40] (OutOfRange outside) to at least 1e-12 absolute accuracy.
double airy_ai(double x);
double airy_ai_prime(double x);

// K_Ai(x,y) = int_0^inf Ai(x+t)Ai(y+t) dt by panel Gauss-Legendre quadrature
// with node doubling and a tail cutoff; the closed two-point form is kept
// separately as a test oracle.
double airy_kernel(double x, double y);
double airy_kernel_closed_form(double x, double y);   // (Ai Ai' - Ai' Ai)/(x-y)

// ---------------------------------------------------------------------------
// Thinned / thickened generating functionals on finite kernels
// ---------------------------------------------------------------------------

struct DiscreteKernel {
  std::vector<std::vector<double>> k;
  size_t size() const { return k.size(); }
};

// det(I - diag(phi)*alpha*K) over the finite ground set.
double thinned_gen_functional(const DiscreteKernel& kernel, const std::vector<double>& phi,
                              double alpha);

// det(I - diag(phi/(1-beta+beta*phi))*K).
double thickened_gen_functional(const DiscreteKernel& kernel, const std::vector<double>& phi,
                                double beta);

double det_real(std::vector<std::vector<double>> m);

// ---------------------------------------------------------------------------
// Finite-n vs limit bridges
// ---------------------------------------------------------------------------

// lambda n^{1/3} z_c^{x1-x2} L(x1,x2) at x_i = round(u(k)n - lambda n^{1/3} xi_i),
// which converges to alpha*K_Ai; the sign is fixed by diagonal positivity.
// Returns the rescaled kernel value together with the lattice points used.
struct ScaledKernelValue {
  double value;
  int x1, x2;
  double xi_eff, eta_eff;   // grid positions after rounding
};
ScaledKernelValue scaled_finite_kernel(LineKernelEvaluator& ev, const EdgeParams& p, int n,
                                       double xi, double eta);

// Poisson limit: density sqrt((1-xi)_+) and c(a) = pi^{2/3}(1+1/k)^{1/3}a^{2/3}.
double poisson_density(double xi);
double poisson_c(double a, double k);

// ---------------------------------------------------------------------------
// Bulk Gibbs measure
// ---------------------------------------------------------------------------

// K_mu^{-1}((2a1+1,2a2),(2b1,2b2+1)) as the printed double contour integral
// with characteristic polynomial P(z,w) = ai - 1/z + 1/w - ai/(wz) evaluated
// at (z e^{Bx}, w e^{By}). Inner integral in closed form; outer integral split
// at the points where the inner pole crosses the contour. PoleOnContour
// (std::domain_error) when the spectral curve degenerates on the torus.
std::complex<double> gibbs_inverse_entry(int alpha1, int alpha2, int beta1, int beta2, double bx,
                                         double by, double a);

// Edge probabilities of the four dimer orientations around a white vertex in
// the bulk limit at asymptotic coordinates xi (inside the ellipse). Uses the
// convention pinned by the finite-n tests: magnetic coordinates
// (Bx,By) = (-log r1, -log r2) with r_i = sqrt(xi_i/(1-xi_i)).
struct GibbsEdgeProbabilities {
  double north, south, west, east;
};
GibbsEdgeProbabilities gibbs_edge_probabilities(double xi1, double xi2, double a);

// The bulk-limit prediction for a single inverse-Kasteleyn entry (original
// orientation): (-1)^{beta1+beta2} * r1^{s*alpha1+beta1} * r2^{alpha2-beta2} *
// K_mu^{-1}(...; -log r1, -log r2), where s = -1 selects the printed
// "-alpha1" prefactor candidate and s = +1 the alternative. Exactly one
// candidate matches finite-n numerics.
std::complex<double> gibbs_inverse_prediction(int alpha1, int alpha2, int beta1, int beta2,
                                              double xi1, double xi2, double a, int sign_candidate);

// ---------------------------------------------------------------------------
// Fredholm determinants of the (modified) Airy kernel
// ---------------------------------------------------------------------------

enum class GapMode { Thinned, Thickened };

// Nystrom (Gauss-Legendre) determinant det(I - alpha K_Ai) on [xi, xi+T]. The
// thickened mode's vacancy probability equals the plain det(I - K_Ai): assigning
// geometric multiplicities to points cannot create points in an empty region.
// Node count doubles until 1e-6 agreement (NotConverged otherwise).
double fredholm_gap(GapMode mode, double param, double xi, double T = 16.0);

}  // namespace aztec
