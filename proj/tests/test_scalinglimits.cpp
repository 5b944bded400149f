#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "aztec/scalinglimits.hpp"

using namespace aztec;

TEST_CASE("ellipse residual") {
  for (double a : {0.5, 1.0, 2.0}) CHECK(ellipse_residual(0.5, 0.5, a) == doctest::Approx(-1.0));
  CHECK(ellipse_residual(1.0, 1.0, 1.0) > 0);
  // exact identity: (u(k), 1-k^2 u(k)) lies on the ellipse
  for (mpq_class k : {mpq_class(1, 2), mpq_class(1), mpq_class(2)})
    for (mpq_class a : {mpq_class(1, 2), mpq_class(1), mpq_class(2)}) {
      auto p = edge_params_exact(k, a);
      CHECK(ellipse_residual_exact(p.u, p.v, a).is_zero());
      // u(k) > 0
      CHECK(p.u.to_double() > 0);
    }
}

TEST_CASE("edge parameters at a=1, k=1") {
  EdgeParams p = edge_params(1.0, 1.0);
  double s2 = std::sqrt(2.0);
  CHECK(p.u == doctest::Approx(1.0 / (4 + 2 * s2)).epsilon(1e-14));
  CHECK(p.z_c == doctest::Approx(1.0 / (1 + s2)).epsilon(1e-14));
  CHECK(p.alpha == doctest::Approx(1.0 / (2 + s2)).epsilon(1e-14));
  CHECK(p.lambda == doctest::Approx(std::cbrt((1 + s2) / (8 + 4 * s2))).epsilon(1e-14));
  CHECK(p.regime == BoundaryRegime::North);

  EdgeParams q = edge_params(-1.0, 1.0);
  CHECK(q.beta == doctest::Approx(s2 - 1).epsilon(1e-14));
  CHECK(q.regime == BoundaryRegime::South);
  CHECK(q.beta > 0);
  CHECK(q.beta < 1);

  CHECK_THROWS_AS(edge_params(-0.2, 1.0), std::domain_error);   // outside both ranges
  CHECK_THROWS_AS(edge_params(-5.0, 1.0), std::domain_error);
}

TEST_CASE("alpha (1-beta) = 1 exactly on a k-grid") {
  for (mpq_class k : {mpq_class(1, 2), mpq_class(1), mpq_class(3), mpq_class(-1)})
    for (mpq_class a : {mpq_class(1, 2), mpq_class(1), mpq_class(2)}) {
      auto p = edge_params_exact(k, a);
      Quad one = Quad::rational(1, p.u.s2);
      CHECK(p.alpha * (one - p.beta) == one);
    }
}

TEST_CASE("saddle double zero: g'(z_c) = g''(z_c) = 0") {
  for (double k : {0.5, 1.0, 2.0, -1.0, -0.9})
    for (double a : {0.5, 1.0, 2.0}) {
      double sq = std::sqrt(1 + a * a);
      if (k < 0 && !(k > -sq / a && k < -a / sq)) continue;
      EdgeParams p = edge_params(k, a);
      auto g1 = saddle_g_deriv({p.z_c, 0.0}, p.u, p.v, a, 1);
      auto g2 = saddle_g_deriv({p.z_c, 0.0}, p.u, p.v, a, 2);
      CHECK(std::abs(g1) < 1e-10);
      CHECK(std::abs(g2) < 1e-10);
      // z_c^3 (-g'''(z_c)/2) = +lambda^3 (north) / -lambda^3 (south), the same
      // sign choice as the closed-form lambda^3
      double g3 = saddle_g_deriv({p.z_c, 0.0}, p.u, p.v, a, 3).real();
      double lam3 = p.z_c * p.z_c * p.z_c * (-g3 / 2);
      double want = (k > 0 ? 1.0 : -1.0) * std::pow(p.lambda, 3);
      CHECK(lam3 == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("omega map") {
  // printed example: a=1, xi=(1/2, (2+sqrt2)/4) lies on the ellipse boundary;
  // slightly inside, z_xi approaches e^{i pi/4}
  double s2 = std::sqrt(2.0);
  auto z = omega_map(0.5, (2 + s2) / 4 - 1e-9, 1.0);
  REQUIRE(z.has_value());
  CHECK(std::abs(*z - std::polar(1.0, M_PI / 4)) < 1e-4);

  // |z_xi| = sqrt(xi1/(1-xi1)) on an interior grid; Im > 0 inside only
  for (double x1 = 0.15; x1 < 0.9; x1 += 0.1)
    for (double x2 = 0.15; x2 < 0.9; x2 += 0.1) {
      bool inside = ellipse_residual(x1, x2, 1.0) < 0;
      auto w = omega_map(x1, x2, 1.0);
      CHECK(w.has_value() == inside);
      if (w) {
        CHECK(w->imag() > 0);
        CHECK(std::abs(*w) == doctest::Approx(std::sqrt(x1 / (1 - x1))).epsilon(1e-10));
      }
    }
  CHECK(!omega_map(0.99, 0.99, 1.0).has_value());
}

TEST_CASE("omega map is continuous up to the boundary point of edge_params") {
  // path from the center to the boundary point (u(k), v(k)); at the boundary
  // z_xi degenerates to the real saddle z_c.
  double a = 1.0, k = 1.0;
  EdgeParams p = edge_params(k, a);
  double prev = 1e9;
  for (double t : {0.9, 0.99, 0.999, 0.9999, 0.999999}) {
    double x1 = 0.5 + t * (p.u - 0.5), x2 = 0.5 + t * (p.v - 0.5);
    auto z = omega_map(x1, x2, a);
    REQUIRE(z.has_value());
    double dist = std::abs(*z - std::complex<double>(p.z_c, 0));
    CHECK(dist < prev * 1.0001);
    prev = dist;
  }
  CHECK(prev < 1e-3);
  // just outside the boundary point: not in the open liquid region
  double x1 = 0.5 + 1.000001 * (p.u - 0.5), x2 = 0.5 + 1.000001 * (p.v - 0.5);
  CHECK(!omega_map(x1, x2, a).has_value());
}

TEST_CASE("airy function values") {
  // Ai(0) = 3^{-2/3}/Gamma(2/3)
  CHECK(airy_ai(0.0) == doctest::Approx(std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0))
                           .epsilon(1e-13));
  // positive decay
  double prev = airy_ai(1.0);
  for (double x = 2; x <= 8; ++x) {
    double v = airy_ai(x);
    CHECK(v > 0);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(airy_ai(50.0), std::domain_error);
}

TEST_CASE("airy ODE residual via five-point second difference") {
  double h = 1e-2;
  for (double x = -6; x <= 3.01; x += 0.75) {
    double dd = (-airy_ai(x - 2 * h) + 16 * airy_ai(x - h) - 30 * airy_ai(x) +
                 16 * airy_ai(x + h) - airy_ai(x + 2 * h)) /
                (12 * h * h);
    CHECK(std::abs(dd - x * airy_ai(x)) < 1e-8);
  }
}

TEST_CASE("airy kernel identities") {
  for (double x = -6; x <= 3.01; x += 0.5) {
    double diag = airy_kernel(x, x);
    double closed = airy_ai_prime(x) * airy_ai_prime(x) - x * airy_ai(x) * airy_ai(x);
    CHECK(std::abs(diag - closed) < 1e-6);
  }
  // symmetry
  CHECK(airy_kernel(-1.0, 0.5) == doctest::Approx(airy_kernel(0.5, -1.0)).epsilon(1e-12));
  // quadrature matches the closed two-point form
  for (double x : {-3.0, -1.0, 0.0})
    for (double y : {-2.0, 0.5, 1.0})
      CHECK(airy_kernel(x, y) == doctest::Approx(airy_kernel_closed_form(x, y)).epsilon(1e-9));
}

namespace {

// exhaustive finite-DPP oracle: P(X = T) by inclusion-exclusion over minors
double config_probability(const DiscreteKernel& k, unsigned mask) {
  size_t m = k.size();
  double p = 0;
  for (unsigned sup = mask;; sup = (sup + 1) | mask) {
    if (sup >= (1u << m)) break;
    std::vector<size_t> idx;
    for (size_t i = 0; i < m; ++i)
      if (sup & (1u << i)) idx.push_back(i);
    std::vector<std::vector<double>> minor(idx.size(), std::vector<double>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) minor[i][j] = k.k[idx[i]][idx[j]];
    double d = idx.empty() ? 1.0 : det_real(minor);
    int extra = __builtin_popcount(sup) - __builtin_popcount(mask);
    p += (extra % 2 == 0 ? d : -d);
    if (sup == (1u << m) - 1) break;
  }
  return p;
}

DiscreteKernel random_kernel(std::mt19937_64& gen, int m) {
  // random symmetric kernel with eigenvalues in (0,1): K = Q D Q^T
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud(0.05, 0.95);
  std::vector<std::vector<double>> q(m, std::vector<double>(m));
  for (auto& row : q)
    for (auto& v : row) v = nd(gen);
  // Gram-Schmidt
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) {
      double dot = 0;
      for (int l = 0; l < m; ++l) dot += q[i][l] * q[j][l];
      for (int l = 0; l < m; ++l) q[i][l] -= dot * q[j][l];
    }
    double norm = 0;
    for (int l = 0; l < m; ++l) norm += q[i][l] * q[i][l];
    norm = std::sqrt(norm);
    for (int l = 0; l < m; ++l) q[i][l] /= norm;
  }
  std::vector<double> ev(m);
  for (auto& v : ev) v = ud(gen);
  DiscreteKernel k;
  k.k.assign(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l) k.k[i][j] += q[l][i] * ev[l] * q[l][j];
  return k;
}

}  // namespace

TEST_CASE("thinned generating functional: scalars and oracle") {
  DiscreteKernel one{{{0.3}}};
  CHECK(thinned_gen_functional(one, {1.0}, 0.7) == doctest::Approx(1 - 0.7 * 0.3));
  DiscreteKernel k3{{{0.5, 0.1, 0.0}, {0.1, 0.4, 0.2}, {0.0, 0.2, 0.3}}};
  CHECK(thinned_gen_functional(k3, {0.3, 0.9, 0.5}, 0.0) == doctest::Approx(1.0));

  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 5; ++rep) {
    int m = 2 + (int)(gen() % 5);
    DiscreteKernel k = random_kernel(gen, m);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    std::vector<double> phi(m);
    for (auto& v : phi) v = ud(gen);
    double alpha = ud(gen);
    // oracle: sum over configurations T, thinning each point independently
    double expect = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      double p = config_probability(k, mask);
      double factor = 1;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) factor *= 1 - alpha * phi[i];
      expect += p * factor;
    }
    CHECK(thinned_gen_functional(k, phi, alpha) == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("thickened generating functional: scalars and oracle") {
  DiscreteKernel one{{{0.3}}};
  // phi = 1 collapses the quotient to 1 for every beta
  CHECK(thickened_gen_functional(one, {1.0}, 0.6) == doctest::Approx(1 - 0.3));
  DiscreteKernel k2{{{0.5, 0.2}, {0.2, 0.4}}};
  std::vector<double> phi{0.3, 0.8};
  CHECK(thickened_gen_functional(k2, phi, 0.0) ==
        doctest::Approx(thinned_gen_functional(k2, phi, 1.0)).epsilon(1e-12));

  std::mt19937_64 gen(22);
  for (int rep = 0; rep < 5; ++rep) {
    int m = 2 + (int)(gen() % 5);
    DiscreteKernel k = random_kernel(gen, m);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    std::vector<double> phi(m);
    for (auto& v : phi) v = ud(gen);
    double beta = 0.2 + 0.6 * ud(gen);
    // oracle with geometric multiplicities, cutoff + tail bound below 1e-13
    int cutoff = (int)std::ceil(std::log(1e-14) / std::log(beta)) + 2;
    double expect = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      double p = config_probability(k, mask);
      double factor = 1;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) {
          double s = 0;
          for (int mult = 1; mult <= cutoff; ++mult)
            s += (1 - beta) * std::pow(beta, mult - 1) * std::pow(1 - phi[i], mult);
          factor *= s;
        }
      expect += p * factor;
    }
    // e^{-m psi} = (1-phi)^m with phi = 1 - e^{-psi}
    CHECK(thickened_gen_functional(k, phi, beta) == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("poisson predictions") {
  CHECK(poisson_density(1.0) == 0.0);
  CHECK(poisson_density(0.0) == 1.0);
  CHECK(poisson_density(-3.0) == doctest::Approx(2.0));
  CHECK(poisson_density(1.5) == 0.0);
  CHECK(poisson_c(1.0, 1.0) ==
        doctest::Approx(std::pow(M_PI, 2.0 / 3.0) * std::cbrt(2.0)).epsilon(1e-14));
}

TEST_CASE("gibbs: quarter probabilities at the symmetric point") {
  auto p = gibbs_edge_probabilities(0.5, 0.5, 1.0);
  CHECK(p.north == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(p.south == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(p.east == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(p.west == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("gibbs: partition of unity at asymmetric interior points") {
  for (auto [x1, x2] : {std::pair{0.55, 0.62}, {0.3, 0.45}, {0.62, 0.55}}) {
    auto p = gibbs_edge_probabilities(x1, x2, 1.0);
    for (double v : {p.north, p.south, p.east, p.west}) {
      CHECK(v > 0);
      CHECK(v < 1);
    }
    CHECK(p.north + p.south + p.east + p.west == doctest::Approx(1.0).epsilon(1e-7));
  }
  // weighted case
  auto p = gibbs_edge_probabilities(0.4, 0.55, 0.5);
  CHECK(p.north + p.south + p.east + p.west == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("gibbs: pole on contour at the frozen boundary") {
  // on the ellipse the spectral curve touches the torus tangentially
  double a = 1.0;
  EdgeParams p = edge_params(1.0, a);
  double r1 = std::sqrt(p.u / (1 - p.u)), r2 = std::sqrt(p.v / (1 - p.v));
  CHECK_THROWS_AS(gibbs_inverse_entry(0, 0, 0, 0, -std::log(r1), -std::log(r2), a),
                  std::domain_error);
}

TEST_CASE("fredholm gap determinants") {
  CHECK(fredholm_gap(GapMode::Thinned, 0.0, 0.0) == 1.0);
  // self-convergence: value at the default resolution is reproducible
  double v1 = fredholm_gap(GapMode::Thinned, 1.0, 0.0);
  CHECK(v1 > 0);
  CHECK(v1 < 1);
  // monotonicity: shrinking the excluded interval raises the gap probability
  double g0 = fredholm_gap(GapMode::Thinned, 1.0, 0.0);
  double g1 = fredholm_gap(GapMode::Thinned, 1.0, 1.0);
  double g2 = fredholm_gap(GapMode::Thinned, 1.0, 2.0);
  CHECK(g0 < g1);
  CHECK(g1 < g2);
  // thinning raises the gap probability as well
  CHECK(fredholm_gap(GapMode::Thinned, 0.5, 0.0) > g0);
  // thickened vacancy equals the unthinned determinant
  CHECK(fredholm_gap(GapMode::Thickened, 0.4, 0.0) == doctest::Approx(g0).epsilon(1e-6));
}
