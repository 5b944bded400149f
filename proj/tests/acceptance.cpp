// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/airy.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "aztec/exactdimer.hpp"
#include "aztec/kernelcalc.hpp"
#include "aztec/lattice.hpp"
#include "aztec/scalinglimits.hpp"
#include "aztec/shuffler.hpp"

using namespace aztec;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  if (!pass) ++g_failures;
  printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  fflush(stdout);
}

double now_seconds() {
  using namespace std::chrono;
  return duration_cast<duration<double>>(steady_clock::now().time_since_epoch()).count();
}

std::vector<mpq_class> weights3() { return {mpq_class(1), mpq_class(1, 2), mpq_class(2)}; }

// --- 1: inverse Kasteleyn exactness --------------------------------------
void criterion_1() {
  double t0 = now_seconds();
  long checked = 0;
  for (const mpq_class& a : weights3())
    for (int n = 1; n <= 4; ++n) {
      AztecDiamond d(n, Weight(a));
      auto inv = invert_direct(build_kasteleyn(d));
      auto ws = d.whites();
      auto bs = d.blacks();
      for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = 0; j < bs.size(); ++j) {
          if (inverse_entry_exact(ws[i], bs[j], d) != inv.inv[i][j]) {
            report(1, false, "inverse mismatch at n=" + std::to_string(n));
            return;
          }
          ++checked;
        }
    }
  char buf[160];
  snprintf(buf, sizeof buf,
           "f1/f2 formula == direct inverse, %ld entries, n<=4, a in {1,1/2,2}, exact (%.1fs)",
           checked, now_seconds() - t0);
  report(1, true, buf);
}

// --- 2: five-term identity -------------------------------------------------
void criterion_2() {
  long checked = 0;
  for (const mpq_class& a : weights3())
    for (int n = 1; n <= 4; ++n) {
      AztecDiamond d(n, Weight(a));
      GQ ai(mpq_class(0), a);
      auto bs = d.blacks();
      for (Vertex x : bs)
        for (Vertex y : bs) {
          GQ acc(0);
          if (x.x1 < 2 * n) acc += inverse_entry_exact(x + kE1, y, d);
          if (x.x1 > 0) {
            acc -= inverse_entry_exact(x - kE1, y, d);
            acc -= ai * inverse_entry_exact(x + kE2, y, d);
          }
          if (x.x1 < 2 * n) acc += ai * inverse_entry_exact(x - kE2, y, d);
          if (((x.x1 + x.x2 - 1) / 2) % 2 != 0) acc = -acc;
          if (acc != (x == y ? GQ(1) : GQ(0))) {
            report(2, false, "five-term failure");
            return;
          }
          ++checked;
        }
    }
  report(2, true, "five-term relation = indicator for " + std::to_string(checked) +
                      " (x,y) pairs incl. x1=0 and x1=2n, exact");
}

// --- 3: partition function -------------------------------------------------
void criterion_3() {
  for (const mpq_class& a : weights3()) {
    for (int n = 1; n <= 3; ++n) {
      AztecDiamond d(n, Weight(a));
      mpq_class total = 0;
      for (const Tiling& t : enumerate_tilings(d)) total += tiling_weight(t, a);
      if (partition_function(d) != total) {
        report(3, false, "determinant != enumeration at n=" + std::to_string(n));
        return;
      }
    }
    for (int n = 1; n <= 8; ++n) {
      AztecDiamond d(n, Weight(a));
      if (partition_function(d) != qpow(1 + a * a, (long)n * (n + 1) / 2)) {
        report(3, false, "determinant != (1+a^2)^{n(n+1)/2} at n=" + std::to_string(n));
        return;
      }
    }
  }
  report(3, true, "|det K| == enumeration (n<=3) and == (1+a^2)^{n(n+1)/2} (n<=8), exact");
}

// --- 4: Kenyon consistency -------------------------------------------------
void criterion_4() {
  for (const mpq_class& a : weights3()) {
    AztecDiamond d(2, Weight(a));
    auto tilings = enumerate_tilings(d);
    mpq_class z = 0;
    for (const Tiling& t : tilings) z += tiling_weight(t, a);
    std::vector<Dimer> edges;
    for (Vertex b : d.blacks())
      for (Vertex step : {kE1, kE2, Vertex{-1, -1}, Vertex{1, -1}}) {
        Vertex w = b + step;
        if (d.contains_white(w)) edges.push_back({b, w});
      }
    auto enum_prob = [&](const std::vector<Dimer>& es) -> mpq_class {
      mpq_class num = 0;
      for (const Tiling& t : tilings) {
        bool all = true;
        for (const Dimer& e : es)
          all = all && std::find(t.dimers.begin(), t.dimers.end(), e) != t.dimers.end();
        if (all) num += tiling_weight(t, a);
      }
      return num / z;
    };
    for (const Dimer& e : edges)
      if (correlation_probability_exact({e}, d) != enum_prob({e})) {
        report(4, false, "single-edge probability mismatch");
        return;
      }
    for (size_t i = 0; i < edges.size(); ++i)
      for (size_t j = i + 1; j < edges.size(); ++j)
        if (correlation_probability_exact({edges[i], edges[j]}, d) !=
            enum_prob({edges[i], edges[j]})) {
          report(4, false, "pair probability mismatch");
          return;
        }
    for (Vertex w : d.whites()) {
      mpq_class sum = 0;
      for (Vertex step : {kE1, kE2, Vertex{-1, -1}, Vertex{1, -1}}) {
        Vertex b = w - step;
        if (d.contains_black(b)) sum += correlation_probability_exact({{b, w}}, d);
      }
      if (sum != 1) {
        report(4, false, "vertex orientation probabilities do not sum to 1");
        return;
      }
    }
  }
  report(4, true,
         "all single and pair edge probabilities at n=2 match enumeration exactly; "
         "orientation sums = 1");
}

// --- 5: inverse-Kasteleyn / particle-kernel correspondence -------------------
void criterion_5() {
  // exact path: every entry, three weights
  for (const mpq_class& a : weights3()) {
    AztecDiamond d(2, Weight(a));
    for (Vertex w : d.whites())
      for (Vertex b : d.blacks()) {
        GQ lhs = inverse_entry_exact(w, b, d);
        GQ kn = particle_kernel_exact(b.x2, (b.x2 - b.x1 + 1) / 2, w.x2, (w.x2 - w.x1 + 1) / 2, d);
        long s4 = (long)(w.x1 - w.x2 + b.x1 - b.x2) / 2;
        if (lhs != -(ipow(s4 + 1) * kn)) {
          report(5, false, "exact particle-kernel relation mismatch");
          return;
        }
      }
  }
  // numeric contours (a < 1 circle configuration)
  mpq_class a(1, 2);
  AztecDiamond d(2, Weight(a));
  double worst = 0;
  for (Vertex w : d.whites())
    for (Vertex b : d.blacks()) {
      GQ lhs = inverse_entry_exact(w, b, d);
      KernelEntry kn = particle_kernel_numeric(b.x2, (b.x2 - b.x1 + 1) / 2, w.x2,
                                               (w.x2 - w.x1 + 1) / 2, d, 256);
      long s4 = (long)(w.x1 - w.x2 + b.x1 - b.x2) / 2;
      std::complex<double> rhs = -(ipow(s4 + 1).to_complex() * kn.value);
      worst = std::max(worst, std::abs(lhs.to_complex() - rhs));
    }
  char buf[160];
  snprintf(buf, sizeof buf,
           "K^-1 <-> K_n relation exact at n=2 (a in {1,1/2,2}); numeric contours max dev %.2e "
           "(tol 1e-10)",
           worst);
  report(5, worst < 1e-10, buf);
}

// --- 6: sampler exactness ---------------------------------------------------
void criterion_6() {
  double t0 = now_seconds();
  double worst_stat = 0, worst_thr = 1e300;
  for (const mpq_class& a : weights3())
    for (int n = 1; n <= 3; ++n) {
      AztecDiamond d(n, Weight(a));
      auto tilings = enumerate_tilings(d);
      mpq_class z = 0;
      for (const Tiling& t : tilings) z += tiling_weight(t, a);
      std::map<std::vector<Dimer>, int> index;
      for (size_t i = 0; i < tilings.size(); ++i) index[tilings[i].dimers] = (int)i;
      const long samples = 1000000;
      SamplerConfig cfg{n, Weight(a), (uint64_t)(1000 + 7 * n) + (uint64_t)mpq_class(a * 840).get_d(),
                        (int)samples};
      std::vector<long> counts(tilings.size(), 0);
      for_each_sample(cfg, [&](int, const Tiling& t) { counts[index.at(t.dimers)]++; });
      double stat = 0;
      for (size_t i = 0; i < tilings.size(); ++i) {
        double e = mpq_class(tiling_weight(tilings[i], a) / z).get_d() * (double)samples;
        stat += (counts[i] - e) * (counts[i] - e) / e;
      }
      int dof = (int)tilings.size() - 1;
      double thr = boost::math::quantile(boost::math::chi_squared(dof), 1 - 1e-3);
      if (stat >= thr) {
        char buf[160];
        snprintf(buf, sizeof buf, "chi2 %.1f >= %.1f at n=%d a=%s", stat, thr, n,
                 a.get_str().c_str());
        report(6, false, buf);
        return;
      }
      if (stat / thr > worst_stat / worst_thr) { worst_stat = stat; worst_thr = thr; }
    }
  char buf[160];
  snprintf(buf, sizeof buf,
           "chi-square over all tilings, 1e6 samples, n in {1,2,3}, a in {1,1/2,2}; worst chi2 "
           "%.1f < %.1f (%.0fs)",
           worst_stat, worst_thr, now_seconds() - t0);
  report(6, true, buf);
}

// --- 7: thinned/thickened determinants vs exhaustive oracles ----------------
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
    double det = idx.empty() ? 1.0 : det_real(minor);
    int extra = __builtin_popcount(sup) - __builtin_popcount(mask);
    p += (extra % 2 == 0 ? det : -det);
    if (sup == (1u << m) - 1) break;
  }
  return p;
}

void criterion_7() {
  Xoshiro256 rng(20240501, 0);
  double worst = 0;
  for (int rep = 0; rep < 100; ++rep) {
    int m = 1 + (int)(rng.next() % 6);
    // random symmetric kernel with spectrum in (0,1)
    std::vector<std::vector<double>> q(m, std::vector<double>(m));
    for (auto& row : q)
      for (auto& v : row) v = 2 * rng.uniform() - 1;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < i; ++j) {
        double dot = 0;
        for (int l = 0; l < m; ++l) dot += q[i][l] * q[j][l];
        for (int l = 0; l < m; ++l) q[i][l] -= dot * q[j][l];
      }
      double norm = 0;
      for (int l = 0; l < m; ++l) norm += q[i][l] * q[i][l];
      norm = std::sqrt(norm);
      if (norm < 1e-9) { --rep; goto next_rep; }
      for (int l = 0; l < m; ++l) q[i][l] /= norm;
    }
    {
      std::vector<double> ev(m);
      for (auto& v : ev) v = 0.05 + 0.9 * rng.uniform();
      DiscreteKernel k;
      k.k.assign(m, std::vector<double>(m, 0.0));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int l = 0; l < m; ++l) k.k[i][j] += q[l][i] * ev[l] * q[l][j];
      std::vector<double> phi(m);
      for (auto& v : phi) v = rng.uniform();
      double alpha = rng.uniform();
      double beta = 0.1 + 0.8 * rng.uniform();
      double thin_expect = 0, thick_expect = 0;
      int cutoff = (int)std::ceil(std::log(1e-14) / std::log(beta)) + 2;
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        double p = config_probability(k, mask);
        double tf = 1, kf = 1;
        for (int i = 0; i < m; ++i)
          if (mask & (1u << i)) {
            tf *= 1 - alpha * phi[i];
            double s = 0;
            for (int mult = 1; mult <= cutoff; ++mult)
              s += (1 - beta) * std::pow(beta, mult - 1) * std::pow(1 - phi[i], mult);
            kf *= s;
          }
        thin_expect += p * tf;
        thick_expect += p * kf;
      }
      worst = std::max(worst, std::abs(thinned_gen_functional(k, phi, alpha) - thin_expect));
      worst = std::max(worst, std::abs(thickened_gen_functional(k, phi, beta) - thick_expect));
    }
  next_rep:;
  }
  char buf[160];
  snprintf(buf, sizeof buf,
           "thinned/thickened determinants vs exhaustive oracles, 100 random kernels <=6, max "
           "dev %.2e (tol 1e-10)",
           worst);
  report(7, worst < 1e-10, buf);
}

// --- 8: Airy numerics --------------------------------------------------------
double airy_row_integral(double x) {
  // int K(x,y)^2 dy: oscillation-sized Gauss panels on [-R, x+30] plus the
  // averaged asymptotic tail below -R. Uses unguarded Airy evaluations (the
  // library op guards its supported range; this oracle needs y ~ -R).
  const double R = 5000;
  boost::math::quadrature::gauss<double, 16> gl;
  double ai_x = boost::math::airy_ai(x), aip_x = boost::math::airy_ai_prime(x);
  auto f = [&](double y) {
    double v = (ai_x * boost::math::airy_ai_prime(y) - aip_x * boost::math::airy_ai(y)) / (x - y);
    return v * v;
  };
  double total = 0;
  double hi = x + 30;
  double y = hi;
  while (y > -R) {
    double wavelength = 2 * M_PI / std::sqrt(std::max(1.0, -y));
    double lo = std::max(-R, y - std::max(0.25, wavelength));
    total += gl.integrate(f, lo, y);
    y = lo;
  }
  double ai = airy_ai(x), aip = airy_ai_prime(x);
  double i1 = 2 / std::sqrt(R) - (4 * x / 3) * std::pow(R, -1.5) + (6 * x * x / 5) * std::pow(R, -2.5);
  double i2 = (2.0 / 3) * std::pow(R, -1.5) - (4 * x / 5) * std::pow(R, -2.5);
  total += (ai * ai * i1 + aip * aip * i2) / (2 * M_PI);
  return total;
}

void criterion_8() {
  double t0 = now_seconds();
  double worst_diag = 0, worst_row = 0, worst_ode = 0;
  for (double x = -6; x <= 3.01; x += 0.75) {
    double diag = airy_kernel(x, x);
    double closed = airy_ai_prime(x) * airy_ai_prime(x) - x * airy_ai(x) * airy_ai(x);
    worst_diag = std::max(worst_diag, std::abs(diag - closed));
    worst_row = std::max(worst_row, std::abs(airy_row_integral(x) - diag));
    double h = 1e-2;
    double dd = (-airy_ai(x - 2 * h) + 16 * airy_ai(x - h) - 30 * airy_ai(x) +
                 16 * airy_ai(x + h) - airy_ai(x + 2 * h)) /
                (12 * h * h);
    worst_ode = std::max(worst_ode, std::abs(dd - x * airy_ai(x)));
  }
  char buf[200];
  snprintf(buf, sizeof buf,
           "Airy diag identity dev %.2e (tol 1e-6), row-integral dev %.2e (tol 1e-6), ODE "
           "residual %.2e (tol 1e-8) on [-6,3] (%.0fs)",
           worst_diag, worst_row, worst_ode, now_seconds() - t0);
  report(8, worst_diag < 1e-6 && worst_row < 1e-6 && worst_ode < 1e-8, buf);
}

// --- 9: edge-limit convergence ----------------------------------------------
double edge_grid_deviation(int n, double a, double k) {
  EdgeParams p = edge_params(k, a);
  int r = (int)((1 - k * k * p.u) * n);
  AztecDiamond d(n, Weight(a));
  LineKernelEvaluator ev(d, r, NumericContext{});
  double worst = 0;
  for (double xi = -2; xi <= 2.01; xi += 1.0)
    for (double eta = -2; eta <= 2.01; eta += 1.0) {
      ScaledKernelValue v = scaled_finite_kernel(ev, p, n, xi, eta);
      double pred = p.alpha * airy_kernel_closed_form(v.xi_eff, v.eta_eff);
      worst = std::max(worst, std::abs(v.value - pred));
      if (v.x1 == v.x2 && v.value < -1e-9)
        throw std::logic_error("scaled kernel diagonal must be a nonnegative density");
    }
  return worst;
}

void criterion_9() {
  double t0 = now_seconds();
  double dev200 = edge_grid_deviation(200, 1.0, 1.0);
  double dev800 = edge_grid_deviation(800, 1.0, 1.0);
  char buf[200];
  snprintf(buf, sizeof buf,
           "rescaled line kernel vs alpha*K_Ai on the 5x5 grid: dev %.4f at n=800 (tol 0.05), "
           "%.4f at n=200 (trend must decrease) (%.0fs)",
           dev800, dev200, now_seconds() - t0);
  report(9, dev800 < 0.05 && dev800 < dev200, buf);
}

// --- 10: hole-cluster geometric law -------------------------------------------
void criterion_10() {
  double t0 = now_seconds();
  const int n = 512, samples = 300;
  const double a = 1.0, k = -1.0;
  EdgeParams p = edge_params(k, a);
  int r = (int)((1 - k * k * p.u) * n);
  double scale = p.lambda * std::cbrt((double)n);
  SamplerConfig cfg{n, Weight(mpq_class(1)), 90210, samples};
  std::map<int, long> hist;
  long total = 0;
  for_each_sample(cfg, [&](int, const Tiling& t) {
    auto ls = south_line_statistics(t, r);
    for (auto [start, len] : ls.holes) {
      double xi = (start + 0.5 * (len - 1) - p.u * n) / scale;
      if (std::abs(xi) <= 2.0) {
        hist[len]++;
        ++total;
      }
    }
  });
  // chi-square vs geometric(beta), binning the tail so expected >= 5
  double beta = p.beta;
  std::vector<double> expected;
  std::vector<long> observed;
  int kmax = 1;
  double cum = 0;
  while (total * (1 - beta) * std::pow(beta, kmax) >= 5.0) ++kmax;
  for (int s = 1; s < kmax; ++s) {
    expected.push_back(total * (1 - beta) * std::pow(beta, s - 1));
    cum += expected.back();
    long o = hist.count(s) ? hist[s] : 0;
    observed.push_back(o);
  }
  expected.push_back(total - cum);
  long tail = total;
  for (long o : observed) tail -= o;
  observed.push_back(tail);
  double stat = 0;
  for (size_t i = 0; i < expected.size(); ++i)
    stat += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
  int dof = (int)expected.size() - 1;
  double thr = boost::math::quantile(boost::math::chi_squared(dof), 1 - 1e-3);
  char buf[220];
  snprintf(buf, sizeof buf,
           "hole clusters at n=512 k=-1: %ld clusters, chi2 %.2f < %.2f (dof %d) vs "
           "geometric(beta=%.4f) at 1e-3 (%.0fs)",
           total, stat, thr, dof, beta, now_seconds() - t0);
  report(10, stat < thr && total > 100, buf);
}

// --- 11: arctic ellipse --------------------------------------------------------
void criterion_11() {
  double t0 = now_seconds();
  bool ok = true;
  std::string detail;
  for (const mpq_class& aq : {mpq_class(1), mpq_class(1, 2)}) {
    double a = mpq_class(aq).get_d();
    SamplerConfig cfg{256, Weight(aq), 777, 100};
    auto pts = frozen_boundary_estimate(cfg);
    long close = 0;
    for (auto [u, v] : pts) {
      double res = ellipse_residual(u, v, a);
      double p = 1.0 / (1 + a * a);
      double gu = -2 * (v - u) / (1 - p) + 2 * (u + v - 1) / p;
      double gv = 2 * (v - u) / (1 - p) + 2 * (u + v - 1) / p;
      double dist = std::abs(res) / std::max(1e-9, std::hypot(gu, gv));
      if (dist < 0.05) ++close;
    }
    double frac = pts.empty() ? 0.0 : (double)close / pts.size();
    char buf[120];
    snprintf(buf, sizeof buf, "a=%s: %.1f%% of %zu pts within 0.05; ", aq.get_str().c_str(),
             100 * frac, pts.size());
    detail += buf;
    if (frac < 0.95) ok = false;
  }
  char buf[80];
  snprintf(buf, sizeof buf, "(n=256, 100 samples) (%.0fs)", now_seconds() - t0);
  report(11, ok, detail + buf);
}

// --- 12: Gibbs bulk ------------------------------------------------------------
void criterion_12() {
  double t0 = now_seconds();
  const int n = 400;
  mpq_class a(1);
  AztecDiamond d(n, Weight(a));
  NumericContext ctx;
  struct Point { double xi1, xi2; };
  double worst_good = 0, worst_bad = 0;
  for (Point pt : {Point{0.5, 0.5}, Point{0.68, 0.55}}) {
    int base1 = 2 * (int)std::lround(pt.xi1 * n);
    int base2 = 2 * (int)std::lround(pt.xi2 * n);
    for (auto [a1, a2, b1, b2] :
         {std::tuple{0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}, {0, 0, 1, -1}, {1, 1, 0, 0},
          {1, 0, 1, -1}, {2, 1, 1, 0}}) {
      Vertex x{base1 + 2 * a1 + 1, base2 + 2 * a2};
      Vertex y{base1 + 2 * b1, base2 + 2 * b2 + 1};
      KernelEntry fin = inverse_entry_numeric(x, y, d, ctx);
      std::complex<double> cand1 = gibbs_inverse_prediction(a1, a2, b1, b2, pt.xi1, pt.xi2, 1.0, -1);
      std::complex<double> cand2 = gibbs_inverse_prediction(a1, a2, b1, b2, pt.xi1, pt.xi2, 1.0, +1);
      worst_good = std::max(worst_good, std::abs(fin.value - cand1));
      worst_bad = std::max(worst_bad, std::abs(fin.value - cand2));
    }
  }
  char buf[220];
  snprintf(buf, sizeof buf,
           "finite-n K^-1 (n=400) vs Gibbs prediction: candidate r1^{-a1+b1} max dev %.2e < 1e-2; "
           "candidate r1^{+a1+b1} max dev %.2e > 1e-2: exactly one passes (%.0fs)",
           worst_good, worst_bad, now_seconds() - t0);
  report(12, worst_good < 1e-2 && worst_bad > 1e-2, buf);
}

// --- 13: Poisson-limit plug-ins -------------------------------------------------
void criterion_13() {
  bool ok = poisson_density(1.0) == 0.0 && poisson_density(0.0) == 1.0 &&
            std::abs(poisson_density(-3.0) - 2.0) < 1e-15 && poisson_density(2.0) == 0.0;
  double c = poisson_c(1.0, 1.0);
  ok = ok && std::abs(c - std::pow(M_PI, 2.0 / 3.0) * std::cbrt(2.0)) < 1e-14;
  // c(a) scaling in a^{2/3}
  ok = ok && std::abs(poisson_c(8.0, 1.0) / poisson_c(1.0, 1.0) - 4.0) < 1e-12;
  report(13, ok, "poisson density sqrt((1-xi)_+) and c(a)=pi^{2/3}(1+1/k)^{1/3}a^{2/3} plug-ins");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  std::vector<int> only;
  if (argc > 1 && !quick)
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  auto want = [&](int c) {
    if (!only.empty()) return std::find(only.begin(), only.end(), c) != only.end();
    if (quick) return c != 6 && c != 9 && c != 10 && c != 11 && c != 12;
    return true;
  };
  if (want(1)) criterion_1();
  if (want(2)) criterion_2();
  if (want(3)) criterion_3();
  if (want(4)) criterion_4();
  if (want(5)) criterion_5();
  if (want(6)) criterion_6();
  if (want(7)) criterion_7();
  if (want(8)) criterion_8();
  if (want(9)) criterion_9();
  if (want(10)) criterion_10();
  if (want(11)) criterion_11();
  if (want(12)) criterion_12();
  if (want(13)) criterion_13();
  if (quick) printf("(quick mode: criteria 6, 9, 10, 11, 12 skipped)\n");
  printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT");
  return g_failures == 0 ? 0 : 1;
}
