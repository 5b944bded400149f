#include "aztec/kernelcalc.hpp"

#include <algorithm>
#include <cmath>

namespace aztec {

namespace {

long sign_exponent(Vertex x, Vertex y) {
  // (-1)^{(x1+x2+y1+y2)/4} on the principal branch = i^{(x1+x2+y1+y2)/2}.
  return (long)(x.x1 + x.x2 + y.x1 + y.x2) / 2;
}

}  // namespace

// ---------------------------------------------------------------------------
// exact regime
// ---------------------------------------------------------------------------

GQ f1_exact(Vertex x, Vertex y, const AztecDiamond& d) {
  const mpq_class a = d.a.rat();
  const int n = d.n;
  long m = (x.x1 + 1) / 2;   // pole order at z=0
  if (m <= 0) return GQ(0);
  GQ sign = ipow(sign_exponent(x, y));

  auto pz = poly_mul(binom_poly(GQ(a), GQ(1), x.x2 / 2),
                     binom_poly(GQ(-1), GQ(a), (2 * n - x.x2) / 2));
  long q = (2 * n + 1 - y.x2) / 2;   // pole order at w=1/a
  size_t order = (size_t)q;
  GQ inva = GQ(1) / GQ(a);

  auto base = series_mul(binom_series(inva, y.x1 / 2, order),
                         binom_series(GQ(a) + inva, -(long)(y.x2 + 1) / 2, order), order);
  auto w_inv = binom_series(inva, -1, order);
  std::vector<GQ> acc(order, GQ(0));
  std::vector<GQ> cur = w_inv;
  for (long j = 0; j < m; ++j) {
    long idx = m - 1 - j;
    if (idx < (long)pz.size() && !pz[idx].is_zero())
      for (size_t t = 0; t < order; ++t) acc[t] += pz[idx] * cur[t];
    if (j + 1 < m) cur = series_mul(cur, w_inv, order);
  }
  auto h = series_mul(base, acc, order);
  return sign * GQ(qpow(a, -q)) * h[order - 1];
}

GQ f2_exact(Vertex x, Vertex y, const AztecDiamond& d) {
  const mpq_class a = d.a.rat();
  long m1 = (long)(y.x2 - x.x2 - 1) / 2;
  if (m1 >= 0) return GQ(0);
  long m2 = (long)(y.x1 - x.x1 - 1) / 2;
  long m3 = (long)(y.x2 - x.x2 + 1) / 2;
  GQ sign = ipow(sign_exponent(x, y));
  size_t order = (size_t)(-m1);
  GQ inva = GQ(1) / GQ(a);
  auto s = series_mul(binom_series(inva, m2, order),
                      binom_series(inva + GQ(a), -m3, order), order);
  return sign * GQ(qpow(a, m1)) * s[order - 1];
}

GQ inverse_entry_exact(Vertex x, Vertex y, const AztecDiamond& d) {
  GQ v = f1_exact(x, y, d);
  if (x.x1 >= y.x1 + 1) v -= f2_exact(x, y, d);
  return v;
}

mpq_class correlation_probability_exact(const std::vector<Dimer>& edges, const AztecDiamond& d) {
  const mpq_class a = d.a.rat();
  size_t m = edges.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (edges[i] == edges[j]) throw std::invalid_argument("correlation_probability: repeated edge");
  std::vector<std::vector<GQ>> l(m, std::vector<GQ>(m));
  for (size_t i = 0; i < m; ++i) {
    GQ kv = kasteleyn_entry(edges[i].b, edges[i].w, a);
    for (size_t j = 0; j < m; ++j)
      l[i][j] = kv.is_zero() ? GQ(0) : kv * inverse_entry_exact(edges[j].w, edges[i].b, d);
  }
  GQ det = gq_det(std::move(l));
  if (det.im != 0) throw std::logic_error("correlation_probability: non-real determinant");
  return det.re;
}

GQ line_kernel_exact(int x1, int x2, int r, const AztecDiamond& d) {
  const int n = d.n;
  if (r < 1 || r > n - 1) throw std::out_of_range("line kernel: r must be in 1..n-1");
  if (x1 < 1 || x1 > n || x2 < 1 || x2 > n)
    throw std::out_of_range("line kernel: positions must be in 1..n");
  const mpq_class a = d.a.rat();
  auto pz = poly_mul(binom_poly(GQ(a), GQ(1), (long)r), binom_poly(GQ(-1), GQ(a), (long)(n - r)));
  long q = n - r;
  size_t order = (size_t)q;
  GQ inva = GQ(1) / GQ(a);
  auto base = series_mul(binom_series(inva, (long)x2, order),
                         binom_series(inva + GQ(a), -(long)(r + 1), order), order);
  auto w_inv = binom_series(inva, -1, order);
  std::vector<GQ> acc(order, GQ(0));
  std::vector<GQ> cur = w_inv;
  for (long j = 0; j < x1; ++j) {
    long idx = x1 - 1 - j;
    if (idx < (long)pz.size() && !pz[idx].is_zero())
      for (size_t t = 0; t < order; ++t) acc[t] += pz[idx] * cur[t];
    if (j + 1 < x1) cur = series_mul(cur, w_inv, order);
  }
  auto h = series_mul(base, acc, order);
  return -(GQ(qpow(a, -q)) * h[order - 1]);
}

GQ ktilde_exact(int u1, int u2, int v1, int v2, const AztecDiamond& d) {
  const mpq_class a = d.a.rat();
  const int n = d.n;
  // Parity decoding of the first coordinates: u1 = 2r - eps1 with eps1 in
  // {0,1}, so odd u1 (a black vertex's x2) gives eps1 = 1, r = (u1+1)/2 and
  // even u1 (white x2) gives eps1 = 0, r = u1/2; same for v1 = 2s - eps2.
  int eps1 = u1 & 1, eps2 = v1 & 1;
  int r = (u1 + eps1) / 2, s = (v1 + eps2) / 2;
  long p0 = s + 1 - v2;   // z-pole order at 0
  if (p0 <= 0) return GQ(0);
  auto q_poly = poly_mul(binom_poly(GQ(a), GQ(1), (long)s),
                         binom_poly(GQ(1), GQ(-a), (long)(n - s + eps2)));
  GQ total(0);
  for (long j = 0; j < p0; ++j) {
    long idx = p0 - 1 - j;
    if (idx >= (long)q_poly.size() || q_poly[idx].is_zero()) continue;
    const GQ& c = q_poly[idx];
    long e = r - u2 - 1 - j;   // w-exponent of this term
    // residue at w=0: coeff of w^{-1-e} in (1-aw)^{-(n-r+eps1)} (w+a)^{-r}
    if (-1 - e >= 0) {
      size_t order = (size_t)(-e);
      auto sw = series_mul(binom_series(GQ(1), GQ(-a), -(long)(n - r + eps1), order),
                           binom_series(GQ(a), -(long)r, order), order);
      total += c * sw[order - 1];
    }
    // residue at w=-a: coeff of t^{r-1} in (-a+t)^e (1+a^2-at)^{-(n-r+eps1)};
    // r=0 means no pole there
    if (r > 0) {
      size_t order = (size_t)r;
      auto sw = series_mul(binom_series(GQ(-a), e, order),
                           binom_series(GQ(1 + a * a), GQ(-a), -(long)(n - r + eps1), order),
                           order);
      total += c * sw[order - 1];
    }
  }
  return total;
}

GQ phi_exact(int u1, int v1, int u2, int v2, const AztecDiamond& d) {
  if (!(u1 < v1)) return GQ(0);
  const mpq_class a = d.a.rat();
  int eps1 = u1 & 1, eps2 = v1 & 1;
  int r = (u1 + eps1) / 2, s = (v1 + eps2) / 2;
  long e0 = v2 - u2 - 1 + r - s;
  long m1 = s - r;
  long m2 = r - s + eps2 - eps1;
  GQ total(0);
  if (-1 - e0 >= 0) {
    size_t order = (size_t)(-e0);
    auto sp = series_mul(binom_series(GQ(a), m1, order),
                         binom_series(GQ(1), GQ(-a), m2, order), order);
    total += sp[order - 1];
  }
  if (m1 < 0) {
    size_t order = (size_t)(-m1);
    auto sp = series_mul(binom_series(GQ(-a), e0, order),
                         binom_series(GQ(1 + a * a), GQ(-a), m2, order), order);
    total += sp[order - 1];
  }
  return total;
}

GQ particle_kernel_exact(int u1, int u2, int v1, int v2, const AztecDiamond& d) {
  return ktilde_exact(u1, u2, v1, v2, d) - phi_exact(u1, v1, u2, v2, d);
}

// ---------------------------------------------------------------------------
// numeric regime
// ---------------------------------------------------------------------------

std::vector<MpComplex> unit_circle_nodes(int n_nodes) {
  std::vector<MpComplex> out((size_t)n_nodes);
  MpFloat two_pi = MpFloat(2) * MpFloat::pi();
  for (int k = 0; k < n_nodes; ++k) {
    MpFloat ang = two_pi * MpFloat((long)k) / MpFloat((long)n_nodes);
    MpFloat s, c;
    sin_cos(s, c, ang);
    out[k] = MpComplex(std::move(c), std::move(s));
  }
  return out;
}

namespace {

struct TrapezoidResult {
  MpComplex value;
  double abs_error;
  int nodes;
  long cancel_bits;   // log2(max node magnitude / |result|)
};

// (1/2pi i) oint_{|w-c|=rad} f(w) dw with node doubling; the integrand f is a
// callable MpComplex(const MpComplex& w). n_min should exceed the total pole
// order of f inside/outside the circle, otherwise aliasing of the principal
// part can stall at a stable but wrong value.
template <class F>
TrapezoidResult trapezoid_circle(const F& f, const MpComplex& center, const MpFloat& rad,
                                 int n_min, int n_max, double rel_tol) {
  int n = 64;
  while (n < n_min) n <<= 1;
  MpComplex sum(0);
  MpFloat max_mag(0);
  auto add_nodes = [&](const std::vector<MpComplex>& units) {
    for (const MpComplex& u : units) {
      MpComplex ru(rad * u.re, rad * u.im);
      MpComplex w = center + ru;
      MpComplex term = f(w) * ru;
      MpFloat mag = abs(term);
      if (max_mag < mag) max_mag = mag;
      sum += term;
    }
  };
  add_nodes(unit_circle_nodes(n));
  MpComplex prev = sum / MpComplex((long)n);
  int agreements = 0;
  while (n < n_max) {
    // midpoints of the current grid = odd nodes of the doubled grid
    std::vector<MpComplex> mids((size_t)n);
    MpFloat pi = MpFloat::pi();
    for (int k = 0; k < n; ++k) {
      MpFloat ang = pi * MpFloat(2L * k + 1) / MpFloat((long)n);
      MpFloat s, c;
      sin_cos(s, c, ang);
      mids[k] = MpComplex(std::move(c), std::move(s));
    }
    add_nodes(mids);
    n *= 2;
    MpComplex curv = sum / MpComplex((long)n);
    MpFloat diff = abs(curv - prev);
    MpFloat scale = MpFloat(1) + abs(curv);
    bool ok = diff < scale * MpFloat(rel_tol);
    double err = diff.to_double();
    if (ok) {
      if (++agreements >= 1) {
        long cancel = 0;
        if (!max_mag.is_zero() && !(abs(curv) + MpFloat(1e-300)).is_zero()) {
          double ratio = std::log2(max_mag.to_double()) -
                         std::log2(abs(curv).to_double() + 1e-300);
          cancel = ratio > 0 ? (long)ratio : 0;
        }
        return {curv, err, n, cancel};
      }
    } else {
      agreements = 0;
    }
    prev = curv;
  }
  throw std::runtime_error("trapezoid_circle: node doubling did not converge (PrecisionExhausted)");
}

std::vector<MpFloat> real_poly_product(const mpq_class& c0a, const mpq_class& c1a, long ma,
                                       const mpq_class& c0b, const mpq_class& c1b, long mb) {
  // (c0a + c1a z)^ma (c0b + c1b z)^mb over MpFloat
  auto pa = binom_poly(MpFloat(c0a), MpFloat(c1a), ma);
  auto pb = binom_poly(MpFloat(c0b), MpFloat(c1b), mb);
  std::vector<MpFloat> out((size_t)(ma + mb + 1), MpFloat(0L));
  for (size_t i = 0; i < pa.size(); ++i)
    for (size_t j = 0; j < pb.size(); ++j) out[i + j] += pa[i] * pb[j];
  return out;
}

// Horner evaluation of sum_j cs[j] w^{-1-j}.
MpComplex inner_residue_sum(const std::vector<MpFloat>& cs, const MpComplex& w) {
  MpComplex winv = MpComplex(1) / w;
  MpComplex acc(0);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc += MpComplex(*it);
    acc *= winv;
  }
  return acc;
}

MpComplex gq_to_mp(const GQ& g) { return MpComplex(g.re, g.im); }

mpq_class weight_rat(const AztecDiamond& d) {
  if (d.a.is_exact()) return d.a.rat();
  mpq_class q(d.a.value);
  return q;
}

}  // namespace

KernelEntry f1_numeric(Vertex x, Vertex y, const AztecDiamond& d, const NumericContext& ctx) {
  const int n = d.n;
  long m = (x.x1 + 1) / 2;
  if (m <= 0) return {{0.0, 0.0}, 0.0, false};
  long q = (2 * n + 1 - y.x2) / 2;
  const mpq_class a = weight_rat(d);
  long y1h = y.x1 / 2, y2h = (y.x2 + 1) / 2;
  // precision escalates when cancellation across the contour eats the margin
  for (long prec = ctx.prec_for(n);; prec *= 2) {
    if (prec > 64 * ctx.prec_for(n))
      throw std::runtime_error("f1_numeric: precision escalation failed (PrecisionExhausted)");
    PrecisionGuard guard(prec);
    auto poly = real_poly_product(a, 1, x.x2 / 2, -1, a, (2 * n - x.x2) / 2);
    std::vector<MpFloat> cs((size_t)m, MpFloat(0L));
    for (long j = 0; j < m; ++j)
      if (m - 1 - j < (long)poly.size()) cs[j] = poly[m - 1 - j];
    MpFloat af(a);
    MpComplex center(MpFloat(1) / af);
    MpFloat rad = (MpFloat(1) / af) * MpFloat(0.25);
    auto f = [&](const MpComplex& w) {
      MpComplex aw1 = MpComplex(af) * w - MpComplex(1);
      MpComplex apw = MpComplex(af) + w;
      return pow_si(w, y1h) * pow_si(aw1, -q) * pow_si(apw, -y2h) * inner_residue_sum(cs, w);
    };
    int n_min = 2 * (int)(m + q) + 64;
    auto res = trapezoid_circle(f, center, rad, n_min, ctx.max_nodes, ctx.rel_tol);
    if (res.cancel_bits > prec - 64) continue;   // not enough clean bits: retry
    GQ sign = ipow(sign_exponent(x, y));
    MpComplex v = gq_to_mp(sign) * res.value;
    return {v.to_complex(), res.abs_error, false};
  }
}

KernelEntry f2_numeric(Vertex x, Vertex y, const AztecDiamond& d, const NumericContext& ctx) {
  const int n = d.n;
  PrecisionGuard guard(ctx.prec_for(n));
  const mpq_class a = weight_rat(d);
  long m1 = (long)(y.x2 - x.x2 - 1) / 2;
  if (m1 >= 0) return {{0.0, 0.0}, 0.0, false};
  long m2 = (long)(y.x1 - x.x1 - 1) / 2;
  long m3 = (long)(y.x2 - x.x2 + 1) / 2;
  size_t order = (size_t)(-m1);
  MpFloat inva = MpFloat(1) / MpFloat(a);
  auto s = series_mul(binom_series(MpComplex(MpFloat(inva)), m2, order),
                      binom_series(MpComplex(inva + MpFloat(a)), -m3, order), order);
  GQ sign = ipow(sign_exponent(x, y));
  MpComplex v = gq_to_mp(sign) * MpComplex(MpFloat(qpow(a, m1))) * s[order - 1];
  return {v.to_complex(), 0.0, false};
}

KernelEntry inverse_entry_numeric(Vertex x, Vertex y, const AztecDiamond& d,
                                  const NumericContext& ctx) {
  KernelEntry e1 = f1_numeric(x, y, d, ctx);
  if (x.x1 < y.x1 + 1) return e1;
  KernelEntry e2 = f2_numeric(x, y, d, ctx);
  return {e1.value - e2.value, e1.abs_error + e2.abs_error, false};
}

KernelEntry f1_numeric_2d(Vertex x, Vertex y, const AztecDiamond& d, int nodes) {
  const int n = d.n;
  PrecisionGuard guard(std::max(256L, 4L * n));
  const mpq_class a = weight_rat(d);
  MpFloat af(a);
  MpFloat inva = MpFloat(1) / af;
  MpFloat rad_z = (af < inva ? af : inva) * MpFloat(0.25);
  MpFloat rad_w = inva * MpFloat(0.25);
  MpComplex cw(inva);
  auto units = unit_circle_nodes(nodes);
  long mz = (x.x1 + 1) / 2, qw = (2 * n + 1 - y.x2) / 2;
  long x2h = x.x2 / 2, nx2h = (2 * n - x.x2) / 2, y1h = y.x1 / 2, y2h = (y.x2 + 1) / 2;
  MpComplex total(0);
  for (const MpComplex& uw : units) {
    MpComplex rw(rad_w * uw.re, rad_w * uw.im);
    MpComplex w = cw + rw;
    MpComplex wpart = pow_si(w, y1h) * pow_si(MpComplex(af) * w - MpComplex(1), -qw) *
                      pow_si(MpComplex(af) + w, -y2h);
    MpComplex inner(0);
    for (const MpComplex& uz : units) {
      MpComplex rz(rad_z * uz.re, rad_z * uz.im);
      MpComplex z = rz;
      MpComplex zpart = pow_si(MpComplex(af) + z, x2h) * pow_si(MpComplex(af) * z - MpComplex(1), nx2h) *
                        pow_si(z, -mz);
      inner += zpart / (w - z) * rz;
    }
    inner = inner / MpComplex((long)nodes);
    total += wpart * inner * rw;
  }
  total = total / MpComplex((long)nodes);
  GQ sign = ipow(sign_exponent(x, y));
  return {(gq_to_mp(sign) * total).to_complex(), 0.0, false};
}

struct LineKernelEvaluator::Impl {
  AztecDiamond d;
  int r;
  NumericContext ctx;
  std::vector<MpFloat> poly;
  mpq_class a;

  Impl(const AztecDiamond& dd, int rr, NumericContext cc) : d(dd), r(rr), ctx(cc), a(weight_rat(dd)) {
    PrecisionGuard guard(ctx.prec_for(d.n));
    poly = real_poly_product(a, 1, r, -1, a, d.n - r);
  }

  KernelEntry eval(int x1, int x2) {
    const int n = d.n;
    long q = n - r;
    for (long prec = ctx.prec_for(n);; prec *= 2) {
      if (prec > 64 * ctx.prec_for(n))
        throw std::runtime_error("line kernel: precision escalation failed (PrecisionExhausted)");
      PrecisionGuard guard(prec);
      if ((long)mpfr_get_prec(poly.empty() ? MpFloat(0L).raw() : poly[0].raw()) < prec)
        poly = real_poly_product(a, 1, r, -1, a, d.n - r);
      std::vector<MpFloat> cs((size_t)x1, MpFloat(0L));
      for (long j = 0; j < x1; ++j)
        if (x1 - 1 - j < (long)poly.size()) cs[j] = poly[x1 - 1 - j];
      MpFloat af(a);
      MpComplex center(MpFloat(1) / af);
      MpFloat rad = (MpFloat(1) / af) * MpFloat(0.25);
      auto f = [&](const MpComplex& w) {
        return pow_si(w, x2) * pow_si(MpComplex(af) * w - MpComplex(1), -q) *
               pow_si(MpComplex(af) + w, -(long)(r + 1)) * inner_residue_sum(cs, w);
      };
      int n_min = 2 * (int)(x1 + q) + 64;
      auto res = trapezoid_circle(f, center, rad, n_min, ctx.max_nodes, ctx.rel_tol);
      if (res.cancel_bits > prec - 64) continue;
      MpComplex v = -res.value;
      return {v.to_complex(), res.abs_error, false};
    }
  }
};

LineKernelEvaluator::LineKernelEvaluator(const AztecDiamond& d, int r, NumericContext ctx)
    : impl_(nullptr), prec_(ctx.prec_for(d.n)) {
  if (r < 1 || r > d.n - 1) throw std::out_of_range("line kernel: r must be in 1..n-1");
  impl_ = new Impl(d, r, ctx);
}

LineKernelEvaluator::~LineKernelEvaluator() { delete impl_; }

KernelEntry LineKernelEvaluator::eval(int x1, int x2) {
  if (x1 < 1 || x1 > impl_->d.n || x2 < 1 || x2 > impl_->d.n)
    throw std::out_of_range("line kernel: positions must be in 1..n");
  return impl_->eval(x1, x2);
}

KernelEntry line_kernel_numeric(int x1, int x2, int r, const AztecDiamond& d,
                                const NumericContext& ctx) {
  LineKernelEvaluator ev(d, r, ctx);
  return ev.eval(x1, x2);
}

KernelEntry hole_kernel(int x1, int x2, int r, const AztecDiamond& d, double z_c,
                        const NumericContext& ctx) {
  KernelEntry l = south_line_kernel(x1, x2, r, d, ctx);
  double factor = std::pow(z_c, x1 - x2);
  std::complex<double> v = (x1 == x2 ? 1.0 : 0.0) - factor * l.value;
  return {v, std::abs(factor) * l.abs_error, l.exact};
}

KernelEntry particle_kernel_numeric(int u1, int u2, int v1, int v2, const AztecDiamond& d,
                                    int nodes) {
  const int n = d.n;
  double a = d.a.value;
  if (a >= 1.0)
    throw std::domain_error("particle_kernel_numeric: circular contours need a < 1 (InvalidContour)");
  PrecisionGuard guard(std::max(256L, 4L * n));
  int eps1 = u1 & 1, eps2 = v1 & 1;
  int r = (u1 + eps1) / 2, s = (v1 + eps2) / 2;
  MpFloat af(a);
  MpFloat r1 = (af + MpFloat(1) / af) * MpFloat(0.5);
  MpFloat r2 = r1 * MpFloat(0.6);
  auto units = unit_circle_nodes(nodes);
  // Ktilde part
  MpComplex ktilde(0);
  for (const MpComplex& uw : units) {
    MpComplex w(r1 * uw.re, r1 * uw.im);
    MpComplex wpart = pow_si(w, -(long)u2) * pow_si(MpComplex(1) - MpComplex(af) * w, -(long)(n - r + eps1)) *
                      pow_si(MpComplex(1) + MpComplex(af) / w, -(long)r);
    MpComplex inner(0);
    for (const MpComplex& uz : units) {
      MpComplex z(r2 * uz.re, r2 * uz.im);
      MpComplex zpart = pow_si(z, (long)v2) * pow_si(MpComplex(1) - MpComplex(af) * z, (long)(n - s + eps2)) *
                        pow_si(MpComplex(1) + MpComplex(af) / z, (long)s);
      inner += zpart / z * (w / (w - z)) * z;   // dz/z * z (node measure)
    }
    inner = inner / MpComplex((long)nodes);
    ktilde += wpart / w * inner * w;
  }
  ktilde = ktilde / MpComplex((long)nodes);
  // phi part (single unit-circle integral)
  MpComplex phi(0);
  if (u1 < v1) {
    for (const MpComplex& uz : units) {
      const MpComplex& z = uz;
      MpComplex val = pow_si(z, (long)(v2 - u2)) *
                      pow_si(MpComplex(1) - MpComplex(af) * z, (long)(r - s + eps2 - eps1)) /
                      pow_si(MpComplex(1) + MpComplex(af) / z, (long)(r - s));
      phi += val;   // dz/z * z cancel on the unit circle
    }
    phi = phi / MpComplex((long)nodes);
  }
  MpComplex v = ktilde - phi;
  return {v.to_complex(), 0.0, false};
}

std::complex<double> det_complex(std::vector<std::vector<std::complex<double>>> m) {
  size_t sz = m.size();
  std::complex<double> det = 1.0;
  for (size_t c = 0; c < sz; ++c) {
    size_t p = c;
    double best = 0;
    for (size_t r = c; r < sz; ++r)
      if (std::abs(m[r][c]) > best) { best = std::abs(m[r][c]); p = r; }
    if (best == 0) return 0.0;
    if (p != c) { std::swap(m[p], m[c]); det = -det; }
    det *= m[c][c];
    for (size_t r = c + 1; r < sz; ++r) {
      std::complex<double> f = m[r][c] / m[c][c];
      if (f == 0.0) continue;
      for (size_t j = c; j < sz; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

KernelEntry correlation_probability_numeric(const std::vector<Dimer>& edges,
                                            const AztecDiamond& d, const NumericContext& ctx) {
  size_t m = edges.size();
  mpq_class a = weight_rat(d);
  std::vector<std::vector<std::complex<double>>> l(m, std::vector<std::complex<double>>(m));
  double err = 0;
  for (size_t i = 0; i < m; ++i) {
    std::complex<double> kv = kasteleyn_entry(edges[i].b, edges[i].w, a).to_complex();
    for (size_t j = 0; j < m; ++j) {
      KernelEntry e = inverse_entry_numeric(edges[j].w, edges[i].b, d, ctx);
      l[i][j] = kv * e.value;
      err += std::abs(kv) * e.abs_error;
    }
  }
  return {det_complex(std::move(l)), err, false};
}

KernelEntry inverse_entry(Vertex x, Vertex y, const AztecDiamond& d, const NumericContext& ctx) {
  if (d.a.is_exact()) return KernelEntry::from_exact(inverse_entry_exact(x, y, d));
  return inverse_entry_numeric(x, y, d, ctx);
}

KernelEntry correlation_probability(const std::vector<Dimer>& edges, const AztecDiamond& d,
                                    const NumericContext& ctx) {
  if (d.a.is_exact()) {
    mpq_class p = correlation_probability_exact(edges, d);
    return {{p.get_d(), 0.0}, 0.0, true};
  }
  return correlation_probability_numeric(edges, d, ctx);
}

KernelEntry south_line_kernel(int x1, int x2, int r, const AztecDiamond& d,
                              const NumericContext& ctx) {
  if (d.a.is_exact()) return KernelEntry::from_exact(line_kernel_exact(x1, x2, r, d));
  return line_kernel_numeric(x1, x2, r, d, ctx);
}

}  // namespace aztec
