#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "aztec/exactdimer.hpp"
#include "aztec/lattice.hpp"
#include "aztec/mp.hpp"
#include "aztec/rational.hpp"
#include "aztec/series.hpp"

namespace aztec {

// ---------------------------------------------------------------------------
// Exact regime: iterated-residue evaluation of the double contour integrals.
// The inner |z|=eps integral is the residue at z=0 (a finite coefficient sum
// after expanding 1/(w-z) in z/w); the outer |w-1/a|=eps integral is the
// residue at w=1/a, extracted from a truncated series in t = w - 1/a. All
// fractional-power sign prefactors (-1)^{p/4} are taken on the principal
// branch, i.e. as i^{p/2}.
// ---------------------------------------------------------------------------

// f1(x,y): x white (x1 = -1 allowed, returning 0: no residue at z=0), y black.
GQ f1_exact(Vertex x, Vertex y, const AztecDiamond& d);

// f2(x,y): single residue at z=0; identically 0 when (y2-x2-1)/2 >= 0.
GQ f2_exact(Vertex x, Vertex y, const AztecDiamond& d);

// K^{-1}(x,y) = f1 for x1 < y1+1, else f1 - f2.
GQ inverse_entry_exact(Vertex x, Vertex y, const AztecDiamond& d);

// det( K(b_i,w_i) K^{-1}(w_j,b_i) ) over distinct edges; real, in [0,1].
mpq_class correlation_probability_exact(const std::vector<Dimer>& edges, const AztecDiamond& d);

// South-domino line kernel L(x1,x2) on the line y=r; positions 1..n. The
// black vertex (2s, 2r+1) must lie in the diamond, so r ranges over 1..n-1
// (InvalidLine otherwise).
GQ line_kernel_exact(int x1, int x2, int r, const AztecDiamond& d);

// Particle kernel K_n(u1,u2;v1,v2) = Ktilde - phi, with the parity decoding
// u1 = 2r - eps1, v1 = 2s - eps2, eps in {0,1}. Exact residues: the inner
// z-integral picks the pole at 0, the outer w-integral the poles at 0 and -a
// (the circles satisfy 0 < r2 < r1 and a < r1 < 1/a, so 1/a stays outside).
GQ particle_kernel_exact(int u1, int u2, int v1, int v2, const AztecDiamond& d);
GQ ktilde_exact(int u1, int u2, int v1, int v2, const AztecDiamond& d);
GQ phi_exact(int u1, int v1, int u2, int v2, const AztecDiamond& d);

// ---------------------------------------------------------------------------
// Numeric regime: arbitrary-precision floats (MPFR), trapezoid rule on the
// outer circle with node doubling; the inner contour is still the exact
// residue sum. Precision defaults to ~4n bits since integrand magnitudes grow
// like e^{O(n)}.
// ---------------------------------------------------------------------------

struct NumericContext {
  long prec_bits = 0;        // 0: pick max(128, 4n)
  double rel_tol = 1e-15;    // node-doubling stop criterion
  int max_nodes = 1 << 17;
  long prec_for(int n) const { return prec_bits ? prec_bits : std::max(128L, 4L * n); }
};

struct KernelEntry {
  std::complex<double> value;
  double abs_error = 0.0;    // heuristic |T_2N - T_N| in the numeric regime
  bool exact = false;

  static KernelEntry from_exact(const GQ& g) { return {g.to_complex(), 0.0, true}; }
};

// Numeric f1/f2/K^{-1}; throws PrecisionExhausted (runtime_error) if node
// doubling fails to converge.
KernelEntry f1_numeric(Vertex x, Vertex y, const AztecDiamond& d, const NumericContext& ctx = {});
KernelEntry f2_numeric(Vertex x, Vertex y, const AztecDiamond& d, const NumericContext& ctx = {});
KernelEntry inverse_entry_numeric(Vertex x, Vertex y, const AztecDiamond& d,
                                  const NumericContext& ctx = {});

// Reference evaluation of f1 with the plain 2D product trapezoid rule on both
// circles (kept as a cross-check of the separated scheme at small n).
KernelEntry f1_numeric_2d(Vertex x, Vertex y, const AztecDiamond& d, int nodes);

// Batch evaluator for the line kernel at fixed (n, r): reuses the expanded
// polynomial (a+z)^r(az-1)^{n-r} across entries.
class LineKernelEvaluator {
 public:
  LineKernelEvaluator(const AztecDiamond& d, int r, NumericContext ctx = {});
  ~LineKernelEvaluator();
  KernelEntry eval(int x1, int x2);
  long prec_bits() const { return prec_; }

 private:
  struct Impl;
  Impl* impl_;
  long prec_;
};

KernelEntry line_kernel_numeric(int x1, int x2, int r, const AztecDiamond& d,
                                const NumericContext& ctx = {});

// L*(x1,x2) = delta - z_c^{x1-x2} L(x1,x2); exact L is used when the weight is
// rational, numeric otherwise. z_c comes from the scaling-limit parameters.
KernelEntry hole_kernel(int x1, int x2, int r, const AztecDiamond& d, double z_c,
                        const NumericContext& ctx = {});

// Numeric particle kernel via 2D trapezoid quadrature on circles with
// 0 < r2 < r1 and a < r1 < 1/a; such circles exist only for a < 1
// (InvalidContour = std::domain_error otherwise). The exact path above is the
// analytic continuation valid for every rational a.
KernelEntry particle_kernel_numeric(int u1, int u2, int v1, int v2, const AztecDiamond& d,
                                    int nodes);

// Kenyon probability with numeric entries.
KernelEntry correlation_probability_numeric(const std::vector<Dimer>& edges,
                                            const AztecDiamond& d,
                                            const NumericContext& ctx = {});

// Convenience dispatcher honoring the weight's regime.
KernelEntry inverse_entry(Vertex x, Vertex y, const AztecDiamond& d,
                          const NumericContext& ctx = {});
KernelEntry correlation_probability(const std::vector<Dimer>& edges, const AztecDiamond& d,
                                    const NumericContext& ctx = {});
KernelEntry south_line_kernel(int x1, int x2, int r, const AztecDiamond& d,
                              const NumericContext& ctx = {});

std::complex<double> det_complex(std::vector<std::vector<std::complex<double>>> m);

}  // namespace aztec
