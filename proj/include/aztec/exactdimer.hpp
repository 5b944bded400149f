#pragma once

#include <vector>

#include "aztec/lattice.hpp"
#include "aztec/rational.hpp"

namespace aztec {

// K(b,w) for b = (x1,x2): (-1)^{l+(x1+x2-1)/2} on w = b+(-1)^l e1 and
// (-1)^{l+(x1+x2-1)/2} a i on w = b-(-1)^l e2; 0 elsewhere. Nonzero entries
// have modulus 1 or a and every face product is negative.
GQ kasteleyn_entry(Vertex b, Vertex w, const mpq_class& a);

struct KasteleynMatrix {
  int n;
  mpq_class a;
  std::vector<std::vector<GQ>> entries;   // rows: blacks, cols: whites (canonical order)
};

KasteleynMatrix build_kasteleyn(const AztecDiamond& d);

// |det K| as an exact rational (the determinant itself is real or purely
// imaginary up to Gaussian units; its norm is a perfect square in Q).
mpq_class partition_function(const AztecDiamond& d);

struct InverseResult {
  GQ det;
  std::vector<std::vector<GQ>> inv;   // rows: whites, cols: blacks
};

// Exact Gauss-Jordan inverse; throws Singular (domain_error) if det K = 0.
InverseResult invert_direct(const KasteleynMatrix& k);

GQ gq_det(std::vector<std::vector<GQ>> m);   // destructive elimination, by value

// All perfect matchings; guard n <= 5 (count is 2^{n(n+1)/2}).
// Throws TooLarge (std::length_error) past the guard.
std::vector<Tiling> enumerate_tilings(const AztecDiamond& d);

// a^{#east + #west}: vertical dominos carry weight a, horizontal weight 1.
mpq_class tiling_weight(const Tiling& t, const mpq_class& a);
int count_vertical(const Tiling& t);
int count_kind(const Tiling& t, DimerKind k);

}  // namespace aztec
