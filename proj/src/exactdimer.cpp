#include "aztec/exactdimer.hpp"

#include <algorithm>
#include <set>

namespace aztec {

GQ kasteleyn_entry(Vertex b, Vertex w, const mpq_class& a) {
  if (!is_black_parity(b) || !is_white_parity(w)) return GQ(0);
  int s = (b.x1 + b.x2 - 1) / 2;
  mpq_class sign = (s % 2 == 0) ? 1 : -1;
  Vertex d = w - b;
  if (d == Vertex{1, 1}) return GQ(sign);                       // north, l = 0
  if (d == Vertex{-1, -1}) return GQ(-sign);                    // south, l = 1
  if (d == Vertex{1, -1}) return GQ(0, sign * a);               // west,  l = 0
  if (d == Vertex{-1, 1}) return GQ(0, -sign * a);              // east,  l = 1
  return GQ(0);
}

KasteleynMatrix build_kasteleyn(const AztecDiamond& d) {
  KasteleynMatrix k{d.n, d.a.rat(), {}};
  auto ws = d.whites();
  auto bs = d.blacks();
  k.entries.resize(bs.size());
  for (size_t i = 0; i < bs.size(); ++i) {
    k.entries[i].resize(ws.size());
    for (size_t j = 0; j < ws.size(); ++j) k.entries[i][j] = kasteleyn_entry(bs[i], ws[j], k.a);
  }
  return k;
}

GQ gq_det(std::vector<std::vector<GQ>> m) {
  size_t sz = m.size();
  GQ det(1);
  for (size_t c = 0; c < sz; ++c) {
    size_t p = c;
    while (p < sz && m[p][c].is_zero()) ++p;
    if (p == sz) return GQ(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    GQ inv = GQ(1) / m[c][c];
    for (size_t r = c + 1; r < sz; ++r) {
      if (m[r][c].is_zero()) continue;
      GQ f = m[r][c] * inv;
      for (size_t j = c; j < sz; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

mpq_class partition_function(const AztecDiamond& d) {
  GQ det = gq_det(build_kasteleyn(d).entries);
  // |det| = sqrt(re^2 + im^2); for this matrix det is real or purely imaginary.
  if (det.re != 0 && det.im != 0)
    throw std::logic_error("partition_function: determinant not axis-aligned");
  mpq_class v = det.re != 0 ? det.re : det.im;
  return v >= 0 ? v : mpq_class(-v);
}

InverseResult invert_direct(const KasteleynMatrix& k) {
  size_t sz = k.entries.size();
  std::vector<std::vector<GQ>> a(k.entries);
  std::vector<std::vector<GQ>> inv(sz, std::vector<GQ>(sz));
  for (size_t i = 0; i < sz; ++i) inv[i][i] = GQ(1);
  GQ det(1);
  for (size_t c = 0; c < sz; ++c) {
    size_t p = c;
    while (p < sz && a[p][c].is_zero()) ++p;
    if (p == sz) throw std::domain_error("invert_direct: singular Kasteleyn matrix");
    if (p != c) {
      std::swap(a[p], a[c]);
      std::swap(inv[p], inv[c]);
      det = -det;
    }
    det *= a[c][c];
    GQ f = GQ(1) / a[c][c];
    for (size_t j = 0; j < sz; ++j) {
      a[c][j] *= f;
      inv[c][j] *= f;
    }
    for (size_t r = 0; r < sz; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      GQ g = a[r][c];
      for (size_t j = 0; j < sz; ++j) {
        a[r][j] -= g * a[c][j];
        inv[r][j] -= g * inv[c][j];
      }
    }
  }
  // inv now holds K^{-1} with rows indexed like K's columns (whites).
  return {det, std::move(inv)};
}

namespace {

void enumerate_rec(const AztecDiamond& d, const std::vector<Vertex>& ws, size_t i,
                   std::set<Vertex>& used_b, std::vector<Dimer>& cur,
                   std::vector<Tiling>& out) {
  if (i == ws.size()) {
    Tiling t{d.n, cur};
    t.normalize();
    out.push_back(std::move(t));
    return;
  }
  Vertex w = ws[i];
  for (Vertex step : {kE1, kE2, Vertex{-1, -1}, Vertex{1, -1}}) {
    Vertex b = w - step;   // w = b + step
    if (!d.contains_black(b) || used_b.count(b)) continue;
    used_b.insert(b);
    cur.push_back({b, w});
    enumerate_rec(d, ws, i + 1, used_b, cur, out);
    cur.pop_back();
    used_b.erase(b);
  }
}

}  // namespace

std::vector<Tiling> enumerate_tilings(const AztecDiamond& d) {
  if (d.n > 5) throw std::length_error("enumerate_tilings: n > 5");
  std::vector<Tiling> out;
  auto ws = d.whites();
  std::set<Vertex> used;
  std::vector<Dimer> cur;
  enumerate_rec(d, ws, 0, used, cur, out);
  return out;
}

mpq_class tiling_weight(const Tiling& t, const mpq_class& a) {
  return qpow(a, count_vertical(t));
}

int count_vertical(const Tiling& t) {
  int c = 0;
  for (const Dimer& e : t.dimers)
    if (kind_is_vertical(classify_dimer(e.b, e.w))) ++c;
  return c;
}

int count_kind(const Tiling& t, DimerKind k) {
  int c = 0;
  for (const Dimer& e : t.dimers)
    if (classify_dimer(e.b, e.w) == k) ++c;
  return c;
}

}  // namespace aztec
