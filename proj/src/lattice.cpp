#include "aztec/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace aztec {

const char* kind_name(DimerKind k) {
  switch (k) {
    case DimerKind::North: return "N";
    case DimerKind::East: return "E";
    case DimerKind::South: return "S";
    case DimerKind::West: return "W";
  }
  return "?";
}

char kind_letter(DimerKind k) { return kind_name(k)[0]; }

DimerKind kind_from_letter(char c) {
  switch (c) {
    case 'N': return DimerKind::North;
    case 'E': return DimerKind::East;
    case 'S': return DimerKind::South;
    case 'W': return DimerKind::West;
  }
  throw std::invalid_argument(std::string("unknown dimer kind: ") + c);
}

bool kind_is_vertical(DimerKind k) { return k == DimerKind::East || k == DimerKind::West; }

std::vector<Vertex> AztecDiamond::whites() const {
  std::vector<Vertex> out;
  out.reserve(n * (n + 1));
  for (int x2 = 0; x2 <= 2 * n; x2 += 2)
    for (int x1 = 1; x1 <= 2 * n - 1; x1 += 2) out.push_back({x1, x2});
  return out;
}

std::vector<Vertex> AztecDiamond::blacks() const {
  std::vector<Vertex> out;
  out.reserve(n * (n + 1));
  for (int x2 = 1; x2 <= 2 * n - 1; x2 += 2)
    for (int x1 = 0; x1 <= 2 * n; x1 += 2) out.push_back({x1, x2});
  return out;
}

int AztecDiamond::white_index(Vertex v) const {
  if (!contains_white(v)) throw std::out_of_range("white_index: vertex outside diamond");
  return (v.x2 / 2) * n + (v.x1 - 1) / 2;
}

int AztecDiamond::black_index(Vertex v) const {
  if (!contains_black(v)) throw std::out_of_range("black_index: vertex outside diamond");
  return ((v.x2 - 1) / 2) * (n + 1) + v.x1 / 2;
}

DimerKind classify_dimer(Vertex b, Vertex w) {
  if (!is_black_parity(b) || !is_white_parity(w))
    throw std::invalid_argument("classify_dimer: wrong vertex colors");
  Vertex d = w - b;
  if (d == kE1) return DimerKind::North;
  if (d == kE2) return DimerKind::East;
  if (d == Vertex{-1, -1}) return DimerKind::South;
  if (d == Vertex{1, -1}) return DimerKind::West;
  throw std::invalid_argument("classify_dimer: vertices not adjacent");
}

void Tiling::normalize() {
  std::sort(dimers.begin(), dimers.end(),
            [](const Dimer& a, const Dimer& b) { return std::pair(a.b.x1, a.b.x2) < std::pair(b.b.x1, b.b.x2); });
}

TilingViolation validate_tiling(const AztecDiamond& d, const Tiling& t) {
  TilingViolation v;
  std::map<Vertex, int> cover;
  for (const Dimer& e : t.dimers) {
    if (!d.contains_black(e.b) || !d.contains_white(e.w)) {
      std::ostringstream os;
      os << "dimer endpoint outside diamond: (" << e.b.x1 << "," << e.b.x2 << ")-(" << e.w.x1
         << "," << e.w.x2 << ")";
      v.messages.push_back(os.str());
      continue;
    }
    try {
      classify_dimer(e.b, e.w);
    } catch (const std::invalid_argument&) {
      std::ostringstream os;
      os << "non-adjacent dimer: (" << e.b.x1 << "," << e.b.x2 << ")-(" << e.w.x1 << "," << e.w.x2
         << ")";
      v.messages.push_back(os.str());
      continue;
    }
    cover[e.b]++;
    cover[e.w]++;
  }
  for (Vertex w : d.whites())
    if (!cover.count(w)) v.uncovered.push_back(w);
  for (Vertex b : d.blacks())
    if (!cover.count(b)) v.uncovered.push_back(b);
  for (const auto& [vert, c] : cover)
    if (c > 1) v.doubly_covered.push_back(vert);
  return v;
}

ParticleCoord particle_coords(Vertex x) { return {x.x2, x.x2 - x.x1 + 1}; }

ParticleSet particles_of_tiling(const AztecDiamond& d, const Tiling& t) {
  ParticleSet out;
  for (const Dimer& e : t.dimers) {
    DimerKind k = classify_dimer(e.b, e.w);
    if (k == DimerKind::South || k == DimerKind::West) {
      out.blue.push_back(e.w);
      out.red.push_back(e.b);
    }
  }
  std::sort(out.blue.begin(), out.blue.end());
  std::sort(out.red.begin(), out.red.end());
  (void)d;
  return out;
}

int HeightField::height(int m1, int m2) const {
  if (!in_range(m1, m2) || at(m1, m2) == kUnset)
    throw std::out_of_range("HeightField: no such face");
  return at(m1, m2);
}

std::vector<std::pair<std::pair<int, int>, int>> HeightField::entries() const {
  std::vector<std::pair<std::pair<int, int>, int>> out;
  for (int m1 = 0; m1 <= 2 * n_; ++m1)
    for (int m2 = (m1 % 2); m2 <= 2 * n_; m2 += 2)
      if (at(m1, m2) != kUnset) out.push_back({{m1, m2}, at(m1, m2)});
  return out;
}

namespace {

// Crossing from face f to face f+delta (delta in {(+-1,+-1)}) steps over the
// graph edge whose endpoints are the two shared lattice neighbors of both
// faces. Returns the height increment for that crossing.
int crossing_increment(const AztecDiamond& d, const std::map<Vertex, Vertex>& match, int m1,
                       int m2, int d1, int d2, bool* exists) {
  // Shared corners of faces (m1,m2) and (m1+d1,m2+d2): the edge endpoints are
  // (m1+d1, m2) and (m1, m2+d2).
  Vertex p{m1 + d1, m2};
  Vertex q{m1, m2 + d2};
  Vertex b, w;
  if (is_black_parity(p) && is_white_parity(q)) {
    b = p; w = q;
  } else if (is_black_parity(q) && is_white_parity(p)) {
    b = q; w = p;
  } else {
    *exists = false;
    return 0;
  }
  if (!d.contains_black(b) || !d.contains_white(w)) {
    *exists = false;
    return 0;
  }
  *exists = true;
  bool covered = false;
  auto it = match.find(b);
  if (it != match.end() && it->second == w) covered = true;
  // The endpoints are p = c+(d1,0) and q = c+(0,d2); the one on the left of the
  // travel direction (d1,d2) lies along rot90(d1,d2) = (-d2,d1), i.e. p iff
  // d1*d2 < 0.
  Vertex lhs = (d1 * d2 < 0) ? p : q;
  bool black_left = is_black_parity(lhs);
  if (covered) return black_left ? +3 : -3;
  return black_left ? -1 : +1;
}

}  // namespace

HeightField height_function(const AztecDiamond& d, const Tiling& t) {
  auto violation = validate_tiling(d, t);
  if (!violation.ok()) throw std::invalid_argument("height_function: invalid tiling");
  std::map<Vertex, Vertex> match;   // black -> white
  for (const Dimer& e : t.dimers) match[e.b] = e.w;

  HeightField h(d.n);
  h.set(0, 0, 0);
  std::deque<std::pair<int, int>> queue{{0, 0}};
  while (!queue.empty()) {
    auto [m1, m2] = queue.front();
    queue.pop_front();
    int base = h.height(m1, m2);
    for (auto [d1, d2] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
      int n1 = m1 + d1, n2 = m2 + d2;
      if (n1 < 0 || n1 > 2 * d.n || n2 < 0 || n2 > 2 * d.n) continue;
      bool exists = false;
      int inc = crossing_increment(d, match, m1, m2, d1, d2, &exists);
      if (!exists) continue;
      int val = base + inc;
      if (h.has(n1, n2)) {
        if (h.height(n1, n2) != val)
          throw std::logic_error("height_function: inconsistent heights (internal bug)");
      } else {
        h.set(n1, n2, val);
        queue.push_back({n1, n2});
      }
    }
  }
  return h;
}

Weight Weight::parse(const std::string& s) {
  if (s.find('/') != std::string::npos || s.find_first_of(".eE") == std::string::npos) {
    // integer or p/q: exact
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Weight: cannot parse '" + s + "'");
    q.canonicalize();
    return Weight(q);
  }
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("Weight: cannot parse '" + s + "'");
  return Weight(v);
}

std::string Weight::str() const {
  if (exact) return exact->get_str();
  char buf[32];
  snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace aztec
