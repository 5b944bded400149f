#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aztec/rational.hpp"

namespace aztec {

// Kasteleyn coordinates. White vertices have x1 odd, x2 even; black vertices
// x1 even, x2 odd. The lattice steps are e1 = (1,1) and e2 = (-1,1).
struct Vertex {
  int x1 = 0, x2 = 0;
  friend bool operator==(Vertex a, Vertex b) { return a.x1 == b.x1 && a.x2 == b.x2; }
  friend auto operator<=>(Vertex a, Vertex b) = default;
};

inline constexpr Vertex kE1{1, 1};
inline constexpr Vertex kE2{-1, 1};

inline Vertex operator+(Vertex a, Vertex b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline Vertex operator-(Vertex a, Vertex b) { return {a.x1 - b.x1, a.x2 - b.x2}; }

enum class Color { White, Black };
inline bool is_white_parity(Vertex v) { return (v.x1 & 1) == 1 && (v.x2 & 1) == 0; }
inline bool is_black_parity(Vertex v) { return (v.x1 & 1) == 0 && (v.x2 & 1) == 1; }

enum class DimerKind : uint8_t { North, East, South, West };
const char* kind_name(DimerKind k);   // "N","E","S","W"
char kind_letter(DimerKind k);
DimerKind kind_from_letter(char c);
bool kind_is_vertical(DimerKind k);   // E and W dominos are the a-weighted ones

struct Dimer {
  Vertex b, w;
  friend bool operator==(const Dimer&, const Dimer&) = default;
  friend auto operator<=>(const Dimer&, const Dimer&) = default;
};

struct AztecDiamond {
  int n = 1;
  Weight a;

  AztecDiamond(int order, Weight weight = Weight(1.0)) : n(order), a(std::move(weight)) {
    if (n < 1) throw std::invalid_argument("AztecDiamond: order must be >= 1");
    if (a.value <= 0) throw std::invalid_argument("AztecDiamond: weight must be > 0");
  }

  bool contains_white(Vertex v) const {
    return is_white_parity(v) && v.x1 >= 1 && v.x1 <= 2 * n - 1 && v.x2 >= 0 && v.x2 <= 2 * n;
  }
  bool contains_black(Vertex v) const {
    return is_black_parity(v) && v.x1 >= 0 && v.x1 <= 2 * n && v.x2 >= 1 && v.x2 <= 2 * n - 1;
  }

  // Canonical row-major enumerations (increasing x2, then x1); these orders
  // index the rows/columns of the Kasteleyn matrix.
  std::vector<Vertex> whites() const;
  std::vector<Vertex> blacks() const;
  int white_index(Vertex v) const;
  int black_index(Vertex v) const;
  int num_vertices_per_color() const { return n * (n + 1); }
};

// Throws NotAdjacent (std::invalid_argument) if w - b is not a unit step.
DimerKind classify_dimer(Vertex b, Vertex w);

struct Tiling {
  int n = 1;
  std::vector<Dimer> dimers;   // kept sorted by (b.x1, b.x2)

  void normalize();
  bool operator==(const Tiling&) const = default;
};

struct TilingViolation {
  std::vector<Vertex> uncovered;
  std::vector<Vertex> doubly_covered;   // covered more than once, or invalid edges
  std::vector<std::string> messages;
  bool ok() const { return uncovered.empty() && doubly_covered.empty() && messages.empty(); }
};

TilingViolation validate_tiling(const AztecDiamond& d, const Tiling& t);

// Particle coordinates u1 = x2, u2 = (x2 - x1 + 1)/2 (doubled to stay integral:
// returns (u1, 2*u2) would be ugly; both components are integers for lattice
// vertices since x1 + x2 is odd).
struct ParticleCoord {
  int u1, u2_times2;   // u2 = u2_times2 / 2; integral for actual vertices
};
ParticleCoord particle_coords(Vertex x);

struct ParticleSet {
  std::vector<Vertex> blue;   // on white vertices
  std::vector<Vertex> red;    // on black vertices
};

// Blue at w iff a dimer covers (w+e1, w) or (w+e2, w); red at b iff a dimer
// covers (b, b-e1) or (b, b-e2). Particles sit on south and west dimers.
ParticleSet particles_of_tiling(const AztecDiamond& d, const Tiling& t);

// Height function on the faces of the Aztec diamond graph. Faces are indexed
// by lattice points (m1, m2) with m1 + m2 even inside [0,2n]^2; the face at
// the bottom corner (0,0) carries height 0.
class HeightField {
 public:
  HeightField(int n) : n_(n), h_((2 * n + 1) * (2 * n + 1), kUnset) {}
  int n() const { return n_; }
  bool has(int m1, int m2) const { return in_range(m1, m2) && at(m1, m2) != kUnset; }
  int height(int m1, int m2) const;
  void set(int m1, int m2, int v) { h_[idx(m1, m2)] = v; }
  std::vector<std::pair<std::pair<int, int>, int>> entries() const;

 private:
  static constexpr int kUnset = INT32_MIN;
  bool in_range(int m1, int m2) const {
    return m1 >= 0 && m1 <= 2 * n_ && m2 >= 0 && m2 <= 2 * n_ && ((m1 + m2) % 2 == 0);
  }
  int idx(int m1, int m2) const { return m1 * (2 * n_ + 1) + m2; }
  int at(int m1, int m2) const { return h_[idx(m1, m2)]; }
  int n_;
  std::vector<int> h_;
};

// BFS integration of the +-3 / -+1 increments; aborts (logic_error) on any
// inconsistency, which would indicate a broken tiling slipped past validation.
HeightField height_function(const AztecDiamond& d, const Tiling& t);

}  // namespace aztec
