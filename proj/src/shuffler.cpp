#include "aztec/shuffler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace aztec {

namespace {

// Cell grid for the unrotated frame: AD_m consists of cells (i,j) with
// |2i+1| + |2j+1| <= 2m; dominos are tracked by their lower-left cell.
enum CellState : uint8_t { kEmpty = 0, kHLeft, kHRight, kVBottom, kVTop };

struct Grid {
  int n;        // target order; arrays sized for the final diamond plus margin
  int stride;
  std::vector<uint8_t> s;

  explicit Grid(int order) : n(order), stride(2 * order + 2), s((size_t)stride * stride, kEmpty) {}
  int idx(int i, int j) const { return (i + n) + (j + n) * stride; }
  uint8_t get(int i, int j) const { return s[idx(i, j)]; }
  void set(int i, int j, uint8_t v) { s[idx(i, j)] = v; }
};

bool in_ad(int i, int j, int m) { return std::abs(2 * i + 1) + std::abs(2 * j + 1) <= 2 * m; }

// H-domino at (i,j) is north-going iff i+j == m (mod 2); same parity rule
// makes a V-domino east-going.
bool goes_positive(int i, int j, int m) { return ((i + j) - m) % 2 == 0; }

void shuffle_round(Grid& g, int m, double p_vertical, Xoshiro256& rng) {
  const int lo = -(m + 1), hi = m;   // cell range of AD_{m+1}
  // destruction: N under S (stacked H pair), E left of W (adjacent V pair)
  for (int j = -m; j < m; ++j) {
    for (int i = -m; i < m; ++i) {
      if (!in_ad(i, j, m)) continue;
      uint8_t st = g.get(i, j);
      if (st == kHLeft && goes_positive(i, j, m) && j + 1 < m + 1 && g.get(i, j + 1) == kHLeft) {
        g.set(i, j, kEmpty); g.set(i + 1, j, kEmpty);
        g.set(i, j + 1, kEmpty); g.set(i + 1, j + 1, kEmpty);
      } else if (st == kVBottom && goes_positive(i, j, m) && i + 1 < m + 1 &&
                 g.get(i + 1, j) == kVBottom) {
        g.set(i, j, kEmpty); g.set(i, j + 1, kEmpty);
        g.set(i + 1, j, kEmpty); g.set(i + 1, j + 1, kEmpty);
      }
    }
  }
  // slide into a fresh grid
  Grid out(g.n);
  for (int j = -m; j < m; ++j) {
    for (int i = -m; i < m; ++i) {
      uint8_t st = g.get(i, j);
      if (st == kHLeft) {
        int j2 = j + (goes_positive(i, j, m) ? 1 : -1);
        out.set(i, j2, kHLeft);
        out.set(i + 1, j2, kHRight);
      } else if (st == kVBottom) {
        int i2 = i + (goes_positive(i, j, m) ? 1 : -1);
        out.set(i2, j, kVBottom);
        out.set(i2, j + 1, kVTop);
      }
    }
  }
  // creation: scan lexicographically by (j, i); the first empty cell of each
  // hole is the lower-left corner of a 2x2 block.
  for (int j = lo; j <= hi; ++j) {
    for (int i = lo; i <= hi; ++i) {
      if (!in_ad(i, j, m + 1) || out.get(i, j) != kEmpty) continue;
      if (rng.uniform() < p_vertical) {
        out.set(i, j, kVBottom); out.set(i, j + 1, kVTop);
        out.set(i + 1, j, kVBottom); out.set(i + 1, j + 1, kVTop);
      } else {
        out.set(i, j, kHLeft); out.set(i + 1, j, kHRight);
        out.set(i, j + 1, kHLeft); out.set(i + 1, j + 1, kHRight);
      }
    }
  }
  g = std::move(out);
}

}  // namespace

Tiling sample_tiling(const SamplerConfig& cfg, uint64_t sample_index) {
  if (cfg.n < 1) throw std::invalid_argument("sample_tiling: n >= 1 required");
  if (cfg.a.value <= 0) throw std::invalid_argument("sample_tiling: a > 0 required");
  double a = cfg.a.value;
  double pv = a * a / (1.0 + a * a);
  Xoshiro256 rng(cfg.seed, sample_index);
  Grid g(cfg.n);
  for (int m = 0; m < cfg.n; ++m) shuffle_round(g, m, pv, rng);

  Tiling t{cfg.n, {}};
  const int n = cfg.n;
  // cell (i,j) of the centered frame sits at Kasteleyn vertex (i-j+n, i+j+n+1)
  auto to_vertex = [n](int ci, int cj) { return Vertex{ci - cj + n, ci + cj + n + 1}; };
  for (int j = -n; j < n; ++j) {
    for (int i = -n; i < n; ++i) {
      if (!in_ad(i, j, n)) continue;
      uint8_t st = g.get(i, j);
      bool pos = goes_positive(i, j, n);
      if (st == kHLeft) {
        // a north domino has its white cell on the right
        int wi = pos ? i + 1 : i, bi = pos ? i : i + 1;
        t.dimers.push_back({to_vertex(bi, j), to_vertex(wi, j)});
      } else if (st == kVBottom) {
        // an east domino has its white cell on top
        int wj = pos ? j + 1 : j, bj = pos ? j : j + 1;
        t.dimers.push_back({to_vertex(i, bj), to_vertex(i, wj)});
      }
    }
  }
  t.normalize();
  return t;
}

void for_each_sample(const SamplerConfig& cfg,
                     const std::function<void(int, const Tiling&)>& consume) {
  int threads = cfg.threads;
  if (threads <= 0) {
    if (const char* env = std::getenv("DIMERCTL_THREADS")) threads = std::atoi(env);
    if (threads <= 0) threads = (int)std::thread::hardware_concurrency();
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads, std::max(1, cfg.count));
  if (threads == 1) {
    for (int i = 0; i < cfg.count; ++i) consume(i, sample_tiling(cfg, i));
    return;
  }
  std::mutex mu;
  std::atomic_int next{0};
  // Results are consumed under a lock but keyed by index; callers that care
  // about order collect into index-addressed storage.
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= cfg.count) break;
        Tiling tt = sample_tiling(cfg, i);
        std::lock_guard<std::mutex> lock(mu);
        consume(i, tt);
      }
    });
  }
  for (auto& th : pool) th.join();
}

std::map<Dimer, long> edge_counts(const SamplerConfig& cfg) {
  std::map<Dimer, long> counts;
  for_each_sample(cfg, [&](int, const Tiling& t) {
    for (const Dimer& e : t.dimers) counts[e]++;
  });
  return counts;
}

std::map<Dimer, EdgeFrequency> empirical_edge_frequencies(const SamplerConfig& cfg) {
  std::map<Dimer, EdgeFrequency> out;
  if (cfg.count == 0) return out;
  auto counts = edge_counts(cfg);
  double n = cfg.count;
  for (const auto& [e, c] : counts) {
    double f = c / n;
    out[e] = {f, std::sqrt(std::max(f * (1 - f), 1e-300) / n)};
  }
  return out;
}

LineStatistics south_line_statistics(const Tiling& t, int r) {
  if (r < 1 || r > t.n - 1) throw std::out_of_range("south_line_statistics: InvalidLine");
  LineStatistics out{r, {}, {}};
  std::vector<bool> present((size_t)t.n + 1, false);
  for (const Dimer& e : t.dimers) {
    if (e.b.x2 == 2 * r + 1 && classify_dimer(e.b, e.w) == DimerKind::South) {
      int s = e.b.x1 / 2;
      if (s >= 1 && s <= t.n) {
        present[s] = true;
        out.positions.push_back(s);
      }
    }
  }
  std::sort(out.positions.begin(), out.positions.end());
  for (int s = 1; s <= t.n;) {
    if (!present[s]) {
      int start = s;
      while (s <= t.n && !present[s]) ++s;
      out.holes.push_back({start, s - start});
    } else {
      ++s;
    }
  }
  return out;
}

std::vector<std::pair<double, double>> frozen_boundary_points(const Tiling& t) {
  const int n = t.n;
  std::map<Vertex, DimerKind> owner;
  for (const Dimer& e : t.dimers) {
    DimerKind k = classify_dimer(e.b, e.w);
    owner[e.b] = k;
    owner[e.w] = k;
  }
  std::vector<std::pair<double, double>> pts;
  auto emit = [&](int k, int l) { pts.push_back({k / (2.0 * n), l / (2.0 * n)}); };

  // Horizontal scans: rows are x2 = const; corner (0,*) is West at the bottom
  // half... Each corner owns the scan that starts at it:
  //   (0,0) West: rows scanned rightward from x1 = 0
  //   (1,0) South: columns scanned upward from x2 = 0
  //   (0,1) North: columns scanned downward from x2 = 2n
  //   (1,1) East: rows scanned leftward from x1 = 2n
  // A line contributes only when it actually enters the corner's frozen
  // region (its first cell matches the phase); the first later mismatch is
  // the boundary crossing. Lines that begin outside the phase, or that stay
  // frozen end to end, yield no point.
  auto scan = [&](auto first, auto next, auto in_range, DimerKind phase) {
    bool started = false;
    for (Vertex v = first; in_range(v); v = next(v)) {
      auto it = owner.find(v);
      if (it == owner.end()) continue;
      if (!started) {
        if (it->second != phase) return;   // line does not start frozen
        started = true;
      } else if (it->second != phase) {
        emit(v.x1, v.x2);
        return;
      }
    }
  };
  for (int l = 0; l <= 2 * n; ++l) {
    int k0 = (l % 2 == 0) ? 1 : 0;
    int k1 = (l % 2 == 0) ? 2 * n - 1 : 2 * n;
    scan(Vertex{k0, l}, [](Vertex v) { return Vertex{v.x1 + 2, v.x2}; },
         [&](Vertex v) { return v.x1 <= 2 * n; }, DimerKind::West);
    scan(Vertex{k1, l}, [](Vertex v) { return Vertex{v.x1 - 2, v.x2}; },
         [&](Vertex v) { return v.x1 >= 0; }, DimerKind::East);
  }
  for (int k = 0; k <= 2 * n; ++k) {
    int l0 = (k % 2 == 0) ? 1 : 0;
    int l1 = (k % 2 == 0) ? 2 * n - 1 : 2 * n;
    scan(Vertex{k, l0}, [](Vertex v) { return Vertex{v.x1, v.x2 + 2}; },
         [&](Vertex v) { return v.x2 <= 2 * n; }, DimerKind::South);
    scan(Vertex{k, l1}, [](Vertex v) { return Vertex{v.x1, v.x2 - 2}; },
         [&](Vertex v) { return v.x2 >= 0; }, DimerKind::North);
  }
  return pts;
}

std::vector<std::pair<double, double>> frozen_boundary_estimate(const SamplerConfig& cfg) {
  std::vector<std::vector<std::pair<double, double>>> per(cfg.count);
  for_each_sample(cfg, [&](int i, const Tiling& t) { per[i] = frozen_boundary_points(t); });
  std::vector<std::pair<double, double>> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace aztec
