// dimerctl: sampling, exact kernel computations, validation suites, SVG
// rendering and CSV statistics for weighted Aztec-diamond domino tilings.

#include <CLI11.hpp>
#include <json.hpp>

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include "aztec/exactdimer.hpp"
#include "aztec/kernelcalc.hpp"
#include "aztec/lattice.hpp"
#include "aztec/scalinglimits.hpp"
#include "aztec/shuffler.hpp"
#include "aztec/tilingio.hpp"

using namespace aztec;
using nlohmann::json;

namespace {

Weight parse_weight_checked(const std::string& s) {
  Weight w = Weight::parse(s);
  if (w.value <= 0) throw CLI::ValidationError("--a", "weight must be positive");
  return w;
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

int cmd_sample(int n, const std::string& a_str, uint64_t seed, int count,
               const std::string& prefix) {
  Weight a = Weight::parse(a_str);
  SamplerConfig cfg{n, a, seed, count};
  for (int i = 0; i < count; ++i) {
    Tiling t = sample_tiling(cfg, i);
    TilingFile f{1, n, a.str(), seed, t};
    char name[64];
    snprintf(name, sizeof name, "%s_%04d.tiling", prefix.c_str(), i);
    save_tiling(name, f);
    std::cout << name << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// render
// ---------------------------------------------------------------------------

int cmd_render(const std::string& in, const std::string& out, bool with_heights) {
  TilingFile f = load_tiling(in);
  AztecDiamond d(f.n, Weight::parse(f.a));
  write_output(out, render_svg(d, f.tiling, with_heights));
  return 0;
}

// ---------------------------------------------------------------------------
// exact
// ---------------------------------------------------------------------------

int cmd_exact_partition(int n, const std::string& a_str, const std::string& out) {
  Weight a = parse_weight_checked(a_str);
  if (!a.is_exact()) throw std::runtime_error("exact partition requires a rational weight");
  AztecDiamond d(n, a);
  mpq_class z = partition_function(d);
  StatsTable t;
  t.meta = {{"n", std::to_string(n)}, {"a", a.str()}};
  t.columns = {"partition_function"};
  t.rows.push_back({rat_str(z)});
  write_output(out, t.to_csv());
  return 0;
}

int cmd_exact_inverse(int n, const std::string& a_str, const std::string& out) {
  Weight a = parse_weight_checked(a_str);
  if (!a.is_exact()) throw std::runtime_error("exact inverse requires a rational weight");
  AztecDiamond d(n, a);
  StatsTable t;
  t.meta = {{"n", std::to_string(n)}, {"a", a.str()}};
  t.columns = {"wx", "wy", "bx", "by", "re", "im"};
  for (Vertex w : d.whites())
    for (Vertex b : d.blacks()) {
      GQ v = inverse_entry_exact(w, b, d);
      t.rows.push_back({std::to_string(w.x1), std::to_string(w.x2), std::to_string(b.x1),
                        std::to_string(b.x2), rat_str(v.re), rat_str(v.im)});
    }
  write_output(out, t.to_csv());
  return 0;
}

int cmd_exact_edge_prob(int n, const std::string& a_str, const std::string& edge,
                        const std::string& out) {
  Weight a = parse_weight_checked(a_str);
  if (!a.is_exact()) throw std::runtime_error("exact edge-prob requires a rational weight");
  int bx, by;
  char kind;
  if (sscanf(edge.c_str(), "%d,%d,%c", &bx, &by, &kind) != 3)
    throw CLI::ValidationError("--edge", "expected bx,by,K");
  AztecDiamond d(n, a);
  Vertex b{bx, by};
  DimerKind k = kind_from_letter(kind);
  Vertex step = k == DimerKind::North ? kE1
                : k == DimerKind::East ? kE2
                : k == DimerKind::South ? Vertex{-1, -1}
                                        : Vertex{1, -1};
  Dimer e{b, b + step};
  if (!d.contains_black(e.b) || !d.contains_white(e.w))
    throw std::runtime_error("edge outside the diamond");
  mpq_class p = correlation_probability_exact({e}, d);
  StatsTable t;
  t.meta = {{"n", std::to_string(n)}, {"a", a.str()}, {"edge", edge}};
  t.columns = {"probability"};
  t.rows.push_back({rat_str(p)});
  write_output(out, t.to_csv());
  return 0;
}

int cmd_exact_line_kernel(int n, const std::string& a_str, int r, const std::string& out) {
  Weight a = parse_weight_checked(a_str);
  if (!a.is_exact()) throw std::runtime_error("exact line-kernel requires a rational weight");
  AztecDiamond d(n, a);
  StatsTable t;
  t.meta = {{"n", std::to_string(n)}, {"a", a.str()}, {"r", std::to_string(r)}};
  t.columns = {"x1", "x2", "re", "im"};
  for (int x1 = 1; x1 <= n; ++x1)
    for (int x2 = 1; x2 <= n; ++x2) {
      GQ v = line_kernel_exact(x1, x2, r, d);
      t.rows.push_back({std::to_string(x1), std::to_string(x2), rat_str(v.re), rat_str(v.im)});
    }
  write_output(out, t.to_csv());
  return 0;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct SuiteResult {
  bool pass = true;
  json details;
  std::string first_failure;

  void fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

SuiteResult suite_inverse(int n, const Weight& a) {
  SuiteResult r;
  AztecDiamond d(n, a);
  auto inv = invert_direct(build_kasteleyn(d));
  auto ws = d.whites();
  auto bs = d.blacks();
  int checked = 0;
  for (size_t i = 0; i < ws.size() && r.pass; ++i)
    for (size_t j = 0; j < bs.size(); ++j) {
      ++checked;
      if (inverse_entry_exact(ws[i], bs[j], d) != inv.inv[i][j]) {
        char buf[128];
        snprintf(buf, sizeof buf, "entry w=(%d,%d) b=(%d,%d)", ws[i].x1, ws[i].x2, bs[j].x1,
                 bs[j].x2);
        r.fail(buf);
        break;
      }
    }
  r.details["entries_checked"] = checked;
  return r;
}

SuiteResult suite_fiveterm(int n, const Weight& a) {
  SuiteResult r;
  AztecDiamond d(n, a);
  GQ ai(mpq_class(0), a.rat());
  auto bs = d.blacks();
  int checked = 0;
  for (Vertex x : bs) {
    for (Vertex y : bs) {
      GQ acc(0);
      if (x.x1 < 2 * n) acc += inverse_entry_exact(x + kE1, y, d);
      if (x.x1 > 0) {
        acc -= inverse_entry_exact(x - kE1, y, d);
        acc -= ai * inverse_entry_exact(x + kE2, y, d);
      }
      if (x.x1 < 2 * n) acc += ai * inverse_entry_exact(x - kE2, y, d);
      int s = (x.x1 + x.x2 - 1) / 2;
      if (s % 2 != 0) acc = -acc;
      GQ want = (x == y) ? GQ(1) : GQ(0);
      ++checked;
      if (acc != want) {
        char buf[128];
        snprintf(buf, sizeof buf, "x=(%d,%d) y=(%d,%d)", x.x1, x.x2, y.x1, y.x2);
        r.fail(buf);
        break;
      }
    }
    if (!r.pass) break;
  }
  r.details["pairs_checked"] = checked;
  return r;
}

SuiteResult suite_partition(int n, const Weight& a) {
  SuiteResult r;
  AztecDiamond d(n, a);
  mpq_class z = partition_function(d);
  mpq_class closed = qpow(1 + a.rat() * a.rat(), (long)n * (n + 1) / 2);
  r.details["partition"] = z.get_str();
  if (z != closed) r.fail("determinant != (1+a^2)^{n(n+1)/2}");
  if (n <= 5) {
    mpq_class total = 0;
    for (const Tiling& t : enumerate_tilings(d)) total += tiling_weight(t, a.rat());
    if (z != total) r.fail("determinant != enumeration sum");
    r.details["enumerated"] = true;
  }
  return r;
}

SuiteResult suite_sampler(int n, const Weight& a, uint64_t seed, long samples) {
  SuiteResult r;
  if (n > 3) throw std::runtime_error("sampler suite needs n <= 3 (exact enumeration)");
  AztecDiamond d(n, a);
  auto tilings = enumerate_tilings(d);
  mpq_class z = 0;
  for (const Tiling& t : tilings) z += tiling_weight(t, a.rat());
  std::map<std::vector<Dimer>, int> index;
  for (size_t i = 0; i < tilings.size(); ++i) index[tilings[i].dimers] = (int)i;
  std::vector<long> counts(tilings.size(), 0);
  SamplerConfig cfg{n, a, seed, (int)samples};
  for_each_sample(cfg, [&](int, const Tiling& t) { counts[index.at(t.dimers)]++; });
  double stat = 0;
  for (size_t i = 0; i < tilings.size(); ++i) {
    double e = mpq_class(tiling_weight(tilings[i], a.rat()) / z).get_d() * (double)samples;
    stat += (counts[i] - e) * (counts[i] - e) / e;
  }
  int dof = (int)tilings.size() - 1;
  double threshold = boost::math::quantile(boost::math::chi_squared(dof), 1 - 1e-3);
  r.details["chi2"] = stat;
  r.details["dof"] = dof;
  r.details["threshold"] = threshold;
  if (stat >= threshold) r.fail("chi-square above the 1e-3 threshold");
  return r;
}

SuiteResult suite_asymptotics(const Weight& a) {
  SuiteResult r;
  double av = a.value;
  int points = 0;
  for (double k : {0.5, 1.0, 2.0}) {
    EdgeParams p = edge_params(k, av);
    ++points;
    if (std::abs(p.alpha * (1 - p.beta) - 1) > 1e-12) r.fail("alpha(1-beta) != 1");
    if (std::abs(ellipse_residual(p.u, p.v, av)) > 1e-12) r.fail("(u,v) off the ellipse");
    auto g1 = saddle_g_deriv({p.z_c, 0}, p.u, p.v, av, 1);
    auto g2 = saddle_g_deriv({p.z_c, 0}, p.u, p.v, av, 2);
    if (std::abs(g1) > 1e-10 || std::abs(g2) > 1e-10) r.fail("saddle not a double zero");
  }
  for (double x : {-4.0, -1.0, 0.0, 1.5}) {
    ++points;
    double lhs = airy_kernel(x, x);
    double rhs = airy_ai_prime(x) * airy_ai_prime(x) - x * airy_ai(x) * airy_ai(x);
    if (std::abs(lhs - rhs) > 1e-6) r.fail("Airy diagonal identity");
  }
  r.details["points_checked"] = points;
  return r;
}

int cmd_validate(int n, const std::string& a_str, const std::string& suite, uint64_t seed,
                 long samples) {
  Weight a = parse_weight_checked(a_str);
  SuiteResult r;
  if (suite == "inverse") r = suite_inverse(n, a);
  else if (suite == "fiveterm") r = suite_fiveterm(n, a);
  else if (suite == "partition") r = suite_partition(n, a);
  else if (suite == "sampler") r = suite_sampler(n, a, seed, samples);
  else if (suite == "asymptotics") r = suite_asymptotics(a);
  else throw CLI::ValidationError("--suite", "unknown suite " + suite);
  json out{{"suite", suite}, {"n", n}, {"a", a.str()}, {"pass", r.pass}, {"details", r.details}};
  if (!r.pass) out["first_failure"] = r.first_failure;
  std::cout << out.dump() << "\n";
  if (!r.pass) std::cerr << "FAIL: " << r.first_failure << "\n";
  return r.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// edge-stats / bulk-stats
// ---------------------------------------------------------------------------

int cmd_edge_stats(int n, const std::string& a_str, double k, uint64_t seed, int samples,
                   bool holes, const std::string& out) {
  Weight a = parse_weight_checked(a_str);
  EdgeParams p = edge_params(k, a.value);
  int r = (int)((1 - k * k * p.u) * n);
  r = std::min(std::max(r, 1), n - 1);
  double scale = p.lambda * std::cbrt((double)n);
  SamplerConfig cfg{n, a, seed, samples};

  StatsTable t;
  t.meta = {{"n", std::to_string(n)}, {"a", a.str()},       {"k", format_double(k)},
            {"r", std::to_string(r)}, {"samples", std::to_string(samples)},
            {"alpha", format_double(p.alpha)}, {"beta", format_double(p.beta)},
            {"lambda", format_double(p.lambda)}, {"u", format_double(p.u)}};
  if (!holes) {
    // binned intensity of rescaled south-domino positions vs alpha*K_Ai(xi,xi)
    const double lo = -4.0, hi = 4.0, bin = 0.5;
    int nbins = (int)((hi - lo) / bin);
    std::vector<long> countv(nbins, 0);
    for_each_sample(cfg, [&](int, const Tiling& tt) {
      auto ls = south_line_statistics(tt, r);
      for (int s : ls.positions) {
        double xi = (p.u * n - s) / scale;
        int b = (int)std::floor((xi - lo) / bin);
        if (b >= 0 && b < nbins) countv[b]++;
      }
    });
    t.columns = {"xi_lo", "xi_hi", "count", "empirical_intensity", "thinned_airy_intensity",
                 "poisson_density_c_a"};
    for (int b = 0; b < nbins; ++b) {
      double xlo = lo + b * bin, xc = xlo + bin / 2;
      double emp = countv[b] / ((double)samples * bin);   // intensity per unit xi
      double pred = p.alpha * airy_kernel(xc, xc);
      t.add_row({xlo, xlo + bin, (double)countv[b], emp, pred, poisson_density(xc)});
    }
    t.meta["c_a"] = format_double(poisson_c(a.value, std::abs(k)));
  } else {
    // hole-cluster size histogram near the southern boundary vs geometric(beta)
    if (p.regime != BoundaryRegime::South)
      throw std::runtime_error("--holes needs k in the southern range");
    std::map<int, long> hist;
    long total = 0;
    const double window = 2.0;
    for_each_sample(cfg, [&](int, const Tiling& tt) {
      auto ls = south_line_statistics(tt, r);
      for (auto [start, len] : ls.holes) {
        double xi = (start + 0.5 * (len - 1) - p.u * n) / scale;
        if (std::abs(xi) <= window) {
          hist[len]++;
          ++total;
        }
      }
    });
    t.columns = {"cluster_size", "count", "geometric_expected"};
    for (const auto& [size, c] : hist) {
      double pred = total * (1 - p.beta) * std::pow(p.beta, size - 1);
      t.add_row({(double)size, (double)c, pred});
    }
    t.meta["window"] = format_double(window);
  }
  write_output(out, t.to_csv());
  return 0;
}

int cmd_bulk_stats(int n, const std::string& a_str, const std::string& xi_str, uint64_t seed,
                   int samples, const std::string& out) {
  Weight a = parse_weight_checked(a_str);
  double xi1, xi2;
  if (sscanf(xi_str.c_str(), "%lf,%lf", &xi1, &xi2) != 2)
    throw CLI::ValidationError("--xi", "expected xi1,xi2");
  if (ellipse_residual(xi1, xi2, a.value) >= 0)
    throw std::runtime_error("xi must lie strictly inside the arctic ellipse");
  // white vertex nearest to (2 xi1 n, 2 xi2 n)
  int wx = 2 * (int)std::lround(xi1 * n) + 1;
  int wy = 2 * (int)std::lround(xi2 * n);
  AztecDiamond d(n, a);
  Vertex w{wx, wy};
  if (!d.contains_white(w)) throw std::runtime_error("target vertex outside the diamond");

  long cnt[4] = {0, 0, 0, 0};
  SamplerConfig cfg{n, a, seed, samples};
  for_each_sample(cfg, [&](int, const Tiling& t) {
    for (const Dimer& e : t.dimers)
      if (e.w == w) {
        cnt[(int)classify_dimer(e.b, e.w)]++;
        break;
      }
  });
  GibbsEdgeProbabilities gp = gibbs_edge_probabilities(xi1, xi2, a.value);
  StatsTable t;
  t.meta = {{"n", std::to_string(n)}, {"a", a.str()}, {"xi", xi_str},
            {"samples", std::to_string(samples)}, {"wx", std::to_string(wx)},
            {"wy", std::to_string(wy)}};
  t.columns = {"orientation", "count", "frequency", "gibbs_probability"};
  const char* names[4] = {"N", "E", "S", "W"};
  double preds[4] = {gp.north, gp.east, gp.south, gp.west};
  for (int i = 0; i < 4; ++i)
    t.rows.push_back({names[i], std::to_string(cnt[i]), format_double(cnt[i] / (double)samples),
                      format_double(preds[i])});
  write_output(out, t.to_csv());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Aztec-diamond domino tilings: exact kernels, sampling, statistics"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "draw random tilings by domino shuffling");
  int n = 8;
  std::string a_str = "1";
  uint64_t seed = 0;
  int count = 1;
  std::string prefix = "tiling";
  sample->add_option("--n", n, "diamond order")->required()->check(CLI::PositiveNumber);
  sample->add_option("--a", a_str, "vertical-domino weight (rational p/q or decimal)");
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_option("--count", count, "number of samples")->check(CLI::NonNegativeNumber);
  sample->add_option("--out", prefix, "output file prefix");

  // render
  auto* render = app.add_subcommand("render", "render a tiling file to SVG");
  std::string in_path, out_path;
  bool with_heights = false;
  render->add_option("--in", in_path, "input .tiling file")->required();
  render->add_option("--out", out_path, "output .svg path")->required();
  render->add_flag("--height", with_heights, "overlay height-function labels");

  // exact
  auto* exact = app.add_subcommand("exact", "exact kernel / partition computations");
  exact->require_subcommand(1);
  int exact_n = 2, exact_r = 1;
  std::string exact_a = "1", exact_edge = "0,1,W", exact_out = "-";
  auto* e_part = exact->add_subcommand("partition", "weighted partition function |det K|");
  auto* e_inv = exact->add_subcommand("inverse", "all inverse Kasteleyn entries");
  auto* e_edge = exact->add_subcommand("edge-prob", "single-edge probability");
  auto* e_line = exact->add_subcommand("line-kernel", "south-domino line kernel on y=r");
  for (auto* sc : {e_part, e_inv, e_edge, e_line}) {
    sc->add_option("--n", exact_n, "order")->required()->check(CLI::PositiveNumber);
    sc->add_option("--a", exact_a, "weight");
    sc->add_option("--out", exact_out, "output path or - for stdout");
  }
  e_edge->add_option("--edge", exact_edge, "edge as bx,by,K with K in NESW")->required();
  e_line->add_option("--r", exact_r, "line index (1..n-1)")->required();

  // validate
  auto* validate = app.add_subcommand("validate", "run an invariant suite");
  int val_n = 3;
  std::string val_a = "1", suite = "inverse";
  uint64_t val_seed = 1;
  long val_samples = 100000;
  validate->add_option("--n", val_n, "order")->check(CLI::PositiveNumber);
  validate->add_option("--a", val_a, "weight");
  validate->add_option("--suite", suite, "inverse|fiveterm|partition|sampler|asymptotics")
      ->required();
  validate->add_option("--seed", val_seed, "sampler seed");
  validate->add_option("--samples", val_samples, "sampler sample count");

  // edge-stats
  auto* estats = app.add_subcommand("edge-stats", "south-domino statistics near a boundary");
  int es_n = 256, es_samples = 100;
  double es_k = 1.0;
  std::string es_a = "1", es_out = "-";
  uint64_t es_seed = 1;
  bool es_holes = false;
  estats->add_option("--n", es_n, "order")->check(CLI::PositiveNumber);
  estats->add_option("--a", es_a, "weight");
  estats->add_option("--k", es_k, "boundary slope parameter")->required();
  estats->add_option("--samples", es_samples, "sample count")->check(CLI::PositiveNumber);
  estats->add_option("--seed", es_seed, "seed");
  estats->add_flag("--holes", es_holes, "hole-cluster histogram (southern boundary)");
  estats->add_option("--out", es_out, "output path");

  // bulk-stats
  auto* bstats = app.add_subcommand("bulk-stats", "local dimer statistics in the bulk");
  int bs_n = 200, bs_samples = 200;
  std::string bs_a = "1", bs_xi = "0.5,0.5", bs_out = "-";
  uint64_t bs_seed = 1;
  bstats->add_option("--n", bs_n, "order")->check(CLI::PositiveNumber);
  bstats->add_option("--a", bs_a, "weight");
  bstats->add_option("--xi", bs_xi, "asymptotic coordinates xi1,xi2")->required();
  bstats->add_option("--samples", bs_samples, "sample count")->check(CLI::PositiveNumber);
  bstats->add_option("--seed", bs_seed, "seed");
  bstats->add_option("--out", bs_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*sample) {
      Weight w = Weight::parse(a_str);
      if (w.value <= 0) {
        std::cerr << "error: --a must be positive\n";
        return 2;
      }
      return cmd_sample(n, a_str, seed, count, prefix);
    }
    if (*render) return cmd_render(in_path, out_path, with_heights);
    if (*e_part) return cmd_exact_partition(exact_n, exact_a, exact_out);
    if (*e_inv) return cmd_exact_inverse(exact_n, exact_a, exact_out);
    if (*e_edge) return cmd_exact_edge_prob(exact_n, exact_a, exact_edge, exact_out);
    if (*e_line) return cmd_exact_line_kernel(exact_n, exact_a, exact_r, exact_out);
    if (*validate) return cmd_validate(val_n, val_a, suite, val_seed, val_samples);
    if (*estats) return cmd_edge_stats(es_n, es_a, es_k, es_seed, es_samples, es_holes, es_out);
    if (*bstats) return cmd_bulk_stats(bs_n, bs_a, bs_xi, bs_seed, bs_samples, bs_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
