#include "aztec/tilingio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace aztec {

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string write_tiling(const TilingFile& f) {
  std::ostringstream os;
  os << "dimertiling " << f.version << "\n";
  os << "n " << f.n << "\n";
  os << "a " << f.a << "\n";
  if (f.seed) os << "seed " << *f.seed << "\n";
  os << "count " << f.tiling.dimers.size() << "\n";
  Tiling t = f.tiling;
  t.normalize();
  for (const Dimer& e : t.dimers)
    os << e.b.x1 << " " << e.b.x2 << " " << kind_name(classify_dimer(e.b, e.w)) << "\n";
  return os.str();
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw std::runtime_error("tiling parse error at line " + std::to_string(line) + ": " + msg);
}

}  // namespace

TilingFile parse_tiling(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  TilingFile f;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line()) parse_fail(lineno, "empty file");
  {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag >> f.version) || tag != "dimertiling") parse_fail(lineno, "bad magic");
    if (f.version != 1) parse_fail(lineno, "unsupported version");
  }
  size_t count = 0;
  bool have_n = false, have_a = false, have_count = false;
  while (!have_count) {
    if (!next_line()) parse_fail(lineno, "truncated header");
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "n") {
      if (!(ls >> f.n) || f.n < 1) parse_fail(lineno, "bad n");
      have_n = true;
    } else if (key == "a") {
      if (!(ls >> f.a)) parse_fail(lineno, "bad a");
      have_a = true;
    } else if (key == "seed") {
      uint64_t s;
      if (!(ls >> s)) parse_fail(lineno, "bad seed");
      f.seed = s;
    } else if (key == "count") {
      if (!(ls >> count)) parse_fail(lineno, "bad count");
      have_count = true;
    } else {
      parse_fail(lineno, "unknown header key '" + key + "'");
    }
  }
  if (!have_n || !have_a) parse_fail(lineno, "missing n or a");
  f.tiling.n = f.n;
  for (size_t i = 0; i < count; ++i) {
    if (!next_line()) parse_fail(lineno, "truncated dimer list");
    std::istringstream ls(line);
    int bx, by;
    std::string kind;
    if (!(ls >> bx >> by >> kind) || kind.size() != 1) parse_fail(lineno, "bad dimer line");
    Vertex b{bx, by};
    DimerKind k;
    try {
      k = kind_from_letter(kind[0]);
    } catch (const std::invalid_argument&) {
      parse_fail(lineno, "bad dimer kind '" + kind + "'");
    }
    Vertex step = k == DimerKind::North ? kE1
                  : k == DimerKind::East ? kE2
                  : k == DimerKind::South ? Vertex{-1, -1}
                                          : Vertex{1, -1};
    f.tiling.dimers.push_back({b, b + step});
  }
  if (next_line()) parse_fail(lineno, "trailing content");
  f.tiling.normalize();
  return f;
}

TilingFile load_tiling(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_tiling(os.str());
}

void save_tiling(const std::string& path, const TilingFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_tiling(f);
}

void StatsTable::add_row(const std::vector<double>& values) {
  std::vector<std::string> r;
  r.reserve(values.size());
  for (double v : values) r.push_back(format_double(v));
  rows.push_back(std::move(r));
}

std::string StatsTable::to_csv() const {
  std::ostringstream os;
  os << "#";
  for (const auto& [k, v] : meta) os << " " << k << "=" << v;
  os << "\n";
  for (size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "\n";
  }
  return os.str();
}

std::string render_svg(const AztecDiamond& d, const Tiling& t, bool with_heights) {
  const int n = d.n;
  const int size = 2 * n + 2;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << size << " " << size
     << "\" width=\"" << 16 * size << "\" height=\"" << 16 * size << "\">\n";
  // y axis points up: flip into SVG coordinates with y' = 2n+1 - y, x' = x+1.
  auto px = [&](int x) { return x + 1; };
  auto py = [&](int y) { return 2 * n + 1 - y; };
  Tiling sorted = t;
  sorted.normalize();
  for (const Dimer& e : sorted.dimers) {
    DimerKind k = classify_dimer(e.b, e.w);
    const char* color = k == DimerKind::North ? "#d62728"
                        : k == DimerKind::South ? "#2ca02c"
                        : k == DimerKind::East ? "#e6c700"
                                               : "#1f77b4";
    Vertex dd = e.w - e.b;
    // rectangle corners: b+(-d1,0), b+(0,-d2), w+(d1,0), w+(0,d2)
    int xs[4] = {e.b.x1 - dd.x1, e.b.x1, e.w.x1 + dd.x1, e.w.x1};
    int ys[4] = {e.b.x2, e.b.x2 - dd.x2, e.w.x2, e.w.x2 + dd.x2};
    os << "<polygon points=\"";
    for (int i = 0; i < 4; ++i) os << (i ? " " : "") << px(xs[i]) << "," << py(ys[i]);
    os << "\" fill=\"" << color << "\" stroke=\"#222222\" stroke-width=\"0.06\"/>\n";
  }
  if (with_heights) {
    HeightField h = height_function(d, sorted);
    for (const auto& [face, value] : h.entries()) {
      os << "<text x=\"" << px(face.first) << "\" y=\"" << py(face.second)
         << "\" font-size=\"0.5\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << value
         << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace aztec
