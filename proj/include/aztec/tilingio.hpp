#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aztec/lattice.hpp"

namespace aztec {

// Plain-text tiling file:
//   dimertiling 1
//   n <order>
//   a <weight string>
//   seed <u64>          (only for sampled tilings)
//   count <#dimers>
//   <bx> <by> <kind>    one line per dimer, sorted by (bx, by)
// Round-trips bit-exactly.
struct TilingFile {
  int version = 1;
  int n = 1;
  std::string a = "1";
  std::optional<uint64_t> seed;
  Tiling tiling;
};

std::string write_tiling(const TilingFile& f);
TilingFile parse_tiling(const std::string& text);   // throws with line numbers
TilingFile load_tiling(const std::string& path);
void save_tiling(const std::string& path, const TilingFile& f);

// CSV statistics table: one metadata comment line, then a header and rows.
// Number formatting is locale-independent (shortest round-trip doubles).
struct StatsTable {
  std::map<std::string, std::string> meta;   // emitted in key order
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(const std::vector<double>& values);
  std::string to_csv() const;
};

std::string format_double(double v);

// SVG rendering: one rectangle (as a 4-corner polygon) per domino, colored
// N=red, S=green, E=yellow, W=blue; Kasteleyn (0,0) at the bottom-left, y up.
// With heights, integer labels are placed at the face points.
std::string render_svg(const AztecDiamond& d, const Tiling& t, bool with_heights);

}  // namespace aztec
