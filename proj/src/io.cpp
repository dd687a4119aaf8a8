#include "latol/io.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "latol/errors.hpp"

namespace latol {

namespace {

// Significant lines only: strips comments, skips blanks, reports the
// 1-based line number alongside the payload.
std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) out.emplace_back(no, line);
  }
  return out;
}

std::pair<element_id, element_id> parse_pair(int line_no, const std::string& line) {
  std::istringstream ss(line);
  long long i, j;
  std::string extra;
  if (!(ss >> i >> j)) throw ParseError(line_no, "expected two integers, got \"" + line + "\"");
  if (ss >> extra) throw ParseError(line_no, "trailing text \"" + extra + "\"");
  return {static_cast<element_id>(i), static_cast<element_id>(j)};
}

}  // namespace

Lattice parse_lattice(std::istream& in) {
  const auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(1, "missing element count");
  long long n;
  {
    std::istringstream ss(lines[0].second);
    std::string extra;
    if (!(ss >> n) || (ss >> extra))
      throw ParseError(lines[0].first, "expected the element count, got \"" + lines[0].second +
                                           "\"");
  }
  if (n < 1 || n > 10'000) throw ParseError(lines[0].first, "element count out of range");
  std::vector<CoverPair> covers;
  std::set<CoverPair> seen;
  for (size_t k = 1; k < lines.size(); ++k) {
    const int line_no = lines[k].first;
    const auto [i, j] = parse_pair(line_no, lines[k].second);
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw ParseError(line_no, "element out of range in \"" + lines[k].second + "\"");
    if (i == j) throw ParseError(line_no, "self-cover at element " + std::to_string(i));
    if (!seen.insert({i, j}).second)
      throw ParseError(line_no, "duplicate cover " + std::to_string(i) + " " + std::to_string(j));
    covers.emplace_back(i, j);
  }
  // Structural problems (cycles, implied covers, missing meets or joins)
  // are whole-file properties; they propagate as their own error types.
  return Lattice::from_covers(static_cast<int>(n), covers);
}

Lattice parse_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_lattice(in);
}

std::string serialize_lattice(const Lattice& l) {
  std::string out = std::to_string(l.size()) + "\n";
  for (auto [x, y] : l.cover_pairs()) out += std::to_string(x) + " " + std::to_string(y) + "\n";
  return out;
}

BinaryRelation parse_tolerance(std::istream& in, int n) {
  std::vector<std::pair<element_id, element_id>> pairs;
  for (const auto& [no, line] : significant_lines(in)) {
    const auto [i, j] = parse_pair(no, line);
    if (i == j) throw ParseError(no, "diagonal pair " + std::to_string(i));
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw ParseError(no, "element out of range in \"" + line + "\"");
    pairs.emplace_back(i, j);
  }
  return BinaryRelation::from_pairs(n, pairs);
}

BinaryRelation parse_tolerance_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_tolerance(in, n);
}

std::string serialize_tolerance(const BinaryRelation& rel) {
  std::string out;
  for (auto [x, y] : rel.pairs()) out += std::to_string(x) + " " + std::to_string(y) + "\n";
  return out;
}

std::string export_dot(const Lattice& l, const BinaryRelation* t, const BinaryRelation* s) {
  // A digraph drawn with dir=none: dot only ranks directed edges, and the
  // Hasse convention wants every cover pointing upward.
  std::string out;
  out += "digraph hasse {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=circle, fontsize=11, width=0.3, fixedsize=true];\n";
  out += "  edge [dir=none];\n";
  for (int h = 0; h <= l.height(); ++h) {
    std::string rank;
    for (int x = 0; x < l.size(); ++x)
      if (l.height_of(x) == h) rank += " " + std::to_string(x) + ";";
    if (!rank.empty()) out += "  { rank=same;" + rank + " }\n";
  }
  for (auto [x, y] : l.cover_pairs())
    out += "  " + std::to_string(x) + " -> " + std::to_string(y) + ";\n";
  // Block overlays ride on top of the cover edges they decorate; 2-uniform
  // blocks are always cover pairs, so nothing else needs drawing.
  if (t)
    for (auto [x, y] : two_uniform_blocks(l, *t))
      out += "  " + std::to_string(x) + " -> " + std::to_string(y) +
             " [color=grey, penwidth=6, style=solid, constraint=false];\n";
  if (s)
    for (auto [x, y] : two_uniform_blocks(l, *s))
      out += "  " + std::to_string(x) + " -> " + std::to_string(y) +
             " [color=black, penwidth=1.5, style=dotted, constraint=false];\n";
  out += "}\n";
  return out;
}

}  // namespace latol
