#ifndef LATOL_IO_HPP
#define LATOL_IO_HPP

#include <iosfwd>
#include <string>

#include "latol/lattice.hpp"
#include "latol/relation.hpp"

namespace latol {

/// Lattice text format: first significant line is the element count n,
/// every further line "i j" declares i covered by j. '#' starts a comment,
/// blank lines are skipped. Throws ParseError (with the offending line
/// number) on malformed text and the construction errors on bad structure.
Lattice parse_lattice(std::istream& in);
Lattice parse_lattice_file(const std::string& path);
/// Inverse of parse_lattice; reparsing yields an index-identical lattice.
std::string serialize_lattice(const Lattice& l);

/// Tolerance text format: lines "i j" for off-diagonal related pairs;
/// symmetry and the diagonal are implied. Same comment and blank-line
/// rules. n is the size of the host lattice.
BinaryRelation parse_tolerance(std::istream& in, int n);
BinaryRelation parse_tolerance_file(const std::string& path, int n);
std::string serialize_tolerance(const BinaryRelation& rel);

/// Graphviz DOT drawing of the Hasse diagram: bottom at the bottom, one
/// invisible rank per height class, cover edges drawn upward. When t and/or
/// s are given, their blocks are overlaid on the cover edges: t-blocks as
/// thick solid grey strokes, s-blocks as dotted black strokes. (Blocks of
/// distinct tolerances can overlap, which rules out Graphviz clusters;
/// parallel styled edges carry the same information.)
std::string export_dot(const Lattice& l, const BinaryRelation* t = nullptr,
                       const BinaryRelation* s = nullptr);

}  // namespace latol

#endif  // LATOL_IO_HPP
