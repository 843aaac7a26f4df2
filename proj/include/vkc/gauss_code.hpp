#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vkc/gauss_diagram.hpp"

namespace vkc {

/// Parses a signed Gauss code such as "O1+U2+O3+U1+O2+U3+". Components are
/// separated by '|'; "()" is an empty component. Whitespace between tokens is
/// optional. Throws ParseError on syntax errors and on any invariant
/// violation (ids not appearing exactly twice, repeated roles, sign mismatch).
GaussDiagram parse_gauss_code(std::string_view text);

/// Same grammar, but only syntax is checked; the result may be invalid.
/// Sign conflicts between occurrences are reported through `conflicts`.
GaussDiagram parse_gauss_code_lenient(std::string_view text, std::vector<std::string>* conflicts = nullptr);

/// The diagram as stored: no rotation, ids unchanged.
std::string to_gauss_code(const GaussDiagram& g);

/// Result of bringing a diagram (and optionally a cut system) to canonical
/// form. `source_circle[i]` is the input circle placed at index i and
/// `rotation[i]` the input position that became position 0 there.
struct Canonical {
  GaussDiagram diagram;
  CutSystem cuts;
  std::vector<int> source_circle;
  std::vector<int> rotation;
  std::map<ChordId, ChordId> renumber;  // input id -> canonical id
};

/// Each circle rotated to its lexicographically least linearization, chords
/// renumbered by first occurrence, circles ordered lexicographically (empty
/// circles first). Tokens compare by (id, O<U, +<-).
Canonical canonicalize(const GaussDiagram& g);
Canonical canonicalize(const GaussDiagram& g, const CutSystem& cuts);

/// Canonical signed Gauss code.
std::string emit_gauss_code(const GaussDiagram& g);

}  // namespace vkc
