#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vkc/gauss_diagram.hpp"

namespace vkc {

/// Classical crossing X±(a,b,c,d): a incoming-under, b incoming-over,
/// c outgoing-under, d outgoing-over. The sign is explicit.
struct PDClassical {
  Sign sign = Sign::Positive;
  std::array<int, 4> edges{};
};

/// Virtual crossing V(a,b,c,d): strands a->c and b->d.
struct PDVirtual {
  std::array<int, 4> edges{};
};

struct PDDiagram {
  std::vector<PDClassical> classical;
  std::vector<PDVirtual> virtuals;

  /// Violations of the edge-pairing invariant; empty iff valid.
  std::vector<std::string> validate() const;
};

PDDiagram parse_pd_code(std::string_view text);
std::string to_pd_code(const PDDiagram& pd);

/// Tracing result: the Gauss diagram plus the gap every PD edge falls into.
struct PDTrace {
  GaussDiagram diagram;
  std::map<int, Gap> edge_gap;
};

/// Components start at their smallest unvisited edge id and are ordered by
/// it. Classical record i (0-based, file order) becomes chord i+1; virtual
/// crossings contribute nothing.
PDTrace trace_pd(const PDDiagram& pd);
GaussDiagram pd_to_gauss(const PDDiagram& pd);

}  // namespace vkc
