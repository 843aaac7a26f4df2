#pragma once

#include <json.hpp>

#include "vkc/cut_system.hpp"
#include "vkc/gauss_diagram.hpp"
#include "vkc/laurent.hpp"
#include "vkc/moves.hpp"

namespace vkc {

using Json = nlohmann::ordered_json;

/// {"circles":[["O1","U1"],...],"signs":{"1":"+"},"cuts":[[circle,gap,count],...]}
/// Written as stored; canonicalize first for canonical output.
Json to_json(const GaussDiagram& g, const CutSystem& cuts);
Json to_json(const GaussDiagram& g);

struct DiagramWithCuts {
  GaussDiagram diagram;
  CutSystem cuts;
};

/// Throws ParseError on schema errors. The diagram is not validated.
DiagramWithCuts diagram_from_json(const Json& j);

/// Accepts a bare [[circle,gap,count],...] array or an object with "cuts".
CutSystem cuts_from_json(const Json& j, const GaussDiagram& g);
Json cuts_to_json(const CutSystem& cuts);

/// [[exp,coeff],...] by descending exponent.
Json to_json(const LaurentPolynomial& p);

/// {"kind":"I_insert","gap":[c,g]} or {"kind":"III_insert","chord":id}.
Json to_json(const CutMove& m);
CutMove cut_move_from_json(const Json& j);

Json to_json(const Move& m);
Move move_from_json(const Json& j);
Json to_json(const MoveTrace& t);
MoveTrace trace_from_json(const Json& j);

}  // namespace vkc
