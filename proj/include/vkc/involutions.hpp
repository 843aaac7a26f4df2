#pragma once

#include <utility>

#include "vkc/gauss_diagram.hpp"

namespace vkc {

/// Switch over/under at every crossing: arrows reversed, signs negated.
GaussDiagram switch_all(const GaussDiagram& g);

/// Plane reflection: signs negated, arrows and circles unchanged.
GaussDiagram mirror(const GaussDiagram& g);

/// Reflection composed with switching: arrows reversed, signs preserved.
/// The cut system keeps its per-gap counts.
std::pair<GaussDiagram, CutSystem> mirror_switch(const GaussDiagram& g, const CutSystem& cuts);
GaussDiagram mirror_switch(const GaussDiagram& g);

}  // namespace vkc
