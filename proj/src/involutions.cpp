#include "vkc/involutions.hpp"

#include "vkc/errors.hpp"

namespace vkc {

namespace {

GaussDiagram reverse_arrows(GaussDiagram g) {
  for (auto& circle : g.mutable_circles())
    for (auto& m : circle) m.role = opposite(m.role);
  return g;
}

GaussDiagram negate_signs(GaussDiagram g) {
  for (auto& [id, s] : g.mutable_signs()) s = -s;
  return g;
}

}  // namespace

GaussDiagram switch_all(const GaussDiagram& g) { return negate_signs(reverse_arrows(g)); }

GaussDiagram mirror(const GaussDiagram& g) { return negate_signs(g); }

GaussDiagram mirror_switch(const GaussDiagram& g) { return reverse_arrows(g); }

std::pair<GaussDiagram, CutSystem> mirror_switch(const GaussDiagram& g, const CutSystem& cuts) {
  if (!cuts.fits(g)) throw PreconditionError("cut system does not fit the diagram");
  return {reverse_arrows(g), cuts};
}

}  // namespace vkc
