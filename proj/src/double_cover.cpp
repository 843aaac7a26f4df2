#include "vkc/double_cover.hpp"

#include <set>
#include <tuple>

#include "vkc/cut_system.hpp"
#include "vkc/errors.hpp"

namespace vkc {

namespace {

struct SourceCircle {
  // arcs[i] holds the markers of A_{i+1}
  std::vector<std::vector<Marker>> arcs;
};

SourceCircle split_at_cuts(const GaussDiagram& g, const CutSystem& cuts, int c) {
  SourceCircle sc;
  const int m = g.marker_count(c);
  const int total = cuts.circle_total(c);
  if (total == 0) {
    sc.arcs.push_back(g.circle(c));
    return sc;
  }
  // Walk items from position 0; the markers preceding p_1 belong to A_t.
  std::vector<Marker> before_first;
  std::vector<std::vector<Marker>> arcs;
  auto append = [&](const Marker& mk) { (arcs.empty() ? before_first : arcs.back()).push_back(mk); };
  if (m == 0) {
    for (int k = 0; k < cuts.count({c, 0}); ++k) arcs.emplace_back();
  } else {
    for (int p = 0; p < m; ++p) {
      append(g.circle(c)[static_cast<std::size_t>(p)]);
      for (int k = 0; k < cuts.count({c, p}); ++k) arcs.emplace_back();
    }
  }
  auto& last = arcs.back();
  last.insert(last.end(), before_first.begin(), before_first.end());
  sc.arcs = std::move(arcs);
  return sc;
}

}  // namespace

std::string LinkingNumber::to_string() const {
  if (is_integer()) return std::to_string(integer());
  return std::to_string(twice) + "/2";
}

int CoverResult::component_of(int source_circle, int index, Sheet sheet) const {
  for (const ArcLabel& a : arcs)
    if (a.source_circle == source_circle && a.index == index && a.sheet == sheet) return a.cover_circle;
  throw PreconditionError("no such arc in the cover");
}

CoverResult splice_cover(const GaussDiagram& g, const CutSystem& cuts) {
  if (!cuts.fits(g)) throw PreconditionError("cut system does not fit the diagram");
  const ChordId shift = g.max_chord_id();

  std::vector<SourceCircle> sources;
  for (int c = 0; c < g.circle_count(); ++c) sources.push_back(split_at_cuts(g, cuts, c));

  CoverResult out;
  std::map<ChordId, Sign> signs;
  for (const auto& [id, s] : g.signs()) {
    signs[id] = s;
    signs[id + shift] = s;
    out.provenance[id] = {Sheet::Base, id};
    out.provenance[id + shift] = {Sheet::Star, id};
  }

  std::vector<Circle> circles;
  std::set<std::tuple<int, int, int>> visited;  // (circle, arc, sheet)
  for (int c = 0; c < g.circle_count(); ++c) {
    const auto& arcs = sources[static_cast<std::size_t>(c)].arcs;
    const int t = static_cast<int>(arcs.size());
    const bool spliced = cuts.circle_total(c) > 0;
    for (Sheet start_sheet : {Sheet::Base, Sheet::Star}) {
      for (int j = 0; j < t; ++j) {
        if (visited.contains({c, j, static_cast<int>(start_sheet)})) continue;
        const int cover_circle = static_cast<int>(circles.size());
        Circle circle;
        int arc = j;
        Sheet sheet = start_sheet;
        while (visited.insert({c, arc, static_cast<int>(sheet)}).second) {
          ArcLabel label{c, arc + 1, sheet, cover_circle, static_cast<int>(circle.size()), 0};
          for (const Marker& mk : arcs[static_cast<std::size_t>(arc)]) {
            if (sheet == Sheet::Base) {
              circle.push_back(mk);
            } else {
              circle.push_back({mk.chord + shift, opposite(mk.role)});
            }
          }
          label.end = static_cast<int>(circle.size());
          out.arcs.push_back(label);
          if (!spliced) break;
          // The arc ending at p_{i+1} continues into the other sheet's A_{i+1}.
          arc = (arc + 1) % t;
          sheet = sheet == Sheet::Base ? Sheet::Star : Sheet::Base;
        }
        circles.push_back(std::move(circle));
      }
    }
  }
  out.diagram = GaussDiagram(std::move(circles), std::move(signs));
  return out;
}

CoverResult double_cover(const GaussDiagram& g, const CutSystem& cuts) {
  if (!is_cut_system(g, cuts)) throw PreconditionError("double_cover requires a cut system");
  return splice_cover(g, cuts);
}

LinkingNumber linking_number(const GaussDiagram& g) {
  if (g.circle_count() != 2) {
    throw PreconditionError("linking number needs exactly 2 components, got " + std::to_string(g.circle_count()));
  }
  int sum = 0;
  for (const Chord& ch : g.chords())
    if (ch.tail.circle != ch.head.circle) sum += to_int(ch.sign);
  return LinkingNumber{sum};
}

int lk_n(const GaussDiagram& g, const CutSystem& cuts) {
  if (!g.is_knot()) throw PreconditionError("lk_N is defined for knot diagrams");
  const LinkingNumber lk = linking_number(double_cover(g, cuts).diagram);
  if (!lk.is_integer()) throw InternalError("linking number of the cover is not an integer: " + lk.to_string());
  return lk.integer();
}

}  // namespace vkc
