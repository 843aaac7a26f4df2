#pragma once

#include <map>
#include <string>
#include <vector>

#include "vkc/gauss_diagram.hpp"

namespace vkc {

enum class Sheet : uint8_t { Base = 0, Star = 1 };

struct ChordOrigin {
  Sheet sheet = Sheet::Base;
  ChordId original = 0;

  friend bool operator==(const ChordOrigin&, const ChordOrigin&) = default;
};

/// A piece of a cover circle copied from arc A_index (index >= 1) of a source
/// circle, or from its mirrored partner when sheet == Star. Arc A_i runs from
/// cut point p_i to p_{i+1}; a circle without cut points is the single arc A_1.
/// Markers [begin, end) of `cover_circle` come from this arc.
struct ArcLabel {
  int source_circle = 0;
  int index = 1;
  Sheet sheet = Sheet::Base;
  int cover_circle = 0;
  int begin = 0;
  int end = 0;
};

struct CoverResult {
  GaussDiagram diagram;
  std::map<ChordId, ChordOrigin> provenance;
  std::vector<ArcLabel> arcs;

  /// Cover circle containing the given arc copy.
  int component_of(int source_circle, int index, Sheet sheet) const;
};

/// Exact linking number stored as twice its value.
struct LinkingNumber {
  int twice = 0;

  bool is_integer() const noexcept { return twice % 2 == 0; }
  int integer() const noexcept { return twice / 2; }
  std::string to_string() const;

  friend bool operator==(const LinkingNumber&, const LinkingNumber&) = default;
};

/// Splices g with its mirror-switched copy at every cut point. Base chord c
/// keeps id c; its star copy gets id c + max_chord_id(g). No validity check
/// on the cut system.
CoverResult splice_cover(const GaussDiagram& g, const CutSystem& cuts);

/// splice_cover restricted to genuine cut systems (throws PreconditionError
/// otherwise).
CoverResult double_cover(const GaussDiagram& g, const CutSystem& cuts);

inline int component_count(const CoverResult& cover) { return cover.diagram.circle_count(); }

/// Half the sign sum over chords joining the two circles. Requires exactly
/// two circles.
LinkingNumber linking_number(const GaussDiagram& g);

/// Linking number of the cover of a knot with a cut system. Throws
/// InternalError if it is not an integer.
int lk_n(const GaussDiagram& g, const CutSystem& cuts);

}  // namespace vkc
