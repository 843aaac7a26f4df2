#pragma once

#include <optional>
#include <vector>

#include "vkc/gauss_diagram.hpp"
#include "vkc/pd.hpp"
#include "vkc/rng.hpp"

namespace vkc {

/// Arc directions alternating at every marker (chord endpoint or cut point).
/// Arcs are indexed along the expanded circle: arc j follows item j, where
/// items are the markers interleaved with the cut points of each gap.
class AlternateOrientation {
 public:
  AlternateOrientation(std::vector<bool> base_forward, CutSystem cuts, const GaussDiagram& g);

  /// Direction of the arc following item 0 of circle c.
  bool base_forward(int circle) const { return base_[static_cast<std::size_t>(circle)]; }
  const std::vector<bool>& bases() const noexcept { return base_; }

  /// Sub-arc k (0..count) of a gap; sub-arc 0 leaves the gap's marker.
  bool forward(Gap gap, int sub_arc) const;
  /// Both adjacent arcs point into the endpoint.
  bool is_sink(EndpointRef endpoint) const;

 private:
  int item_index(EndpointRef endpoint) const;

  std::vector<bool> base_;
  CutSystem cuts_;
  std::vector<int> marker_counts_;
};

/// Solves for an alternate orientation of (g, cuts), or nullopt if none
/// exists. Per connected constraint component the lowest-indexed circle is
/// given base direction forward.
std::optional<AlternateOrientation> alternate_orientation(const GaussDiagram& g, const CutSystem& cuts);

bool is_cut_system(const GaussDiagram& g, const CutSystem& cuts);
bool is_normal(const GaussDiagram& g);

/// Knot-only criterion: the total marker count is even and, for every chord,
/// the markers (endpoints and cut points) strictly inside the tail-to-head
/// arc are even in number. Independent of the orientation solver.
bool satisfies_parity_condition(const GaussDiagram& g, const CutSystem& cuts);

/// Diagram traced from the PD plus one cut point on each outgoing strand of
/// every virtual crossing. Throws InternalError if the result is rejected by
/// the checker.
std::pair<GaussDiagram, CutSystem> canonical_cut_system(const PDDiagram& pd);

/// The affine GF(2) space of cut systems with at most one point per gap.
/// Every cut system reduces to exactly one member by removing point pairs
/// within gaps (move I).
class CutSystemSpace {
 public:
  explicit CutSystemSpace(const GaussDiagram& g);

  int dimension() const noexcept { return static_cast<int>(free_effect_.size()); }
  CutSystem particular() const { return materialize(particular_); }
  /// Uniform member.
  CutSystem sample(Rng& rng) const;
  /// Members with total <= max_total, sorted by (total, counts). Scans all
  /// 2^dimension members.
  std::vector<CutSystem> enumerate(int max_total) const;

 private:
  using Bits = std::vector<uint64_t>;
  CutSystem materialize(const Bits& x) const;

  GaussDiagram shape_;
  std::vector<Gap> gaps_;
  Bits particular_;
  std::vector<Bits> free_effect_;
};

/// Smallest cut system with at most one point per gap (ties broken by the
/// lexicographically least count vector). Always exists.
CutSystem find_cut_system(const GaussDiagram& g);

/// Every cut system with counts in {0,1} and total <= max_total, sorted by
/// (total, counts). Returns an empty list if the space has more than
/// 2^max_free_bits elements to scan.
std::vector<CutSystem> small_cut_systems(const GaussDiagram& g, int max_total, int max_free_bits = 24);

enum class CutMoveKind : int { IInsert = 0, IDelete = 1, IIIInsert = 2, IIIDelete = 3 };

/// Move I adds or removes a pair of points in one gap; move III adds or
/// removes one point in each gap flanking the two endpoints of a chord.
/// Move II (sliding across a virtual crossing) is invisible on Gauss diagrams.
struct CutMove {
  CutMoveKind kind = CutMoveKind::IInsert;
  Gap gap;            // moves I
  ChordId chord = 0;  // moves III

  static CutMove i_insert(Gap g) { return {CutMoveKind::IInsert, g, 0}; }
  static CutMove i_delete(Gap g) { return {CutMoveKind::IDelete, g, 0}; }
  static CutMove iii_insert(ChordId c) { return {CutMoveKind::IIIInsert, {}, c}; }
  static CutMove iii_delete(ChordId c) { return {CutMoveKind::IIIDelete, {}, c}; }

  bool is_insert() const { return kind == CutMoveKind::IInsert || kind == CutMoveKind::IIIInsert; }
  CutMove inverse() const;

  friend auto operator<=>(const CutMove&, const CutMove&) = default;
};

const char* to_string(CutMoveKind k);

/// The four gaps flanking a chord's endpoints (before/after tail, before/after head).
std::vector<Gap> flanking_gaps(const GaussDiagram& g, ChordId chord);

bool is_legal(const GaussDiagram& g, const CutSystem& cuts, const CutMove& m);
CutSystem apply_cut_move(const GaussDiagram& g, const CutSystem& cuts, const CutMove& m);
CutSystem apply_cut_moves(const GaussDiagram& g, const CutSystem& cuts, const std::vector<CutMove>& moves);

/// Legal moves keeping every count <= cap, in (kind, location) order.
std::vector<CutMove> legal_moves(const GaussDiagram& g, const CutSystem& cuts, int cap);

/// Distinct results of single legal moves with counts <= cap, in move order.
std::vector<CutSystem> neighbors(const GaussDiagram& g, const CutSystem& cuts, int cap);

/// Lexicographically first shortest move sequence from `from` to `to` within
/// max_depth steps and per-gap cap. Breadth-first from both ends (half the
/// depth each), then the earliest-discovered meeting state and a greedy
/// suffix along exact goal distances.
std::optional<std::vector<CutMove>> find_move_path(const GaussDiagram& g, const CutSystem& from, const CutSystem& to,
                                                   int max_depth, int cap);

}  // namespace vkc
