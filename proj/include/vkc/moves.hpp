#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vkc/gauss_diagram.hpp"

namespace vkc {

/// Orientation variant of a Reidemeister II bigon. The over strand carries
/// the tails (a, b) in this order; a parallel under strand carries the heads
/// as (a, b), an antiparallel one as (b, a). Chord a gets `first_sign`,
/// chord b the opposite sign.
struct R2Variant {
  bool antiparallel = false;
  Sign first_sign = Sign::Positive;
};

/// Adds an isolated chord (adjacent endpoints) in `gap`; the tail comes first
/// along the circle iff `over_first`. The new chord gets id max+1.
GaussDiagram r1_insert(const GaussDiagram& g, Gap gap, Sign sign, bool over_first);
GaussDiagram r1_remove(const GaussDiagram& g, ChordId chord);
bool r1_removable(const GaussDiagram& g, ChordId chord);

/// Inserts a bigon: the tail block in `over_gap`, the head block in
/// `under_gap` (after the tail block when the gaps coincide). New ids max+1
/// (a) and max+2 (b).
GaussDiagram r2_insert(const GaussDiagram& g, Gap over_gap, Gap under_gap, R2Variant variant);
GaussDiagram r2_remove(const GaussDiagram& g, ChordId a, ChordId b);
bool r2_removable(const GaussDiagram& g, ChordId a, ChordId b);

/// Local pattern of three chords on three two-endpoint segments, keyed as in
/// the shipped R3 table. `segments[k]` lists the (circle, position) of the
/// two endpoints on segment k, in circle order.
struct R3Site {
  std::array<ChordId, 3> chords{};
  std::array<std::array<EndpointRef, 2>, 3> segments{};
  std::string pattern;
};

/// Every way the triple sits in a recognized R3 pattern, in deterministic
/// order; `variant` in r3() indexes this list.
std::vector<R3Site> r3_sites(const GaussDiagram& g, std::array<ChordId, 3> chords);
/// All applicable (triple, variant) sites in the diagram, triples ascending.
std::vector<R3Site> all_r3_sites(const GaussDiagram& g);
/// Reverses the endpoint order on each of the three segments.
GaussDiagram r3(const GaussDiagram& g, std::array<ChordId, 3> chords, int variant = 0);

/// Canonical R3 pattern keys (16 entries: 8 oriented moves, both sides).
const std::vector<std::string>& r3_pattern_table();

/// Arrow reversed, sign kept.
GaussDiagram k_flype(const GaussDiagram& g, ChordId chord);

enum class MoveKind : uint8_t { R1Insert, R1Remove, R2Insert, R2Remove, R3, KFlype };

const char* to_string(MoveKind k);

/// One rewrite with everything needed to replay it. `created` lists the
/// chord ids an insert introduced; removals and r3/k_flype leave ids alone.
struct Move {
  MoveKind kind = MoveKind::R1Insert;
  Gap gap;        // R1Insert, R2Insert (over block)
  Gap gap2;       // R2Insert (under block)
  Sign sign = Sign::Positive;
  bool over_first = true;   // R1Insert
  bool antiparallel = false;  // R2Insert
  std::array<ChordId, 3> chords{};  // R1Remove/KFlype: [0]; R2Remove: [0..1]; R3: all
  int variant = 0;                  // R3
  std::vector<ChordId> created;

  friend bool operator==(const Move&, const Move&) = default;
};

GaussDiagram apply_move(const GaussDiagram& g, Move& move);
GaussDiagram apply_move(const GaussDiagram& g, const Move& move);

struct MoveTrace {
  uint64_t seed = 0;
  std::vector<Move> steps;
};

/// Replays `trace` from `start`.
GaussDiagram replay(const GaussDiagram& start, const MoveTrace& trace);

/// `steps` seeded random moves: 40% R1, 40% R2, 10% R3, 10% K-flype
/// (without flypes the first three categories keep their relative weights).
/// Insert vs remove is a fair coin when a removal is available.
std::pair<GaussDiagram, MoveTrace> random_walk(const GaussDiagram& g, int steps, uint64_t seed, bool allow_flype);

}  // namespace vkc
