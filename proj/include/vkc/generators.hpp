#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vkc/cut_system.hpp"
#include "vkc/gauss_diagram.hpp"
#include "vkc/pd.hpp"
#include "vkc/rng.hpp"

namespace vkc {

/// Uniformly shuffled chord endpoints spread over `circles` circles (some
/// possibly empty), random signs. Chord ids 1..chords.
GaussDiagram random_gauss_diagram(Rng& rng, int chords, int circles);
inline GaussDiagram random_knot(Rng& rng, int chords) { return random_gauss_diagram(rng, chords, 1); }

/// A uniformly chosen 0/1 cut system with at most `max_points` points,
/// possibly followed by extra move-I pairs while the budget allows.
/// nullopt if no cut system fits the budget (for large solution spaces, if
/// none turned up among a fixed number of uniform samples).
std::optional<CutSystem> random_cut_system(Rng& rng, const GaussDiagram& g, int max_points);

/// Applies `count` uniformly chosen legal cut moves with per-gap cap.
std::pair<CutSystem, std::vector<CutMove>> random_cut_moves(Rng& rng, const GaussDiagram& g, const CutSystem& start,
                                                            int count, int cap);

/// One braid generator: crossing between strand positions i and i+1.
struct BraidLetter {
  enum class Kind { Positive, Negative, Virtual } kind = Kind::Positive;
  int position = 0;
};

/// PD code of the closure of a (virtual) braid. sigma_i (left strand over,
/// strands oriented upward) is a positive crossing.
PDDiagram braid_closure_pd(int strands, const std::vector<BraidLetter>& word);

/// Closure of a random braid on 2..4 strands with 0..max_classical classical
/// and 0..max_virtual virtual letters (at least one letter).
PDDiagram random_braid_pd(Rng& rng, int max_classical, int max_virtual);

/// A classical (hence normal) knot diagram from a random braid closure with
/// at most `max_crossings` crossings (at least one).
GaussDiagram random_classical_knot(Rng& rng, int max_crossings);

}  // namespace vkc
