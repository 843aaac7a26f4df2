#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vkc {

enum class Sign : int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

/// Over = tail of the chord's arrow, Under = head.
enum class Role : uint8_t { Over = 0, Under = 1 };

constexpr Role opposite(Role r) noexcept {
  return r == Role::Over ? Role::Under : Role::Over;
}
constexpr char to_char(Role r) noexcept { return r == Role::Over ? 'O' : 'U'; }

using ChordId = int;

struct Marker {
  ChordId chord = 0;
  Role role = Role::Over;

  friend bool operator==(const Marker&, const Marker&) = default;
};

struct EndpointRef {
  int circle = 0;
  int position = 0;

  friend auto operator<=>(const EndpointRef&, const EndpointRef&) = default;
};

struct Chord {
  ChordId id = 0;
  Sign sign = Sign::Positive;
  EndpointRef tail;  // over-passage
  EndpointRef head;  // under-passage
};

/// A gap between consecutive markers: gap `index` on a circle with m markers
/// lies between positions index and index+1 (mod m). A circle without markers
/// has the single gap 0.
struct Gap {
  int circle = 0;
  int index = 0;

  friend auto operator<=>(const Gap&, const Gap&) = default;
};

using Circle = std::vector<Marker>;

/// Oriented circles carrying signed, directed chords. Construction does not
/// validate; call `validate()` (or use the parsers, which do).
class GaussDiagram {
 public:
  GaussDiagram() = default;
  GaussDiagram(std::vector<Circle> circles, std::map<ChordId, Sign> signs)
      : circles_(std::move(circles)), signs_(std::move(signs)) {}

  /// A single empty circle (zero-crossing unknot).
  static GaussDiagram unknot() { return GaussDiagram({Circle{}}, {}); }

  const std::vector<Circle>& circles() const noexcept { return circles_; }
  const Circle& circle(int c) const { return circles_.at(static_cast<std::size_t>(c)); }
  const std::map<ChordId, Sign>& signs() const noexcept { return signs_; }

  int circle_count() const noexcept { return static_cast<int>(circles_.size()); }
  int chord_count() const noexcept { return static_cast<int>(signs_.size()); }
  int marker_count(int c) const { return static_cast<int>(circle(c).size()); }
  /// Gaps on circle c: max(markers, 1).
  int gap_count(int c) const { return std::max(marker_count(c), 1); }
  bool is_knot() const noexcept { return circles_.size() == 1; }

  Sign sign(ChordId id) const { return signs_.at(id); }
  const Marker& at(EndpointRef r) const {
    return circle(r.circle).at(static_cast<std::size_t>(r.position));
  }

  /// Chords with their endpoint positions, ordered by id. Requires validity.
  std::vector<Chord> chords() const;
  /// Endpoint lookup for one chord. Requires validity.
  Chord chord(ChordId id) const;
  ChordId max_chord_id() const noexcept { return signs_.empty() ? 0 : signs_.rbegin()->first; }

  /// Every violated invariant, one human-readable line each. Empty iff valid.
  std::vector<std::string> validate() const;
  bool valid() const { return validate().empty(); }

  // Mutable access for rewriting code that rebuilds diagrams.
  std::vector<Circle>& mutable_circles() noexcept { return circles_; }
  std::map<ChordId, Sign>& mutable_signs() noexcept { return signs_; }

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  std::vector<Circle> circles_;
  std::map<ChordId, Sign> signs_;
};

/// Cut points stored as a count per gap; same-gap points are unordered.
class CutSystem {
 public:
  CutSystem() = default;
  /// Empty system shaped for `g`.
  explicit CutSystem(const GaussDiagram& g);
  explicit CutSystem(std::vector<std::vector<int>> counts) : counts_(std::move(counts)) {}

  int count(Gap gap) const {
    return counts_.at(static_cast<std::size_t>(gap.circle)).at(static_cast<std::size_t>(gap.index));
  }
  void set(Gap gap, int n) {
    counts_.at(static_cast<std::size_t>(gap.circle)).at(static_cast<std::size_t>(gap.index)) = n;
  }
  void add(Gap gap, int delta) { set(gap, count(gap) + delta); }

  int total() const noexcept;
  int circle_total(int c) const;
  int max_count() const noexcept;
  bool empty() const noexcept { return total() == 0; }

  /// True iff the gap structure matches `g` and every count is nonnegative.
  bool fits(const GaussDiagram& g) const;

  const std::vector<std::vector<int>>& counts() const noexcept { return counts_; }
  /// Nonzero entries as (gap, count), in gap order.
  std::vector<std::pair<Gap, int>> entries() const;

  friend auto operator<=>(const CutSystem&, const CutSystem&) = default;

 private:
  std::vector<std::vector<int>> counts_;
};

}  // namespace vkc
