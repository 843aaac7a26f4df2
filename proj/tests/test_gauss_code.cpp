#include <doctest.h>

#include "fixtures.hpp"
#include "vkc/errors.hpp"
#include "vkc/gauss_code.hpp"
#include "vkc/generators.hpp"

using namespace vkc;

TEST_CASE("kink parses to one positive chord with the tail first") {
  const GaussDiagram g = parse_gauss_code(fixture::kink);
  CHECK(g.circle_count() == 1);
  CHECK(g.chord_count() == 1);
  CHECK(g.sign(1) == Sign::Positive);
  const Chord c = g.chord(1);
  CHECK(c.tail.position == 0);
  CHECK(c.head.position == 1);
}

TEST_CASE("trefoil and virtual trefoil codes") {
  const GaussDiagram t = parse_gauss_code(fixture::trefoil);
  CHECK(t.chord_count() == 3);
  for (const Chord& c : t.chords()) CHECK(c.sign == Sign::Positive);

  const GaussDiagram v = parse_gauss_code(fixture::virtual_trefoil);
  CHECK(v.chord_count() == 2);
  const Chord a = v.chord(1), b = v.chord(2);
  // interlaced: exactly one endpoint of chord 2 lies between the ends of chord 1
  const bool b_tail_inside = a.tail.position < b.tail.position && b.tail.position < a.head.position;
  const bool b_head_inside = a.tail.position < b.head.position && b.head.position < a.head.position;
  CHECK(b_tail_inside != b_head_inside);
}

TEST_CASE("whitespace, components and empty components") {
  const GaussDiagram g = parse_gauss_code(" O1+ U2- | U1+ O2- | () ");
  CHECK(g.circle_count() == 3);
  CHECK(g.marker_count(2) == 0);
  CHECK(g.gap_count(2) == 1);
  CHECK(g.sign(2) == Sign::Negative);
  CHECK(to_gauss_code(g) == "O1+U2-|U1+O2-|()");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_gauss_code(""), ParseError);
  CHECK_THROWS_AS(parse_gauss_code("O1+X1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss_code("O1U1"), ParseError);
  CHECK_THROWS_AS(parse_gauss_code("O0+U0+"), ParseError);
  try {
    parse_gauss_code("O1+U1+?");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("invariant violations are rejected by the strict parser") {
  CHECK_THROWS_AS(parse_gauss_code("O1+"), ParseError);            // appears once
  CHECK_THROWS_AS(parse_gauss_code("O1+O1+"), ParseError);         // two tails
  CHECK_THROWS_AS(parse_gauss_code("U1+U1+"), ParseError);         // two heads
  CHECK_THROWS_AS(parse_gauss_code("O1+U1-"), ParseError);         // sign mismatch
  CHECK_THROWS_AS(parse_gauss_code("O1+U1+O1+U1+"), ParseError);   // appears 4 times
}

TEST_CASE("lenient parse reports conflicts and leaves validation to validate()") {
  std::vector<std::string> conflicts;
  const GaussDiagram g = parse_gauss_code_lenient("O1+O1+", &conflicts);
  CHECK(conflicts.empty());
  const auto report = g.validate();
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("two tails") != std::string::npos);

  parse_gauss_code_lenient("O1+U1-", &conflicts);
  CHECK(conflicts.size() == 1);
}

TEST_CASE("validate names each violation") {
  CHECK(parse_gauss_code(fixture::trefoil).validate().empty());

  GaussDiagram dangling({Circle{{1, Role::Over}, {1, Role::Under}}}, {{1, Sign::Positive}, {2, Sign::Negative}});
  const auto report = dangling.validate();
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("dangling") != std::string::npos);

  GaussDiagram unsigned_chord({Circle{{1, Role::Over}, {1, Role::Under}}}, {});
  CHECK(unsigned_chord.validate().front().find("no sign") != std::string::npos);

  CHECK_FALSE(GaussDiagram().valid());
}

TEST_CASE("emission of canonical codes") {
  CHECK(emit_gauss_code(GaussDiagram::unknot()) == "()");
  CHECK(emit_gauss_code(parse_gauss_code(fixture::virtual_trefoil)) == "O1+O2+U1+U2+");
  CHECK(emit_gauss_code(parse_gauss_code("U2+U1+O2+O1+")) == "O1+O2+U1+U2+");
  CHECK(emit_gauss_code(parse_gauss_code(fixture::kink)) == "O1+U1+");
  CHECK(emit_gauss_code(parse_gauss_code("U7+O7+")) == "O1+U1+");
  CHECK(emit_gauss_code(parse_gauss_code("U1-O2+|()|O1-U2+")) == "()|O1+U2-|U1+O2-");
}

TEST_CASE("canonical form reports how it was obtained") {
  const GaussDiagram g = parse_gauss_code("U2+U1+O2+O1+");
  const Canonical c = canonicalize(g);
  CHECK(c.rotation == std::vector<int>{2});
  CHECK(c.renumber.at(2) == 1);
  CHECK(c.renumber.at(1) == 2);
}

namespace {

GaussDiagram rotate_and_relabel(const GaussDiagram& g, Rng& rng) {
  std::vector<Circle> circles = g.circles();
  for (Circle& c : circles)
    if (!c.empty()) std::rotate(c.begin(), c.begin() + rng.below(static_cast<int>(c.size())), c.end());
  rng.shuffle(circles);
  std::vector<ChordId> ids;
  for (const auto& [id, s] : g.signs()) ids.push_back(id);
  std::vector<ChordId> fresh = ids;
  for (ChordId& id : fresh) id = id * 3 + 5;
  rng.shuffle(fresh);
  std::map<ChordId, ChordId> rename;
  for (std::size_t i = 0; i < ids.size(); ++i) rename[ids[i]] = fresh[i];
  for (Circle& c : circles)
    for (Marker& m : c) m.chord = rename[m.chord];
  std::map<ChordId, Sign> signs;
  for (const auto& [id, s] : g.signs()) signs[rename[id]] = s;
  return GaussDiagram(std::move(circles), std::move(signs));
}

}  // namespace

TEST_CASE("round trip and relabeling invariance on random diagrams") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const GaussDiagram g = random_gauss_diagram(rng, rng.between(0, 10), rng.between(1, 3));
    REQUIRE(g.valid());
    const std::string canonical = emit_gauss_code(g);
    const GaussDiagram reparsed = parse_gauss_code(canonical);
    CHECK(emit_gauss_code(reparsed) == canonical);
    CHECK(canonicalize(reparsed).diagram == reparsed);
    CHECK(parse_gauss_code(to_gauss_code(g)) == g);
    CHECK(emit_gauss_code(rotate_and_relabel(g, rng)) == canonical);
  }
}

TEST_CASE("canonicalization carries the cut system along") {
  const GaussDiagram g = parse_gauss_code("U2+U1+O2+O1+");
  CutSystem cuts(g);
  cuts.set({0, 3}, 1);  // after O1, before U2
  cuts.set({0, 1}, 1);  // between U1 and O2
  const Canonical c = canonicalize(g, cuts);
  CHECK(to_gauss_code(c.diagram) == "O1+O2+U1+U2+");
  // U2 U1 O2 O1 rotated by 2 -> O2 O1 U2 U1: gap 3 -> 1, gap 1 -> 3
  CHECK(c.cuts.count({0, 1}) == 1);
  CHECK(c.cuts.count({0, 3}) == 1);
  CHECK(c.cuts.total() == 2);
}
