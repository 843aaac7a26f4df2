#include "vkc/json_io.hpp"

#include "vkc/errors.hpp"

namespace vkc {

namespace {

std::string marker_text(const Marker& m) { return std::string(1, to_char(m.role)) + std::to_string(m.chord); }

Marker marker_from_text(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'O' && s[0] != 'U')) throw ParseError("bad marker \"" + s + "\"", 0);
  try {
    std::size_t used = 0;
    const int id = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw ParseError("bad marker \"" + s + "\"", 0);
    return {id, s[0] == 'O' ? Role::Over : Role::Under};
  } catch (const std::logic_error&) {
    throw ParseError("bad marker \"" + s + "\"", 0);
  }
}

Json gap_json(Gap g) { return Json::array({g.circle, g.index}); }

Gap gap_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("gap must be [circle, gap]", 0);
  return {j[0].get<int>(), j[1].get<int>()};
}

Sign sign_from_text(const std::string& s) {
  if (s == "+") return Sign::Positive;
  if (s == "-") return Sign::Negative;
  throw ParseError("sign must be \"+\" or \"-\"", 0);
}

MoveKind move_kind_from_text(const std::string& s) {
  for (MoveKind k : {MoveKind::R1Insert, MoveKind::R1Remove, MoveKind::R2Insert, MoveKind::R2Remove, MoveKind::R3,
                     MoveKind::KFlype})
    if (s == to_string(k)) return k;
  throw ParseError("unknown move kind \"" + s + "\"", 0);
}

}  // namespace

Json cuts_to_json(const CutSystem& cuts) {
  Json arr = Json::array();
  for (const auto& [gap, n] : cuts.entries()) arr.push_back(Json::array({gap.circle, gap.index, n}));
  return arr;
}

Json to_json(const GaussDiagram& g, const CutSystem& cuts) {
  Json j;
  Json circles = Json::array();
  for (const Circle& c : g.circles()) {
    Json row = Json::array();
    for (const Marker& m : c) row.push_back(marker_text(m));
    circles.push_back(std::move(row));
  }
  j["circles"] = std::move(circles);
  Json signs = Json::object();
  for (const auto& [id, s] : g.signs()) signs[std::to_string(id)] = std::string(1, to_char(s));
  j["signs"] = std::move(signs);
  j["cuts"] = cuts_to_json(cuts);
  return j;
}

Json to_json(const GaussDiagram& g) { return to_json(g, CutSystem(g)); }

DiagramWithCuts diagram_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("circles") || !j.contains("signs")) {
      throw ParseError("diagram JSON needs \"circles\" and \"signs\"", 0);
    }
    std::vector<Circle> circles;
    for (const auto& row : j.at("circles")) {
      Circle c;
      for (const auto& m : row) c.push_back(marker_from_text(m.get<std::string>()));
      circles.push_back(std::move(c));
    }
    std::map<ChordId, Sign> signs;
    for (const auto& [key, value] : j.at("signs").items()) signs[std::stoi(key)] = sign_from_text(value.get<std::string>());
    GaussDiagram g(std::move(circles), std::move(signs));
    CutSystem cuts = j.contains("cuts") ? cuts_from_json(j.at("cuts"), g) : CutSystem(g);
    return {std::move(g), std::move(cuts)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("diagram JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument&) {
    throw ParseError("diagram JSON: non-numeric chord id", 0);
  }
}

CutSystem cuts_from_json(const Json& j, const GaussDiagram& g) {
  const Json& arr = j.is_object() ? j.at("cuts") : j;
  if (!arr.is_array()) throw ParseError("cuts must be an array of [circle, gap, count]", 0);
  CutSystem cuts(g);
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 3) throw ParseError("cut entry must be [circle, gap, count]", 0);
    const Gap gap{e[0].get<int>(), e[1].get<int>()};
    const int n = e[2].get<int>();
    if (gap.circle < 0 || gap.circle >= g.circle_count() || gap.index < 0 || gap.index >= g.gap_count(gap.circle)) {
      throw ParseError("cut entry references a missing gap", 0);
    }
    if (n < 0) throw ParseError("cut count must be nonnegative", 0);
    cuts.add(gap, n);
  }
  return cuts;
}

Json to_json(const LaurentPolynomial& p) {
  Json arr = Json::array();
  for (auto [e, c] : p.descending()) arr.push_back(Json::array({e, c}));
  return arr;
}

Json to_json(const CutMove& m) {
  Json j;
  j["kind"] = to_string(m.kind);
  if (m.kind == CutMoveKind::IInsert || m.kind == CutMoveKind::IDelete) {
    j["gap"] = gap_json(m.gap);
  } else {
    j["chord"] = m.chord;
  }
  return j;
}

CutMove cut_move_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "I_insert") return CutMove::i_insert(gap_from_json(j.at("gap")));
  if (kind == "I_delete") return CutMove::i_delete(gap_from_json(j.at("gap")));
  if (kind == "III_insert") return CutMove::iii_insert(j.at("chord").get<int>());
  if (kind == "III_delete") return CutMove::iii_delete(j.at("chord").get<int>());
  throw ParseError("unknown cut move kind \"" + kind + "\"", 0);
}

Json to_json(const Move& m) {
  Json j;
  j["kind"] = to_string(m.kind);
  switch (m.kind) {
    case MoveKind::R1Insert:
      j["gap"] = gap_json(m.gap);
      j["sign"] = std::string(1, to_char(m.sign));
      j["overFirst"] = m.over_first;
      break;
    case MoveKind::R2Insert:
      j["overGap"] = gap_json(m.gap);
      j["underGap"] = gap_json(m.gap2);
      j["antiparallel"] = m.antiparallel;
      j["sign"] = std::string(1, to_char(m.sign));
      break;
    case MoveKind::R1Remove:
    case MoveKind::KFlype: j["chords"] = Json::array({m.chords[0]}); break;
    case MoveKind::R2Remove: j["chords"] = Json::array({m.chords[0], m.chords[1]}); break;
    case MoveKind::R3:
      j["chords"] = Json::array({m.chords[0], m.chords[1], m.chords[2]});
      j["variant"] = m.variant;
      break;
  }
  j["created"] = m.created;
  return j;
}

Move move_from_json(const Json& j) {
  try {
    Move m;
    m.kind = move_kind_from_text(j.at("kind").get<std::string>());
    switch (m.kind) {
      case MoveKind::R1Insert:
        m.gap = gap_from_json(j.at("gap"));
        m.sign = sign_from_text(j.at("sign").get<std::string>());
        m.over_first = j.at("overFirst").get<bool>();
        break;
      case MoveKind::R2Insert:
        m.gap = gap_from_json(j.at("overGap"));
        m.gap2 = gap_from_json(j.at("underGap"));
        m.antiparallel = j.at("antiparallel").get<bool>();
        m.sign = sign_from_text(j.at("sign").get<std::string>());
        break;
      case MoveKind::R3: m.variant = j.at("variant").get<int>(); [[fallthrough]];
      default: {
        const auto& ids = j.at("chords");
        for (std::size_t i = 0; i < ids.size() && i < 3; ++i) m.chords[i] = ids[i].get<int>();
      }
    }
    if (j.contains("created")) m.created = j.at("created").get<std::vector<ChordId>>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("move JSON: ") + e.what(), 0);
  }
}

Json to_json(const MoveTrace& t) {
  Json j;
  j["seed"] = t.seed;
  Json steps = Json::array();
  for (const Move& m : t.steps) steps.push_back(to_json(m));
  j["steps"] = std::move(steps);
  return j;
}

MoveTrace trace_from_json(const Json& j) {
  MoveTrace t;
  t.seed = j.at("seed").get<uint64_t>();
  for (const auto& s : j.at("steps")) t.steps.push_back(move_from_json(s));
  return t;
}

}  // namespace vkc
