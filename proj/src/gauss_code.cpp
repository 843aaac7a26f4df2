#include "vkc/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "vkc/errors.hpp"

namespace vkc {

namespace {

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

struct Token {
  Marker marker;
  Sign sign;
};

class CodeReader {
 public:
  explicit CodeReader(std::string_view text) : text_(text) {}

  std::vector<std::vector<Token>> read() {
    std::vector<std::vector<Token>> components;
    skip_space();
    if (done()) throw ParseError("empty Gauss code", pos_);
    while (true) {
      components.push_back(read_component());
      skip_space();
      if (done()) break;
      if (text_[pos_] != '|') throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
      ++pos_;
    }
    return components;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!done() && is_space(text_[pos_])) ++pos_;
  }

  std::vector<Token> read_component() {
    skip_space();
    std::vector<Token> tokens;
    if (!done() && text_[pos_] == '(') {
      const std::size_t start = pos_++;
      skip_space();
      if (done() || text_[pos_] != ')') throw ParseError("expected ')' closing empty component", start);
      ++pos_;
      return tokens;
    }
    while (true) {
      skip_space();
      if (done() || text_[pos_] == '|') break;
      tokens.push_back(read_token());
    }
    if (tokens.empty()) throw ParseError("empty component (write \"()\")", pos_);
    return tokens;
  }

  Token read_token() {
    Role role;
    switch (text_[pos_]) {
      case 'O': role = Role::Over; break;
      case 'U': role = Role::Under; break;
      default: throw ParseError(std::string("expected 'O' or 'U', got '") + text_[pos_] + "'", pos_);
    }
    ++pos_;
    const std::size_t digits = pos_;
    long id = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      id = id * 10 + (text_[pos_] - '0');
      if (id > 1'000'000'000) throw ParseError("chord id too large", digits);
      ++pos_;
    }
    if (pos_ == digits) throw ParseError("expected chord id", pos_);
    if (id == 0) throw ParseError("chord id must be positive", digits);
    if (done() || (text_[pos_] != '+' && text_[pos_] != '-')) throw ParseError("expected sign '+' or '-'", pos_);
    const Sign sign = text_[pos_] == '+' ? Sign::Positive : Sign::Negative;
    ++pos_;
    return Token{{static_cast<ChordId>(id), role}, sign};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

using Key = std::tuple<int, int, int>;  // (id, role, sign)

Key token_key(ChordId id, Role r, Sign s) {
  return {id, static_cast<int>(r), s == Sign::Positive ? 0 : 1};
}

struct SearchState {
  std::vector<bool> used;
  std::map<ChordId, ChordId> renumber;
  ChordId next = 1;
  std::vector<int> source;
  std::vector<int> rotation;
};

// Linearization of circle `c` rotated by `r`, renumbering unseen chords.
std::vector<Key> linearize(const GaussDiagram& g, int c, int r, std::map<ChordId, ChordId>& renumber, ChordId& next) {
  const auto& circle = g.circle(c);
  const int m = static_cast<int>(circle.size());
  std::vector<Key> seq;
  seq.reserve(circle.size());
  for (int j = 0; j < m; ++j) {
    const Marker& mk = circle[static_cast<std::size_t>((j + r) % m)];
    auto [it, inserted] = renumber.try_emplace(mk.chord, next);
    if (inserted) ++next;
    seq.push_back(token_key(it->second, mk.role, g.sign(mk.chord)));
  }
  return seq;
}

}  // namespace

GaussDiagram parse_gauss_code_lenient(std::string_view text, std::vector<std::string>* conflicts) {
  auto components = CodeReader(text).read();
  std::vector<Circle> circles;
  std::map<ChordId, Sign> signs;
  for (const auto& comp : components) {
    Circle circle;
    for (const Token& t : comp) {
      circle.push_back(t.marker);
      auto [it, inserted] = signs.try_emplace(t.marker.chord, t.sign);
      if (!inserted && it->second != t.sign && conflicts != nullptr) {
        conflicts->push_back("chord " + std::to_string(t.marker.chord) + " has conflicting signs");
      }
    }
    circles.push_back(std::move(circle));
  }
  return GaussDiagram(std::move(circles), std::move(signs));
}

GaussDiagram parse_gauss_code(std::string_view text) {
  std::vector<std::string> problems;
  GaussDiagram g = parse_gauss_code_lenient(text, &problems);
  for (auto& v : g.validate()) problems.push_back(std::move(v));
  if (!problems.empty()) throw ParseError(problems.front(), 0);
  return g;
}

std::string to_gauss_code(const GaussDiagram& g) {
  std::string out;
  for (int c = 0; c < g.circle_count(); ++c) {
    if (c > 0) out += '|';
    if (g.circle(c).empty()) {
      out += "()";
      continue;
    }
    for (const Marker& m : g.circle(c)) {
      out += to_char(m.role);
      out += std::to_string(m.chord);
      out += to_char(g.sign(m.chord));
    }
  }
  return out;
}

Canonical canonicalize(const GaussDiagram& g) { return canonicalize(g, CutSystem(g)); }

Canonical canonicalize(const GaussDiagram& g, const CutSystem& cuts) {
  const int n = g.circle_count();
  SearchState init;
  init.used.assign(static_cast<std::size_t>(n), false);
  for (int c = 0; c < n; ++c) {
    if (g.circle(c).empty()) {
      init.used[static_cast<std::size_t>(c)] = true;
      init.source.push_back(c);
      init.rotation.push_back(0);
    }
  }

  std::vector<SearchState> frontier{init};
  const int nonempty = n - static_cast<int>(init.source.size());
  for (int level = 0; level < nonempty; ++level) {
    std::vector<Key> best;
    bool have_best = false;
    std::vector<SearchState> next_frontier;
    std::set<std::pair<std::vector<bool>, std::map<ChordId, ChordId>>> seen;
    for (const SearchState& st : frontier) {
      for (int c = 0; c < n; ++c) {
        if (st.used[static_cast<std::size_t>(c)]) continue;
        for (int r = 0; r < g.marker_count(c); ++r) {
          SearchState cand = st;
          auto seq = linearize(g, c, r, cand.renumber, cand.next);
          if (have_best) {
            if (seq > best) continue;
            if (seq < best) {
              next_frontier.clear();
              seen.clear();
            }
          }
          best = std::move(seq);
          have_best = true;
          cand.used[static_cast<std::size_t>(c)] = true;
          cand.source.push_back(c);
          cand.rotation.push_back(r);
          if (seen.insert({cand.used, cand.renumber}).second) next_frontier.push_back(std::move(cand));
        }
      }
    }
    frontier = std::move(next_frontier);
  }

  const SearchState& pick = frontier.front();
  Canonical out;
  out.source_circle = pick.source;
  out.rotation = pick.rotation;
  out.renumber = pick.renumber;
  std::vector<Circle> circles;
  std::vector<std::vector<int>> counts;
  std::map<ChordId, Sign> signs;
  for (std::size_t i = 0; i < pick.source.size(); ++i) {
    const int c = pick.source[i];
    const int r = pick.rotation[i];
    const int m = g.marker_count(c);
    Circle circle;
    std::vector<int> row(static_cast<std::size_t>(g.gap_count(c)), 0);
    for (int j = 0; j < m; ++j) {
      const Marker& mk = g.circle(c)[static_cast<std::size_t>((j + r) % m)];
      circle.push_back({pick.renumber.at(mk.chord), mk.role});
    }
    for (int gi = 0; gi < g.gap_count(c); ++gi) {
      const int k = g.gap_count(c);
      row[static_cast<std::size_t>(((gi - r) % k + k) % k)] = cuts.count({c, gi});
    }
    circles.push_back(std::move(circle));
    counts.push_back(std::move(row));
  }
  for (const auto& [old_id, new_id] : pick.renumber) signs[new_id] = g.sign(old_id);
  out.diagram = GaussDiagram(std::move(circles), std::move(signs));
  out.cuts = CutSystem(std::move(counts));
  return out;
}

std::string emit_gauss_code(const GaussDiagram& g) { return to_gauss_code(canonicalize(g).diagram); }

}  // namespace vkc
