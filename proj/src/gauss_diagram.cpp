#include "vkc/gauss_diagram.hpp"

#include <stdexcept>

#include "vkc/errors.hpp"

namespace vkc {

namespace {

struct Occurrences {
  std::vector<EndpointRef> tails;
  std::vector<EndpointRef> heads;
};

std::map<ChordId, Occurrences> collect(const std::vector<Circle>& circles) {
  std::map<ChordId, Occurrences> occ;
  for (int c = 0; c < static_cast<int>(circles.size()); ++c) {
    const auto& circle = circles[static_cast<std::size_t>(c)];
    for (int p = 0; p < static_cast<int>(circle.size()); ++p) {
      const Marker& m = circle[static_cast<std::size_t>(p)];
      auto& o = occ[m.chord];
      (m.role == Role::Over ? o.tails : o.heads).push_back({c, p});
    }
  }
  return occ;
}

}  // namespace

std::vector<Chord> GaussDiagram::chords() const {
  std::map<ChordId, Chord> out;
  for (const auto& [id, s] : signs_) out[id] = Chord{id, s, {}, {}};
  for (int c = 0; c < circle_count(); ++c) {
    for (int p = 0; p < marker_count(c); ++p) {
      const Marker& m = circles_[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)];
      auto it = out.find(m.chord);
      if (it == out.end()) throw PreconditionError("marker references unknown chord " + std::to_string(m.chord));
      (m.role == Role::Over ? it->second.tail : it->second.head) = {c, p};
    }
  }
  std::vector<Chord> v;
  v.reserve(out.size());
  for (auto& [id, ch] : out) v.push_back(ch);
  return v;
}

Chord GaussDiagram::chord(ChordId id) const {
  Chord ch{id, sign(id), {-1, -1}, {-1, -1}};
  for (int c = 0; c < circle_count(); ++c) {
    for (int p = 0; p < marker_count(c); ++p) {
      const Marker& m = circles_[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)];
      if (m.chord != id) continue;
      (m.role == Role::Over ? ch.tail : ch.head) = {c, p};
    }
  }
  if (ch.tail.circle < 0 || ch.head.circle < 0) {
    throw PreconditionError("chord " + std::to_string(id) + " is missing an endpoint");
  }
  return ch;
}

std::vector<std::string> GaussDiagram::validate() const {
  std::vector<std::string> report;
  if (circles_.empty()) report.emplace_back("diagram has no circles");
  auto occ = collect(circles_);
  for (const auto& [id, o] : occ) {
    if (id <= 0) report.push_back("chord id " + std::to_string(id) + " is not positive");
    if (!signs_.contains(id)) report.push_back("chord " + std::to_string(id) + " has no sign");
    const std::size_t total = o.tails.size() + o.heads.size();
    if (total != 2) {
      report.push_back("chord " + std::to_string(id) + " appears " + std::to_string(total) +
                       " times (expected 2)");
    } else if (o.tails.size() == 2) {
      report.push_back("chord " + std::to_string(id) + " has two tails");
    } else if (o.heads.size() == 2) {
      report.push_back("chord " + std::to_string(id) + " has two heads");
    }
  }
  for (const auto& [id, s] : signs_) {
    if (!occ.contains(id)) report.push_back("chord " + std::to_string(id) + " has no endpoints (dangling)");
  }
  return report;
}

CutSystem::CutSystem(const GaussDiagram& g) {
  counts_.reserve(static_cast<std::size_t>(g.circle_count()));
  for (int c = 0; c < g.circle_count(); ++c) counts_.emplace_back(static_cast<std::size_t>(g.gap_count(c)), 0);
}

int CutSystem::total() const noexcept {
  int t = 0;
  for (const auto& row : counts_)
    for (int n : row) t += n;
  return t;
}

int CutSystem::circle_total(int c) const {
  int t = 0;
  for (int n : counts_.at(static_cast<std::size_t>(c))) t += n;
  return t;
}

int CutSystem::max_count() const noexcept {
  int m = 0;
  for (const auto& row : counts_)
    for (int n : row) m = std::max(m, n);
  return m;
}

bool CutSystem::fits(const GaussDiagram& g) const {
  if (static_cast<int>(counts_.size()) != g.circle_count()) return false;
  for (int c = 0; c < g.circle_count(); ++c) {
    const auto& row = counts_[static_cast<std::size_t>(c)];
    if (static_cast<int>(row.size()) != g.gap_count(c)) return false;
    for (int n : row)
      if (n < 0) return false;
  }
  return true;
}

std::vector<std::pair<Gap, int>> CutSystem::entries() const {
  std::vector<std::pair<Gap, int>> out;
  for (int c = 0; c < static_cast<int>(counts_.size()); ++c) {
    const auto& row = counts_[static_cast<std::size_t>(c)];
    for (int g = 0; g < static_cast<int>(row.size()); ++g)
      if (row[static_cast<std::size_t>(g)] != 0) out.push_back({{c, g}, row[static_cast<std::size_t>(g)]});
  }
  return out;
}

}  // namespace vkc
