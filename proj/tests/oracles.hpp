#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "vkc/gauss_diagram.hpp"
#include "vkc/laurent.hpp"

namespace oracle {

using vkc::CutSystem;
using vkc::GaussDiagram;

using Poly = std::map<int, long long>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

inline vkc::LaurentPolynomial to_laurent(const Poly& p) {
  vkc::LaurentPolynomial out;
  for (const auto& [e, c] : p) out.add_term(e, c);
  return out;
}

// Bracket by walking each smoothed state end to end. Every marker has an
// "in" end (2i) and an "out" end (2i+1); the out end of marker i is joined by
// an arc to the in end of the next marker on its circle.
inline vkc::LaurentPolynomial bracket(const GaussDiagram& g) {
  std::vector<int> offset;
  int n_markers = 0;
  int empty = 0;
  for (const auto& c : g.circles()) {
    offset.push_back(n_markers);
    n_markers += static_cast<int>(c.size());
    if (c.empty()) ++empty;
  }
  std::vector<int> arc(static_cast<std::size_t>(2 * n_markers));
  std::map<vkc::ChordId, std::array<int, 2>> where;  // marker index of tail, head
  for (int c = 0; c < g.circle_count(); ++c) {
    const int m = g.marker_count(c);
    for (int p = 0; p < m; ++p) {
      const int here = offset[c] + p;
      const int next = offset[c] + (p + 1) % m;
      arc[2 * here + 1] = 2 * next;
      arc[2 * next] = 2 * here + 1;
      const vkc::Marker mk = g.circle(c)[p];
      where[mk.chord][mk.role == vkc::Role::Over ? 0 : 1] = here;
    }
  }
  const std::vector<vkc::ChordId> ids = [&] {
    std::vector<vkc::ChordId> v;
    for (const auto& [id, s] : g.signs()) v.push_back(id);
    return v;
  }();
  const Poly d{{2, -1}, {-2, -1}};
  Poly total;
  const int n = static_cast<int>(ids.size());
  for (long state = 0; state < (1L << n); ++state) {
    std::vector<int> smooth(arc.size());
    int a = 0;
    for (int k = 0; k < n; ++k) {
      const bool a_smoothing = (state >> k) & 1;
      a += a_smoothing;
      const auto [t, h] = where[ids[k]];
      const bool oriented = a_smoothing == (g.sign(ids[k]) == vkc::Sign::Positive);
      auto join = [&](int x, int y) {
        smooth[x] = y;
        smooth[y] = x;
      };
      if (oriented) {
        join(2 * t, 2 * h + 1);
        join(2 * h, 2 * t + 1);
      } else {
        join(2 * t, 2 * h);
        join(2 * t + 1, 2 * h + 1);
      }
    }
    std::vector<bool> seen(arc.size(), false);
    int loops = empty;
    for (std::size_t s = 0; s < arc.size(); ++s) {
      if (seen[s]) continue;
      ++loops;
      int e = static_cast<int>(s);
      do {
        seen[e] = true;
        const int f = arc[e];
        seen[f] = true;
        e = smooth[f];
      } while (e != static_cast<int>(s));
    }
    Poly term{{a - (n - a), 1}};
    for (int k = 1; k < loops; ++k) term = poly_mul(term, d);
    for (const auto& [e, c] : term) total[e] += c;
  }
  std::erase_if(total, [](const auto& t) { return t.second == 0; });
  return to_laurent(total);
}

// Alternate orientation by trying every choice of starting direction per
// circle. Directions flip at every item (marker or cut point); an endpoint is
// a sink when the arc arriving at it points forward.
inline bool has_alternate_orientation(const GaussDiagram& g, const CutSystem& cuts) {
  struct Item {
    bool is_marker;
    vkc::Marker marker;
  };
  std::vector<std::vector<Item>> items(static_cast<std::size_t>(g.circle_count()));
  for (int c = 0; c < g.circle_count(); ++c) {
    const int m = g.marker_count(c);
    if (m == 0) {
      for (int k = 0; k < cuts.count({c, 0}); ++k) items[c].push_back({false, {}});
    }
    for (int p = 0; p < m; ++p) {
      items[c].push_back({true, g.circle(c)[p]});
      for (int k = 0; k < cuts.count({c, p}); ++k) items[c].push_back({false, {}});
    }
    if (items[c].size() % 2 != 0) return false;
  }
  const int circles = g.circle_count();
  for (long choice = 0; choice < (1L << circles); ++choice) {
    std::map<vkc::ChordId, int> sinks;
    for (int c = 0; c < circles; ++c) {
      const bool base = (choice >> c) & 1;
      const auto& its = items[c];
      const int n = static_cast<int>(its.size());
      for (int k = 0; k < n; ++k) {
        if (!its[k].is_marker) continue;
        const int before = (k - 1 + n) % n;
        const bool arriving_forward = base != (before % 2 == 1);
        sinks[its[k].marker.chord] += arriving_forward;
      }
    }
    bool ok = true;
    for (const auto& [id, s] : g.signs()) ok = ok && sinks[id] == 1;
    if (ok) return true;
  }
  return false;
}

// Cut-move neighbours computed directly from chord positions.
inline std::vector<CutSystem> cut_neighbors(const GaussDiagram& g, const CutSystem& cuts, int cap) {
  std::vector<CutSystem> out;
  for (int c = 0; c < g.circle_count(); ++c) {
    for (int k = 0; k < g.gap_count(c); ++k) {
      if (cuts.count({c, k}) + 2 <= cap) {
        CutSystem n = cuts;
        n.add({c, k}, 2);
        out.push_back(n);
      }
      if (cuts.count({c, k}) >= 2) {
        CutSystem n = cuts;
        n.add({c, k}, -2);
        out.push_back(n);
      }
    }
  }
  for (const auto& [id, s] : g.signs()) {
    std::vector<vkc::Gap> flank;
    for (int c = 0; c < g.circle_count(); ++c) {
      const int m = g.marker_count(c);
      for (int p = 0; p < m; ++p) {
        if (g.circle(c)[p].chord != id) continue;
        flank.push_back({c, (p - 1 + m) % m});
        flank.push_back({c, p});
      }
    }
    std::map<vkc::Gap, int> delta;
    for (auto gap : flank) delta[gap] += 1;
    bool up = true, down = true;
    for (const auto& [gap, dv] : delta) {
      up = up && cuts.count(gap) + dv <= cap;
      down = down && cuts.count(gap) - dv >= 0;
    }
    for (int sgn : {1, -1}) {
      if ((sgn == 1 && !up) || (sgn == -1 && !down)) continue;
      CutSystem n = cuts;
      for (const auto& [gap, dv] : delta) n.add(gap, sgn * dv);
      out.push_back(n);
    }
  }
  return out;
}

// Shortest number of cut moves, or -1 beyond max_depth.
inline int cut_distance(const GaussDiagram& g, const CutSystem& from, const CutSystem& to, int max_depth, int cap) {
  std::map<CutSystem, int> dist{{from, 0}};
  std::deque<CutSystem> queue{from};
  while (!queue.empty()) {
    const CutSystem cur = queue.front();
    queue.pop_front();
    const int d = dist[cur];
    if (cur == to) return d;
    if (d == max_depth) continue;
    for (const CutSystem& n : cut_neighbors(g, cur, cap)) {
      if (dist.emplace(n, d + 1).second) queue.push_back(n);
    }
  }
  return -1;
}

// R3 local patterns from three oriented straight lines around a triangle.
// Line k has unit normal at angle 90+120k degrees and offset `side`; each line
// meets the other two, and the height order decides over/under.
inline std::set<std::string> r3_patterns() {
  const double pi = std::acos(-1.0);
  std::array<std::array<double, 2>, 3> normal{};
  for (int k = 0; k < 3; ++k) {
    const double a = (90.0 + 120.0 * k) * pi / 180.0;
    normal[k] = {std::cos(a), std::sin(a)};
  }
  struct End {
    int other;
    char role;
    char sign;
  };
  auto configure = [&](std::array<int, 3> dirs, std::array<int, 3> height, double side) {
    std::array<std::array<double, 2>, 3> tangent{};
    for (int k = 0; k < 3; ++k) tangent[k] = {-dirs[k] * normal[k][1], dirs[k] * normal[k][0]};
    auto meet = [&](int i, int j) {
      const double a = normal[i][0], b = normal[i][1], c = normal[j][0], d = normal[j][1];
      const double det = a * d - b * c;
      return std::array<double, 2>{(side * d - b * side) / det, (a * side - c * side) / det};
    };
    std::array<std::vector<End>, 3> segs;
    for (int k = 0; k < 3; ++k) {
      std::vector<std::pair<double, End>> ends;
      for (int j = 0; j < 3; ++j) {
        if (j == k) continue;
        const auto p = meet(k, j);
        const double along = tangent[k][0] * p[0] + tangent[k][1] * p[1];
        const bool over = height[k] > height[j];
        const int o = over ? k : j;
        const int u = over ? j : k;
        const double cross = tangent[o][0] * tangent[u][1] - tangent[o][1] * tangent[u][0];
        ends.push_back({along, {j, over ? 'O' : 'U', cross > 0 ? '+' : '-'}});
      }
      std::sort(ends.begin(), ends.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& e : ends) segs[k].push_back(e.second);
    }
    return segs;
  };
  auto key = [](const std::array<std::vector<End>, 3>& segs) {
    std::array<int, 3> perm{0, 1, 2};
    std::string best;
    do {
      std::array<std::string, 3> relabeled;
      for (int old = 0; old < 3; ++old) {
        std::string s;
        for (const End& e : segs[old]) s += std::to_string(perm[e.other]) + e.role + e.sign;
        relabeled[perm[old]] = s;
      }
      const std::string k = relabeled[0] + "|" + relabeled[1] + "|" + relabeled[2];
      if (best.empty() || k < best) best = k;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  std::set<std::string> keys;
  for (int mask = 0; mask < 8; ++mask) {
    const std::array<int, 3> dirs{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
    std::array<int, 3> height{0, 1, 2};
    do {
      keys.insert(key(configure(dirs, height, 1.0)));
      keys.insert(key(configure(dirs, height, -1.0)));
    } while (std::next_permutation(height.begin(), height.end()));
  }
  return keys;
}

}  // namespace oracle
