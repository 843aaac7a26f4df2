#include "vkc/pd.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "vkc/errors.hpp"

namespace vkc {

namespace {

// Where an edge enters (in-slot) or leaves (out-slot) a crossing.
struct Slot {
  bool is_virtual = false;
  int crossing = 0;
  int slot = 0;  // 0..3 = a..d
};

struct EdgeSlots {
  std::vector<Slot> ins;
  std::vector<Slot> outs;
};

std::map<int, EdgeSlots> collect_slots(const PDDiagram& pd) {
  std::map<int, EdgeSlots> slots;
  auto add = [&](bool v, int x, const std::array<int, 4>& e) {
    for (int s = 0; s < 4; ++s) {
      auto& es = slots[e[static_cast<std::size_t>(s)]];
      (s < 2 ? es.ins : es.outs).push_back({v, x, s});
    }
  };
  for (int i = 0; i < static_cast<int>(pd.classical.size()); ++i) add(false, i, pd.classical[static_cast<std::size_t>(i)].edges);
  for (int i = 0; i < static_cast<int>(pd.virtuals.size()); ++i) add(true, i, pd.virtuals[static_cast<std::size_t>(i)].edges);
  return slots;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::array<int, 4> parse_tuple(const std::string& body, std::size_t line) {
  std::array<int, 4> out{};
  std::size_t pos = 0;
  for (int k = 0; k < 4; ++k) {
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    std::size_t used = 0;
    try {
      out[static_cast<std::size_t>(k)] = std::stoi(body.substr(pos), &used);
    } catch (const std::exception&) {
      throw ParseError("expected integer edge id in PD record on line " + std::to_string(line), line);
    }
    pos += used;
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    if (k < 3) {
      if (pos >= body.size() || body[pos] != ',') throw ParseError("expected ',' in PD record on line " + std::to_string(line), line);
      ++pos;
    }
  }
  if (pos != body.size()) throw ParseError("trailing characters in PD record on line " + std::to_string(line), line);
  return out;
}

}  // namespace

std::vector<std::string> PDDiagram::validate() const {
  std::vector<std::string> report;
  if (classical.empty() && virtuals.empty()) report.emplace_back("PD diagram has no crossings");
  for (const auto& [edge, es] : collect_slots(*this)) {
    const std::size_t n = es.ins.size() + es.outs.size();
    const std::string name = "edge " + std::to_string(edge);
    if (n != 2) {
      report.push_back(name + " appears " + std::to_string(n) + " times (expected 2)");
    } else if (es.ins.size() == 2) {
      report.push_back(name + " used twice as an incoming slot");
    } else if (es.outs.size() == 2) {
      report.push_back(name + " used twice as an outgoing slot");
    }
  }
  return report;
}

PDDiagram parse_pd_code(std::string_view text) {
  PDDiagram pd;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    start = end + 1;
    if (line.empty()) continue;

    std::size_t open = line.find('(');
    if (open == std::string::npos || line.back() != ')') {
      throw ParseError("expected X+(a,b,c,d), X-(a,b,c,d) or V(a,b,c,d) on line " + std::to_string(line_no), line_no);
    }
    const std::string head = trim(std::string_view(line).substr(0, open));
    const std::string body = line.substr(open + 1, line.size() - open - 2);
    const auto edges = parse_tuple(body, line_no);
    if (head == "X+" || head == "X-") {
      pd.classical.push_back({head == "X+" ? Sign::Positive : Sign::Negative, edges});
    } else if (head == "V") {
      pd.virtuals.push_back({edges});
    } else {
      throw ParseError("unknown PD record '" + head + "' on line " + std::to_string(line_no), line_no);
    }
  }
  if (auto report = pd.validate(); !report.empty()) throw ParseError(report.front(), 0);
  return pd;
}

std::string to_pd_code(const PDDiagram& pd) {
  auto tuple = [](const std::array<int, 4>& e) {
    return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," +
           std::to_string(e[3]) + ")";
  };
  std::string out;
  for (const auto& x : pd.classical) out += std::string("X") + to_char(x.sign) + tuple(x.edges) + "\n";
  for (const auto& v : pd.virtuals) out += "V" + tuple(v.edges) + "\n";
  return out;
}

PDTrace trace_pd(const PDDiagram& pd) {
  if (auto report = pd.validate(); !report.empty()) throw PreconditionError(report.front());
  const auto slots = collect_slots(pd);

  PDTrace out;
  std::vector<Circle> circles;
  std::map<ChordId, Sign> signs;
  for (int i = 0; i < static_cast<int>(pd.classical.size()); ++i) signs[i + 1] = pd.classical[static_cast<std::size_t>(i)].sign;

  std::set<int> visited;
  for (const auto& [first_edge, unused] : slots) {
    if (visited.contains(first_edge)) continue;
    const int c = static_cast<int>(circles.size());
    Circle circle;
    std::vector<int> leading;  // edges seen before the first marker
    int edge = first_edge;
    do {
      visited.insert(edge);
      if (circle.empty()) {
        leading.push_back(edge);
      } else {
        out.edge_gap[edge] = {c, static_cast<int>(circle.size()) - 1};
      }
      const Slot in = slots.at(edge).ins.front();
      int next;
      if (in.is_virtual) {
        const auto& e = pd.virtuals[static_cast<std::size_t>(in.crossing)].edges;
        next = e[static_cast<std::size_t>(in.slot + 2)];
      } else {
        const auto& e = pd.classical[static_cast<std::size_t>(in.crossing)].edges;
        circle.push_back({in.crossing + 1, in.slot == 0 ? Role::Under : Role::Over});
        next = e[static_cast<std::size_t>(in.slot + 2)];
      }
      edge = next;
    } while (edge != first_edge);
    const int last_gap = circle.empty() ? 0 : static_cast<int>(circle.size()) - 1;
    for (int e : leading) out.edge_gap[e] = {c, last_gap};
    circles.push_back(std::move(circle));
  }
  out.diagram = GaussDiagram(std::move(circles), std::move(signs));
  return out;
}

GaussDiagram pd_to_gauss(const PDDiagram& pd) { return trace_pd(pd).diagram; }

}  // namespace vkc
