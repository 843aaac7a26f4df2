#include "vkc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vkc/cut_system.hpp"
#include "vkc/double_cover.hpp"
#include "vkc/errors.hpp"
#include "vkc/gauss_code.hpp"
#include "vkc/invariants.hpp"
#include "vkc/json_io.hpp"
#include "vkc/moves.hpp"
#include "vkc/pd.hpp"
#include "vkc/verify.hpp"

namespace vkc {

namespace {

struct CliFailure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw CliFailure{code, std::move(message)}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(exit_code::no_input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(exit_code::no_input, "cannot read " + path);
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

enum class Format { Json, Pd, Gauss };

Format detect(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return Format::Json;
  if (t.find("X+(") != std::string::npos || t.find("X-(") != std::string::npos || t.find("V(") != std::string::npos)
    return Format::Pd;
  return Format::Gauss;
}

struct Input {
  GaussDiagram diagram;
  std::optional<CutSystem> cuts;  // from a JSON "cuts" field
  std::optional<PDDiagram> pd;
};

std::string join_problems(const std::vector<std::string>& problems) {
  std::string s;
  for (const auto& p : problems) s += (s.empty() ? "" : "; ") + p;
  return s;
}

Input load_input(const std::string& path) {
  const std::string text = read_file(path);
  Input in;
  try {
    switch (detect(text)) {
      case Format::Json: {
        Json j;
        try {
          j = Json::parse(text);
        } catch (const Json::parse_error& e) {
          fail(exit_code::invalid, std::string("malformed JSON: ") + e.what());
        }
        auto parsed = diagram_from_json(j);
        if (auto problems = parsed.diagram.validate(); !problems.empty())
          fail(exit_code::invalid, join_problems(problems));
        in.diagram = std::move(parsed.diagram);
        if (j.contains("cuts")) in.cuts = std::move(parsed.cuts);
        break;
      }
      case Format::Pd:
        in.pd = parse_pd_code(text);
        in.diagram = pd_to_gauss(*in.pd);
        break;
      case Format::Gauss: in.diagram = parse_gauss_code(trim(text)); break;
    }
  } catch (const ParseError& e) {
    fail(exit_code::invalid, e.what());
  }
  return in;
}

CutSystem load_cuts(const std::string& path, const GaussDiagram& g) {
  const std::string text = read_file(path);
  try {
    return cuts_from_json(Json::parse(text), g);
  } catch (const Json::parse_error& e) {
    fail(exit_code::invalid, std::string("malformed cut-system JSON: ") + e.what());
  } catch (const ParseError& e) {
    fail(exit_code::invalid, e.what());
  }
}

// "auto": JSON-supplied cuts, else the canonical system of PD input, else the
// smallest system found by exhaustive search.
CutSystem resolve_cuts(const Input& in, const std::string& cuts_arg, std::ostream& err) {
  CutSystem cuts;
  if (cuts_arg != "auto") {
    cuts = load_cuts(cuts_arg, in.diagram);
  } else if (in.cuts) {
    cuts = *in.cuts;
  } else if (in.pd) {
    try {
      cuts = canonical_cut_system(*in.pd).second;
    } catch (const InternalError&) {
      err << "note: canonical cut system rejected (PD not realizable?); using a searched one\n";
      cuts = find_cut_system(in.diagram);
    }
  } else {
    cuts = find_cut_system(in.diagram);
  }
  if (!cuts.fits(in.diagram)) fail(exit_code::invalid, "cut system does not fit the diagram");
  if (!is_cut_system(in.diagram, cuts)) fail(exit_code::invalid, "not a cut system for this diagram");
  return cuts;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

int cmd_parse(const std::string& path, std::ostream& out) {
  const std::string text = read_file(path);
  GaussDiagram g;
  std::vector<std::string> problems;
  try {
    switch (detect(text)) {
      case Format::Json: {
        Json j;
        try {
          j = Json::parse(text);
        } catch (const Json::parse_error& e) {
          fail(exit_code::invalid, std::string("malformed JSON: ") + e.what());
        }
        g = diagram_from_json(j).diagram;
        break;
      }
      case Format::Pd: {
        const PDDiagram pd = parse_pd_code(text);
        g = pd_to_gauss(pd);
        break;
      }
      case Format::Gauss: g = parse_gauss_code_lenient(trim(text), &problems); break;
    }
  } catch (const ParseError& e) {
    out << "invalid\n" << "error: " << e.what() << "\n";
    return exit_code::invalid;
  }
  for (auto& p : g.validate()) problems.push_back(std::move(p));
  if (!problems.empty()) {
    out << "invalid\n";
    for (const auto& p : problems) out << "error: " << p << "\n";
    return exit_code::invalid;
  }
  out << emit_gauss_code(g) << "\nvalid\n";
  return exit_code::ok;
}

int cmd_invariants(const std::string& path, const std::string& cuts_arg, int state_limit, std::ostream& out,
                   std::ostream& err) {
  const Input in = load_input(path);
  const GaussDiagram& g = in.diagram;
  Json j;
  j["writhe"] = writhe(g);
  if (g.is_knot()) j["oddWrithe"] = odd_writhe(g);
  j["normal"] = is_normal(g);
  if (g.is_knot()) {
    const CutSystem cuts = resolve_cuts(in, cuts_arg, err);
    j["lkN"] = lk_n(g, cuts);
    j["cuts"] = cuts_to_json(cuts);
  }
  const LaurentPolynomial f = f_polynomial(g, state_limit);
  j["f"] = f.to_string();
  j["fTerms"] = to_json(f);
  out << j.dump(2) << "\n";
  return exit_code::ok;
}

int cmd_cover(const std::string& path, const std::string& cuts_arg, std::ostream& out, std::ostream& err) {
  const Input in = load_input(path);
  const CutSystem cuts = resolve_cuts(in, cuts_arg, err);
  const CoverResult cover = double_cover(in.diagram, cuts);
  const Canonical canon = canonicalize(cover.diagram);
  Json report;
  report["components"] = component_count(cover);
  if (component_count(cover) == 2) {
    const LinkingNumber lk = linking_number(cover.diagram);
    if (lk.is_integer()) {
      report["lkN"] = lk.integer();
    } else {
      report["lkN"] = lk.to_string();
    }
  } else {
    report["lkN"] = nullptr;
  }
  std::vector<std::pair<ChordId, ChordOrigin>> rows;
  for (const auto& [id, origin] : cover.provenance) rows.emplace_back(canon.renumber.at(id), origin);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json chords = Json::array();
  for (const auto& [id, origin] : rows)
    chords.push_back({{"id", id}, {"source", origin.sheet == Sheet::Base ? "base" : "star"}, {"orig", origin.original}});
  report["chords"] = chords;
  out << emit_gauss_code(canon.diagram) << "\n" << report.dump() << "\n";
  return exit_code::ok;
}

int cmd_check_cut(const std::string& path, const std::string& cuts_path, std::ostream& out) {
  const Input in = load_input(path);
  const CutSystem cuts = load_cuts(cuts_path, in.diagram);
  const bool ok = cuts.fits(in.diagram) && is_cut_system(in.diagram, cuts);
  out << (ok ? "cut system" : "not a cut system") << "\n";
  return ok ? exit_code::ok : exit_code::invalid;
}

int cmd_cut_path(const std::string& path, const std::string& from_path, const std::string& to_path, int depth,
                 std::optional<int> cap, std::ostream& out) {
  const Input in = load_input(path);
  const CutSystem from = load_cuts(from_path, in.diagram);
  const CutSystem to = load_cuts(to_path, in.diagram);
  for (const CutSystem* c : {&from, &to})
    if (!c->fits(in.diagram) || !is_cut_system(in.diagram, *c)) fail(exit_code::invalid, "not a cut system for this diagram");
  const int c = cap.value_or(std::max({2, from.max_count(), to.max_count()}));
  if (c < std::max(from.max_count(), to.max_count())) fail(exit_code::usage, "--cap is below an existing gap count");
  const auto found = find_move_path(in.diagram, from, to, depth, c);
  if (!found) {
    out << "NOT_FOUND\n";
    return exit_code::not_found;
  }
  Json moves = Json::array();
  for (const CutMove& m : *found) moves.push_back(to_json(m));
  out << moves.dump() << "\n";
  return exit_code::ok;
}

int cmd_walk(const std::string& path, int steps, uint64_t seed, bool flype, std::ostream& out) {
  const Input in = load_input(path);
  const auto [walked, trace] = random_walk(in.diagram, steps, seed, flype);
  out << to_gauss_code(walked) << "\n" << to_json(trace).dump() << "\n";
  return exit_code::ok;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options, std::ostream& out, std::ostream& err) {
  const VerificationReport report = verify_suite(suite, options);
  out << report.to_json().dump(2) << "\n";
  err << suite << ": " << (report.passed() ? "pass" : "FAIL") << " (" << report.failures.size() << " failures, "
      << report.elapsed_seconds << " s)\n";
  return report.passed() ? exit_code::ok : exit_code::verify_failed;
}

struct IngestRow {
  std::string name;
  int line = 0;
  std::optional<GaussDiagram> diagram;
  std::string error;
  std::string odd_writhe, lkn, f, normal;
  bool over_limit = false;
};

// A line is a code, or a name token followed by a code.
void parse_ingest_line(IngestRow& row, const std::string& text) {
  try {
    row.diagram = parse_gauss_code(text);
    row.name = std::to_string(row.line);
    return;
  } catch (const ParseError&) {
  }
  const auto split = text.find_first_of(" \t,");
  if (split == std::string::npos) {
    try {
      parse_gauss_code(text);
    } catch (const ParseError& e) {
      row.error = e.what();
    }
    return;
  }
  row.name = text.substr(0, split);
  try {
    row.diagram = parse_gauss_code(trim(text.substr(split + 1)));
  } catch (const ParseError& e) {
    row.error = e.what();
  }
}

int cmd_ingest(const std::string& path, int state_limit, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(path);
  std::vector<IngestRow> rows;
  std::istringstream lines(text);
  std::string line;
  for (int n = 1; std::getline(lines, line); ++n) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    IngestRow row;
    row.line = n;
    parse_ingest_line(row, t);
    rows.push_back(std::move(row));
  }

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    IngestRow& row = rows[static_cast<std::size_t>(i)];
    if (!row.diagram) continue;
    const GaussDiagram& g = *row.diagram;
    try {
      row.normal = is_normal(g) ? "true" : "false";
      if (g.is_knot()) {
        row.odd_writhe = std::to_string(odd_writhe(g));
        row.lkn = std::to_string(lk_n(g, find_cut_system(g)));
      }
      row.f = f_polynomial(g, state_limit).to_string();
    } catch (const StateLimitError&) {
      row.over_limit = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }

  int code = exit_code::ok;
  out << "name,oddWrithe,lkN,f,normal\n";
  for (const IngestRow& row : rows) {
    if (!row.error.empty()) {
      err << "line " << row.line << ": " << row.error << "\n";
      code = exit_code::invalid;
      continue;
    }
    if (row.over_limit) {
      err << "line " << row.line << ": more than " << state_limit << " chords, f omitted\n";
      if (code == exit_code::ok) code = exit_code::state_limit;
    }
    out << csv_field(row.name) << ',' << row.odd_writhe << ',' << row.lkn << ',' << csv_field(row.f) << ','
        << row.normal << "\n";
  }
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Virtual knot diagrams: cut systems, double covers and invariants", "vkc"};
  app.require_subcommand(1);

  std::string file, cuts_arg = "auto", cuts_a, cuts_b, suite;
  int state_limit = kDefaultStateLimit;
  int depth = 6;
  std::optional<int> cap;
  int steps = 10;
  uint64_t seed = 0;
  bool flype = false;
  SuiteOptions suite_opts;

  auto* parse = app.add_subcommand("parse", "Validate a diagram and print its canonical Gauss code");
  parse->add_option("FILE", file, "Gauss code, PD code or JSON diagram")->required();

  auto* inv = app.add_subcommand("invariants", "Writhe, odd writhe, normality, lk_N and f-polynomial as JSON");
  inv->add_option("FILE", file)->required();
  inv->add_option("--cuts", cuts_arg, "auto or a cut-system JSON file")->capture_default_str();
  inv->add_option("--state-limit", state_limit, "Maximum chords for the state sum")->capture_default_str();

  auto* cover = app.add_subcommand("cover", "Double covering diagram: canonical code and provenance JSON");
  cover->add_option("FILE", file)->required();
  cover->add_option("--cuts", cuts_arg, "auto or a cut-system JSON file")->capture_default_str();

  auto* check = app.add_subcommand("check-cut", "Exit 0 iff CUTS is a cut system of the diagram");
  check->add_option("FILE", file)->required();
  check->add_option("CUTS", cuts_a)->required();

  auto* path = app.add_subcommand("cut-path", "Shortest cut-move sequence between two cut systems");
  path->add_option("FILE", file)->required();
  path->add_option("CUTS1", cuts_a)->required();
  path->add_option("CUTS2", cuts_b)->required();
  path->add_option("--depth", depth, "Maximum number of moves")->capture_default_str()->check(CLI::NonNegativeNumber);
  path->add_option("--cap", cap, "Maximum points per gap (default: max(2, largest count))");

  auto* walk = app.add_subcommand("walk", "Random walk of Reidemeister moves");
  walk->add_option("FILE", file)->required();
  walk->add_option("--steps", steps)->capture_default_str()->check(CLI::NonNegativeNumber);
  walk->add_option("--seed", seed)->capture_default_str();
  walk->add_flag("--flype", flype, "Also draw K-flypes");

  auto* verify = app.add_subcommand("verify", "Run a seeded property suite");
  verify->add_option("SUITE", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", suite_opts.trials)->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--seed", suite_opts.seed)->capture_default_str();
  verify->add_option("--max-chords", suite_opts.max_chords)->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--max-cut-points", suite_opts.max_cut_points)->capture_default_str();
  verify->add_option("--walk-steps", suite_opts.walk_steps)->capture_default_str();
  verify->add_option("--state-limit", suite_opts.state_limit)->capture_default_str();

  auto* ingest = app.add_subcommand("ingest", "Batch invariants for a table of Gauss codes, as CSV");
  ingest->add_option("TABLE", file)->required();
  ingest->add_option("--state-limit", state_limit)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    if (*parse) return cmd_parse(file, out);
    if (*inv) return cmd_invariants(file, cuts_arg, state_limit, out, err);
    if (*cover) return cmd_cover(file, cuts_arg, out, err);
    if (*check) return cmd_check_cut(file, cuts_a, out);
    if (*path) return cmd_cut_path(file, cuts_a, cuts_b, depth, cap, out);
    if (*walk) return cmd_walk(file, steps, seed, flype, out);
    if (*verify) return cmd_verify(suite, suite_opts, out, err);
    if (*ingest) return cmd_ingest(file, state_limit, out, err);
  } catch (const CliFailure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const StateLimitError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::state_limit;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::invalid;
  }
  return exit_code::usage;
}

}  // namespace vkc
