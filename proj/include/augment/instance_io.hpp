#pragma once

// Line-oriented ASCII instance format:
//
//   c <comment>                                  anywhere
//   p aug <vertex|edge> <n> <m> <l> <lambda> <k> exactly once, before e/l
//   e <u> <v>                                    m edge lines
//   l <u> <v>                                    l link lines
//
// Vertices are 1-indexed and contiguous 1..n. Results are emitted as a
// one-line JSON object: {"status":"yes","solution":[[u,v],...]} or
// {"status":"no"}.

#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include "augment/core.hpp"

namespace augment {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
};

inline const char* mode_name(Mode m) { return m == Mode::vertex ? "vertex" : "edge"; }

inline std::optional<Mode> mode_from_name(const std::string& s) {
  if (s == "vertex") return Mode::vertex;
  if (s == "edge") return Mode::edge;
  return std::nullopt;
}

inline Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_header = false;
  int want_edges = 0, want_links = 0;
  int seen_edges = 0, seen_links = 0;
  int line_no = 0;
  std::string line;

  auto parse_endpoints = [&](std::istringstream& ss, Vertex& u, Vertex& v) {
    if (!(ss >> u >> v)) throw ParseError(line_no, "expected two vertex ids");
    std::string tail;
    if (ss >> tail) throw ParseError(line_no, "unexpected trailing token '" + tail + "'");
    if (!inst.graph.contains(u) || !inst.graph.contains(v))
      throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;  // blank line
    if (tag == "c") continue;

    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string problem, mode_token;
      int n = 0;
      if (!(ss >> problem >> mode_token >> n >> want_edges >> want_links >> inst.lambda >>
            inst.budget_k))
        throw ParseError(line_no, "malformed header");
      std::string tail;
      if (ss >> tail) throw ParseError(line_no, "unexpected trailing token '" + tail + "'");
      if (problem != "aug") throw ParseError(line_no, "unknown problem type '" + problem + "'");
      auto mode = mode_from_name(mode_token);
      if (!mode) throw ParseError(line_no, "mode must be 'vertex' or 'edge'");
      inst.mode = *mode;
      if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
      if (want_edges < 0 || want_links < 0) throw ParseError(line_no, "negative count");
      if (inst.lambda < 1) throw ParseError(line_no, "lambda must be at least 1");
      if (inst.budget_k < 0) throw ParseError(line_no, "k must be nonnegative");
      inst.graph = Graph(n);
      have_header = true;
      continue;
    }

    if (!have_header) throw ParseError(line_no, "'" + tag + "' line before header");

    if (tag == "e") {
      Vertex u, v;
      parse_endpoints(ss, u, v);
      if (!inst.graph.add_edge(u, v)) throw ParseError(line_no, "duplicate edge");
      ++seen_edges;
    } else if (tag == "l") {
      Vertex u, v;
      parse_endpoints(ss, u, v);
      Link l{u, v};
      if (inst.graph.has_edge(l)) throw ParseError(line_no, "link duplicates edge");
      auto it = std::lower_bound(inst.links.begin(), inst.links.end(), l);
      if (it != inst.links.end() && *it == l) throw ParseError(line_no, "duplicate link");
      inst.links.insert(it, l);
      ++seen_links;
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }

  if (!have_header) throw ParseError(line_no, "missing header");
  if (seen_edges != want_edges)
    throw ParseError(line_no, "header announces " + std::to_string(want_edges) +
                                  " edges, file has " + std::to_string(seen_edges));
  if (seen_links != want_links)
    throw ParseError(line_no, "header announces " + std::to_string(want_links) +
                                  " links, file has " + std::to_string(seen_links));
  return inst;
}

inline Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

// Canonical form: header, then edges and links in lexicographic order.
inline std::string serialize_instance(const Instance& inst,
                                      std::span<const std::string> comments = {}) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "c " << c << "\n";
  out << "p aug " << mode_name(inst.mode) << ' ' << inst.graph.vertex_count() << ' '
      << inst.graph.edge_count() << ' ' << inst.links.size() << ' ' << inst.lambda << ' '
      << inst.budget_k << "\n";
  for (VertexPair e : inst.graph.edges()) out << "e " << e.u << ' ' << e.v << "\n";
  for (Link l : inst.links) out << "l " << l.u << ' ' << l.v << "\n";
  return out.str();
}

// Machine-readable result object; solution links in lexicographic order.
inline std::string result_to_string(const std::optional<Solution>& solution) {
  if (!solution) return "{\"status\":\"no\"}";
  std::ostringstream out;
  out << "{\"status\":\"yes\",\"solution\":[";
  Solution sorted = *solution;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) out << ',';
    out << '[' << sorted[i].u << ',' << sorted[i].v << ']';
  }
  out << "]}";
  return out.str();
}

}  // namespace augment
