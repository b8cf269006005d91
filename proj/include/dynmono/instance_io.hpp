#pragma once

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dynmono/errors.hpp"
#include "dynmono/graph.hpp"
#include "dynmono/intervals.hpp"

namespace dynmono {

enum class InstanceKind { interval, graph };

struct IntervalRecord {
  std::string name;
  long long left = 0;
  long long right = 0;
  int tau = 0;
  bool operator==(const IntervalRecord&) const = default;
};

struct VertexRecord {
  std::string name;
  int tau = 0;
  bool operator==(const VertexRecord&) const = default;
};

struct EdgeRecord {
  std::string a;
  std::string b;
  bool operator==(const EdgeRecord&) const = default;
};

struct InstanceFile {
  InstanceKind kind = InstanceKind::interval;
  std::optional<int> t;
  std::vector<IntervalRecord> intervals;
  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;
  bool operator==(const InstanceFile&) const = default;
};

namespace detail {

struct Token {
  std::string text;
  int column = 1;
};

inline bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
          c == '_'))
      return false;
  return true;
}

inline long long parse_int(const Token& tok, int line) {
  std::string_view s = tok.text;
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw parse_error(line, tok.column, "expected integer, got '" + tok.text + "'");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw parse_error(line, tok.column, "expected integer, got '" + tok.text + "'");
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw parse_error(line, tok.column, "integer out of range: '" + tok.text + "'");
  return value;
}

inline int parse_small_int(const Token& tok, int line) {
  long long v = parse_int(tok, line);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw parse_error(line, tok.column, "integer out of range: '" + tok.text + "'");
  return static_cast<int>(v);
}

inline std::string parse_name(const Token& tok, int line) {
  if (!valid_name(tok.text))
    throw parse_error(line, tok.column, "invalid name '" + tok.text + "'");
  return tok.text;
}

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;  // comment runs to the end of the line
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

}  // namespace detail

inline InstanceFile parse_instance(std::string_view text) {
  InstanceFile out;
  bool have_header = false;
  std::set<std::string> names;
  std::set<std::pair<std::string, std::string>> edge_keys;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    std::vector<detail::Token> tok = detail::tokenize(raw);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok[0].text != "format" || tok.size() != 3 || tok[2].text != "v1" ||
          (tok[1].text != "interval-instance" && tok[1].text != "graph-instance"))
        throw parse_error(line_no, tok[0].column,
                          "expected 'format interval-instance v1' or 'format graph-instance v1'");
      out.kind =
          tok[1].text == "interval-instance" ? InstanceKind::interval : InstanceKind::graph;
      have_header = true;
      continue;
    }

    const std::string& directive = tok[0].text;
    if (directive == "format") {
      throw parse_error(line_no, tok[0].column, "duplicate 'format' directive");
    } else if (directive == "t") {
      if (tok.size() != 2)
        throw parse_error(line_no, tok[0].column, "expected 't INT'");
      if (out.t) throw parse_error(line_no, tok[0].column, "duplicate 't' directive");
      int value = detail::parse_small_int(tok[1], line_no);
      if (value < 0) throw parse_error(line_no, tok[1].column, "t must be non-negative");
      out.t = value;
    } else if (directive == "interval") {
      if (out.kind != InstanceKind::interval)
        throw parse_error(line_no, tok[0].column,
                          "'interval' is not allowed in a graph-instance file");
      if (tok.size() != 5)
        throw parse_error(line_no, tok[0].column, "expected 'interval NAME LEFT RIGHT TAU'");
      IntervalRecord rec;
      rec.name = detail::parse_name(tok[1], line_no);
      rec.left = detail::parse_int(tok[2], line_no);
      rec.right = detail::parse_int(tok[3], line_no);
      rec.tau = detail::parse_small_int(tok[4], line_no);
      if (rec.left > rec.right)
        throw parse_error(line_no, tok[2].column, "interval with left > right");
      if (!names.insert(rec.name).second)
        throw parse_error(line_no, tok[1].column, "duplicate vertex '" + rec.name + "'");
      out.intervals.push_back(std::move(rec));
    } else if (directive == "vertex") {
      if (out.kind != InstanceKind::graph)
        throw parse_error(line_no, tok[0].column,
                          "'vertex' is not allowed in an interval-instance file");
      if (tok.size() != 3)
        throw parse_error(line_no, tok[0].column, "expected 'vertex NAME TAU'");
      VertexRecord rec;
      rec.name = detail::parse_name(tok[1], line_no);
      rec.tau = detail::parse_small_int(tok[2], line_no);
      if (!names.insert(rec.name).second)
        throw parse_error(line_no, tok[1].column, "duplicate vertex '" + rec.name + "'");
      out.vertices.push_back(std::move(rec));
    } else if (directive == "edge") {
      if (out.kind != InstanceKind::graph)
        throw parse_error(line_no, tok[0].column,
                          "'edge' is not allowed in an interval-instance file");
      if (tok.size() != 3)
        throw parse_error(line_no, tok[0].column, "expected 'edge NAME NAME'");
      EdgeRecord rec;
      rec.a = detail::parse_name(tok[1], line_no);
      rec.b = detail::parse_name(tok[2], line_no);
      if (names.count(rec.a) == 0)
        throw parse_error(line_no, tok[1].column,
                          "edge references unknown vertex '" + rec.a + "'");
      if (names.count(rec.b) == 0)
        throw parse_error(line_no, tok[2].column,
                          "edge references unknown vertex '" + rec.b + "'");
      if (rec.a == rec.b)
        throw parse_error(line_no, tok[1].column, "loop edge '" + rec.a + "'");
      auto key = std::minmax(rec.a, rec.b);
      if (!edge_keys.insert({key.first, key.second}).second)
        throw parse_error(line_no, tok[1].column,
                          "duplicate edge '" + rec.a + " " + rec.b + "'");
      out.edges.push_back(std::move(rec));
    } else {
      throw parse_error(line_no, tok[0].column, "unknown directive '" + directive + "'");
    }
  }
  if (!have_header) throw parse_error(1, 1, "missing 'format' header");
  return out;
}

inline std::string emit_instance(const InstanceFile& file) {
  std::string out;
  out += file.kind == InstanceKind::interval ? "format interval-instance v1\n"
                                             : "format graph-instance v1\n";
  if (file.t) out += "t " + std::to_string(*file.t) + "\n";
  for (const IntervalRecord& rec : file.intervals)
    out += "interval " + rec.name + " " + std::to_string(rec.left) + " " +
           std::to_string(rec.right) + " " + std::to_string(rec.tau) + "\n";
  for (const VertexRecord& rec : file.vertices)
    out += "vertex " + rec.name + " " + std::to_string(rec.tau) + "\n";
  for (const EdgeRecord& rec : file.edges) out += "edge " + rec.a + " " + rec.b + "\n";
  return out;
}

struct LoadedInstance {
  ThresholdedInstance instance;
  std::optional<IntervalRepresentation> representation;
};

inline LoadedInstance instantiate(const InstanceFile& file) {
  LoadedInstance out;
  std::vector<int> tau;
  if (file.kind == InstanceKind::interval) {
    IntervalRepresentation rep;
    for (const IntervalRecord& rec : file.intervals) {
      rep.names.push_back(rec.name);
      rep.intervals.push_back({rec.left, rec.right});
      tau.push_back(rec.tau);
    }
    Graph graph = realize_graph(normalize(rep));
    out.instance = ThresholdedInstance(std::move(graph), std::move(tau), file.t);
    out.representation = std::move(rep);
  } else {
    Graph graph;
    for (const VertexRecord& rec : file.vertices) {
      graph.add_vertex(rec.name);
      tau.push_back(rec.tau);
    }
    for (const EdgeRecord& rec : file.edges) graph.add_edge(rec.a, rec.b);
    out.instance = ThresholdedInstance(std::move(graph), std::move(tau), file.t);
  }
  return out;
}

inline InstanceFile interval_file(const ThresholdedInstance& inst,
                                  const IntervalRepresentation& rep) {
  if (rep.names != inst.graph.names())
    throw input_error("representation names do not match the instance");
  InstanceFile file;
  file.kind = InstanceKind::interval;
  file.t = inst.t;
  for (int v = 0; v < inst.graph.order(); ++v)
    file.intervals.push_back(
        {rep.names[v], rep.intervals[v].left, rep.intervals[v].right, inst.tau[v]});
  return file;
}

inline InstanceFile graph_file(const ThresholdedInstance& inst) {
  InstanceFile file;
  file.kind = InstanceKind::graph;
  file.t = inst.t;
  for (int v = 0; v < inst.graph.order(); ++v)
    file.vertices.push_back({inst.graph.name(v), inst.tau[v]});
  for (auto [u, v] : inst.graph.edges())
    file.edges.push_back({inst.graph.name(u), inst.graph.name(v)});
  return file;
}

}  // namespace dynmono
