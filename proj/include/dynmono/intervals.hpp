#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dynmono/errors.hpp"
#include "dynmono/graph.hpp"

namespace dynmono {

struct Interval {
  long long left = 0;
  long long right = 0;

  bool operator==(const Interval&) const = default;
};

// One closed interval per vertex; vertex i of the associated graph owns
// intervals[i]. Names carry the canonical vertex order.
struct IntervalRepresentation {
  std::vector<std::string> names;
  std::vector<Interval> intervals;
};

// Same shape, but the 2n endpoints are pairwise distinct and occupy exactly
// the integer grid 1..2n.
struct NormalizedRepresentation {
  std::vector<std::string> names;
  std::vector<Interval> intervals;
};

namespace detail {

inline void check_representation(const std::vector<std::string>& names,
                                 const std::vector<Interval>& intervals) {
  if (names.size() != intervals.size())
    throw input_error("representation does not cover the vertex set");
  for (const Interval& iv : intervals)
    if (iv.left > iv.right) throw input_error("interval with left > right");
}

}  // namespace detail

// Makes all endpoints distinct while preserving intersections of closed
// intervals. At a shared coordinate, left endpoints are placed before right
// endpoints (tangency stays an intersection); ties within the same kind break
// by canonical vertex order.
inline NormalizedRepresentation normalize(const IntervalRepresentation& rep) {
  detail::check_representation(rep.names, rep.intervals);
  const int n = static_cast<int>(rep.intervals.size());
  struct Event {
    long long coord;
    int kind;  // 0 = left, 1 = right
    int vertex;
  };
  std::vector<Event> events;
  events.reserve(2 * static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    events.push_back({rep.intervals[v].left, 0, v});
    events.push_back({rep.intervals[v].right, 1, v});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.coord != b.coord) return a.coord < b.coord;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.vertex < b.vertex;
  });
  NormalizedRepresentation out;
  out.names = rep.names;
  out.intervals.resize(n);
  for (int pos = 0; pos < 2 * n; ++pos) {
    const Event& e = events[pos];
    if (e.kind == 0)
      out.intervals[e.vertex].left = pos + 1;
    else
      out.intervals[e.vertex].right = pos + 1;
  }
  return out;
}

// Intersection graph of a normalized representation: sweep over endpoint
// positions, connecting each opening interval to every interval still open.
inline Graph realize_graph(const NormalizedRepresentation& rep) {
  detail::check_representation(rep.names, rep.intervals);
  const int n = static_cast<int>(rep.intervals.size());
  Graph g(rep.names);
  std::vector<int> opener(2 * n + 1, -1);  // position -> vertex opening there, if any
  for (int v = 0; v < n; ++v) {
    long long l = rep.intervals[v].left;
    if (l < 1 || l > 2 * n || opener[l] >= 0)
      throw input_error("representation is not normalized");
    opener[l] = v;
  }
  std::vector<int> open_list;
  for (int pos = 1; pos <= 2 * n; ++pos) {
    int v = opener[pos];
    if (v < 0) continue;  // a right endpoint; the owner simply stays behind
    open_list.erase(std::remove_if(open_list.begin(), open_list.end(),
                                   [&](int w) { return rep.intervals[w].right < pos; }),
                    open_list.end());
    for (int w : open_list) g.add_edge(std::min(v, w), std::max(v, w));
    open_list.push_back(v);
  }
  return g;
}

// Per elementary segment [x_i, x_{i+1}]: the set of intervals covering it and
// its size. Segment i is covered by vertex u iff left(u) <= i < right(u).
struct CutStructure {
  int vertex_count = 0;
  std::vector<VertexSet> cuts;  // 2n-1 entries, each sorted
  std::vector<int> counts;
};

inline CutStructure compute_cut_structure(const NormalizedRepresentation& rep) {
  detail::check_representation(rep.names, rep.intervals);
  const int n = static_cast<int>(rep.intervals.size());
  if (n == 0) throw input_error("cut structure of an empty representation");
  CutStructure out;
  out.vertex_count = n;
  out.cuts.resize(2 * n - 1);
  out.counts.resize(2 * n - 1);
  std::vector<std::vector<int>> opening(2 * n + 1), closing(2 * n + 1);
  for (int v = 0; v < n; ++v) {
    long long l = rep.intervals[v].left, r = rep.intervals[v].right;
    if (l < 1 || r > 2 * n || l >= r) throw input_error("representation is not normalized");
    opening[l].push_back(v);
    closing[r].push_back(v);
  }
  VertexSet open;
  for (int seg = 1; seg <= 2 * n - 1; ++seg) {
    for (int v : closing[seg]) open.erase(std::find(open.begin(), open.end(), v));
    for (int v : opening[seg]) open.insert(std::lower_bound(open.begin(), open.end(), v), v);
    out.cuts[seg - 1] = open;
    out.counts[seg - 1] = static_cast<int>(open.size());
  }
  return out;
}

// One layer of the cut decomposition. `prefix` collects every vertex whose
// interval starts at or before the layer's cut segment, `boundary` is the cut
// itself, and `slice` is the fresh part of the prefix plus the previous
// boundary.
struct Layer {
  int cut_index = 0;   // 1-based segment index j_i
  VertexSet prefix;    // V_i
  VertexSet boundary;  // B_i
  VertexSet slice;     // dV_i
};

struct Decomposition {
  int t = 0;
  std::vector<Layer> layers;
};

inline Decomposition compute_decomposition(const CutStructure& cuts, int t) {
  if (t < 0) throw input_error("bound t must be non-negative");
  const int segments = static_cast<int>(cuts.counts.size());
  Decomposition out;
  out.t = t;
  std::vector<int> indices;
  for (int i = 2; i <= segments - 1; ++i) {
    int c = cuts.counts[i - 1];
    if (c < std::min({cuts.counts[i - 2], cuts.counts[i], t})) indices.push_back(i);
  }
  indices.push_back(segments);

  const int n = cuts.vertex_count;
  std::vector<char> seen(n, 0);
  VertexSet prefix;
  int next_segment = 1;
  VertexSet previous_boundary;
  for (std::size_t li = 0; li < indices.size(); ++li) {
    Layer layer;
    layer.cut_index = indices[li];
    VertexSet fresh;
    for (; next_segment <= layer.cut_index; ++next_segment)
      for (int v : cuts.cuts[next_segment - 1])
        if (!seen[v]) {
          seen[v] = 1;
          fresh.push_back(v);
        }
    std::sort(fresh.begin(), fresh.end());
    prefix = set_union_of(prefix, fresh);
    layer.prefix = prefix;
    layer.boundary = cuts.cuts[layer.cut_index - 1];
    layer.slice = (li == 0) ? prefix : set_union_of(fresh, previous_boundary);
    previous_boundary = layer.boundary;
    out.layers.push_back(std::move(layer));
  }
  return out;
}

// Test utility: all minimal vertex cuts by subset enumeration. A set S is a
// minimal cut when it is an inclusion-minimal u,v-separator for some pair,
// which holds exactly when at least two components of G-S have all of S in
// their neighborhood. (A minimal u,v-separator may properly contain a smaller
// cut that separates a different pair.)
inline std::vector<VertexSet> minimal_vertex_cuts_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > 12) throw budget_error("minimal_vertex_cuts_bruteforce: graph larger than 12 vertices");
  std::vector<VertexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    VertexSet cut, rest;
    for (int v = 0; v < n; ++v)
      (mask & (1u << v) ? cut : rest).push_back(v);
    if (rest.size() < 2) continue;
    Graph remainder = induced_subgraph(g, rest);
    int full_components = 0;
    for (const VertexSet& comp_local : connected_components(remainder)) {
      VertexSet reached;
      for (int local : comp_local)
        for (int w : g.neighbors(rest[local]))
          if (set_contains(cut, w)) reached.push_back(w);
      if (as_vertex_set(std::move(reached)) == cut) ++full_components;
    }
    if (full_components >= 2) out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Test utility: |V| > t and no vertex set of size < t disconnects the graph.
// Complete graphs on m vertices count as (m-1)-connected.
inline bool is_t_connected(const Graph& g, int t) {
  const int n = g.order();
  if (n <= t) return false;
  if (t <= 0) return true;
  if (t >= 3 && n > 16) throw budget_error("is_t_connected: graph larger than 16 vertices");
  if (!is_connected(g)) return false;
  VertexSet all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  // Enumerate removal sets of size 1..t-1.
  std::vector<int> pick;
  auto search = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) {
      VertexSet removed(pick.begin(), pick.end());
      VertexSet rest = set_difference_of(all, removed);
      if (rest.size() >= 2 && connected_components(induced_subgraph(g, rest)).size() > 1)
        return true;  // found a small cut
      return false;
    }
    for (int v = start; v < n; ++v) {
      pick.push_back(v);
      if (self(self, v + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= t - 1; ++size)
    if (search(search, 0, size)) return false;
  return true;
}

}  // namespace dynmono
