#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynmono/errors.hpp"

namespace dynmono {

// Vertices are dense indices into a Graph. The canonical vertex order is the
// declaration order, and every deterministic tie-break in the library uses it.
using VertexSet = std::vector<int>;  // sorted ascending, no duplicates

inline bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union_of(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference_of(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection_of(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet as_vertex_set(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Simple undirected graph over named vertices.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::vector<std::string> names) {
    for (auto& name : names) add_vertex(std::move(name));
  }

  int add_vertex(std::string name) {
    if (index_.count(name) != 0) throw input_error("duplicate vertex '" + name + "'");
    int id = static_cast<int>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    adjacency_.emplace_back();
    return id;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("loop at vertex '" + names_[u] + "'");
    if (has_edge(u, v))
      throw input_error("duplicate edge '" + names_[u] + " " + names_[v] + "'");
    insert_sorted(adjacency_[u], v);
    insert_sorted(adjacency_[v], u);
    ++edge_count_;
  }

  void add_edge(std::string_view a, std::string_view b) { add_edge(index_of(a), index_of(b)); }

  int order() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  const std::vector<int>& neighbors(int u) const {
    check_vertex(u);
    return adjacency_[u];
  }

  int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

  const std::string& name(int u) const {
    check_vertex(u);
    return names_[u];
  }

  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int index_of(std::string_view name) const {
    auto id = find(name);
    if (!id) throw input_error("unknown vertex '" + std::string(name) + "'");
    return *id;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
      for (int v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& other) const {
    return names_ == other.names_ && adjacency_ == other.adjacency_;
  }

 private:
  void check_vertex(int u) const {
    if (u < 0 || u >= order()) throw input_error("vertex index out of range");
  }

  static void insert_sorted(std::vector<int>& list, int v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }

  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
  std::vector<std::vector<int>> adjacency_;
  int edge_count_ = 0;
};

inline void check_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
  int prev = -1;
  for (int v : s) {
    if (v < 0 || v >= g.order()) throw input_error(std::string(what) + ": unknown vertex index");
    if (v <= prev) throw input_error(std::string(what) + ": not a sorted set");
    prev = v;
  }
}

// A graph with one integer threshold per vertex and a bound t. A vertex with
// threshold <= 0 activates unconditionally; a vertex with threshold above its
// degree can only enter a hull through the seed set. tau(u) <= t is required
// only on the solver path and is checked there, not at construction.
struct ThresholdedInstance {
  Graph graph;
  std::vector<int> tau;
  int t = 0;

  ThresholdedInstance() = default;

  ThresholdedInstance(Graph g, std::vector<int> thresholds,
                      std::optional<int> bound = std::nullopt)
      : graph(std::move(g)), tau(std::move(thresholds)) {
    if (static_cast<int>(tau.size()) != graph.order())
      throw input_error("threshold map does not cover the vertex set");
    if (bound) {
      if (*bound < 0) throw input_error("bound t must be non-negative");
      t = *bound;
    } else {
      int max_tau = 0;
      for (int x : tau) max_tau = std::max(max_tau, x);
      t = max_tau;  // smallest valid bound; negative thresholds clamp to 0
    }
  }

  int threshold(int u) const { return tau[u]; }
};

// A seed-first activation order covering every vertex exactly once.
struct Cascade {
  std::vector<int> order;
  VertexSet seed;
};

namespace detail {

// Hull restricted to the vertices with allowed[v] != 0. Queue-based propagation
// with per-vertex counters of active neighbors, O(|V|+|E|).
inline std::vector<int> hull_members(const ThresholdedInstance& inst,
                                     const std::vector<char>* allowed,
                                     const VertexSet& seed) {
  const Graph& g = inst.graph;
  const int n = g.order();
  std::vector<char> active(n, 0);
  std::vector<int> gained(n, 0);
  std::vector<int> added;
  added.reserve(n);
  auto ok = [&](int v) { return allowed == nullptr || (*allowed)[v] != 0; };
  auto activate = [&](int v) {
    active[v] = 1;
    added.push_back(v);
  };
  for (int v : seed) {
    if (!ok(v)) throw input_error("seed vertex outside the allowed subgraph");
    if (!active[v]) activate(v);
  }
  for (int v = 0; v < n; ++v)
    if (ok(v) && !active[v] && inst.tau[v] <= 0) activate(v);
  for (std::size_t head = 0; head < added.size(); ++head) {
    for (int w : g.neighbors(added[head])) {
      if (!ok(w) || active[w]) continue;
      if (++gained[w] >= inst.tau[w]) activate(w);
    }
  }
  return added;
}

}  // namespace detail

inline VertexSet hull(const ThresholdedInstance& inst, const VertexSet& seed) {
  check_vertex_set(inst.graph, seed, "hull seed");
  return as_vertex_set(detail::hull_members(inst, nullptr, seed));
}

inline VertexSet hull_in(const ThresholdedInstance& inst, const std::vector<char>& allowed,
                         const VertexSet& seed) {
  check_vertex_set(inst.graph, seed, "hull seed");
  return as_vertex_set(detail::hull_members(inst, &allowed, seed));
}

inline bool is_dynamic_monopoly(const ThresholdedInstance& inst, const VertexSet& seed) {
  check_vertex_set(inst.graph, seed, "seed");
  return static_cast<int>(detail::hull_members(inst, nullptr, seed).size()) ==
         inst.graph.order();
}

// Order in which the hull of `seed` forms: seed vertices first in canonical
// order, then at every step the canonical-least vertex whose threshold is met.
inline std::vector<int> activation_order(const ThresholdedInstance& inst,
                                         const VertexSet& seed) {
  check_vertex_set(inst.graph, seed, "seed");
  const Graph& g = inst.graph;
  const int n = g.order();
  std::vector<char> active(n, 0), queued(n, 0);
  std::vector<int> gained(n, 0);
  std::vector<int> order;
  order.reserve(n);
  std::priority_queue<int, std::vector<int>, std::greater<>> eligible;
  auto offer = [&](int v) {
    if (!active[v] && !queued[v] && gained[v] >= inst.tau[v]) {
      queued[v] = 1;
      eligible.push(v);
    }
  };
  auto place = [&](int v) {
    active[v] = 1;
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (active[w]) continue;
      ++gained[w];
      offer(w);
    }
  };
  for (int v : seed) place(v);
  for (int v = 0; v < n; ++v) offer(v);
  while (!eligible.empty()) {
    int v = eligible.top();
    eligible.pop();
    if (!active[v]) place(v);
  }
  return order;
}

inline bool verify_cascade(const ThresholdedInstance& inst, const Cascade& cascade) {
  const Graph& g = inst.graph;
  const int n = g.order();
  if (static_cast<int>(cascade.order.size()) != n)
    throw input_error("cascade order is not a permutation of the vertex set");
  std::vector<char> seen(n, 0);
  for (int v : cascade.order) {
    if (v < 0 || v >= n || seen[v])
      throw input_error("cascade order is not a permutation of the vertex set");
    seen[v] = 1;
  }
  check_vertex_set(g, cascade.seed, "cascade seed");

  // Seed-prefix property: no seed vertex after the first non-seed vertex.
  bool past_seed = false;
  for (int v : cascade.order) {
    bool in_seed = set_contains(cascade.seed, v);
    if (!in_seed) past_seed = true;
    if (in_seed && past_seed) return false;
  }

  std::vector<char> active(n, 0);
  std::vector<int> gained(n, 0);
  for (int v : cascade.order) {
    if (!set_contains(cascade.seed, v) && gained[v] < inst.tau[v]) return false;
    active[v] = 1;
    for (int w : g.neighbors(v))
      if (!active[w]) ++gained[w];
  }
  return true;
}

inline std::optional<Cascade> find_cascade(const ThresholdedInstance& inst,
                                           const VertexSet& seed) {
  std::vector<int> order = activation_order(inst, seed);
  if (static_cast<int>(order.size()) != inst.graph.order()) return std::nullopt;
  return Cascade{std::move(order), seed};
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  check_vertex_set(g, keep, "keep");
  std::vector<std::string> names;
  names.reserve(keep.size());
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    local[keep[i]] = static_cast<int>(i);
    names.push_back(g.name(keep[i]));
  }
  Graph out(std::move(names));
  for (int u : keep)
    for (int v : g.neighbors(u))
      if (u < v && local[v] >= 0) out.add_edge(local[u], local[v]);
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> components;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

// Vertices that can never be activated by neighbors; they belong to every
// dynamic monopoly.
inline VertexSet forced_vertices(const ThresholdedInstance& inst) {
  VertexSet out;
  for (int v = 0; v < inst.graph.order(); ++v)
    if (inst.tau[v] > inst.graph.degree(v)) out.push_back(v);
  return out;
}

}  // namespace dynmono
