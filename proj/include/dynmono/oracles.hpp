#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dynmono/errors.hpp"
#include "dynmono/graph.hpp"
#include "dynmono/intervals.hpp"
#include "dynmono/rng.hpp"

namespace dynmono {

struct SearchBudget {
  long long max_steps = 20'000'000;  // candidate extensions tried before refusing
};

namespace detail {

// Incremental hull state for the seed-set search: activating one more seed
// only touches the newly reached part of the graph.
struct HullEngine {
  const ThresholdedInstance* inst = nullptr;
  std::vector<char> active;
  std::vector<int> gained;
  int covered = 0;

  explicit HullEngine(const ThresholdedInstance& instance)
      : inst(&instance),
        active(instance.graph.order(), 0),
        gained(instance.graph.order(), 0) {}

  void seed_unconditional() {
    for (int v = 0; v < inst->graph.order(); ++v)
      if (!active[v] && inst->tau[v] <= 0) activate(v);
  }

  void activate(int v) {
    std::vector<int> queue{v};
    active[v] = 1;
    ++covered;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int w : inst->graph.neighbors(queue[head])) {
        if (active[w]) continue;
        if (++gained[w] >= inst->tau[w]) {
          active[w] = 1;
          ++covered;
          queue.push_back(w);
        }
      }
    }
  }
};

}  // namespace detail

// Minimum dynamic monopoly whose chosen seeds come from `pool`, or nothing if
// every such monopoly needs more than max_size vertices. Vertices that cannot
// be activated by neighbors are included a priori and count toward the size.
// Candidates already inside the hull of the current prefix are skipped: a
// minimum monopoly never contains a vertex that the rest already reaches. The
// witness is the lexicographically least minimum monopoly.
inline std::optional<std::pair<int, VertexSet>> min_monopoly_within(
    const ThresholdedInstance& inst, const VertexSet& pool, int max_size,
    const SearchBudget& budget = {}) {
  check_vertex_set(inst.graph, pool, "pool");
  const int n = inst.graph.order();
  VertexSet forced = forced_vertices(inst);
  if (static_cast<int>(forced.size()) > max_size) return std::nullopt;

  detail::HullEngine base(inst);
  base.seed_unconditional();
  for (int v : forced)
    if (!base.active[v]) base.activate(v);
  if (base.covered == n) return std::make_pair(static_cast<int>(forced.size()), forced);

  VertexSet candidates = set_difference_of(pool, forced);
  const int max_extra = max_size - static_cast<int>(forced.size());
  long long steps = 0;

  std::vector<detail::HullEngine> levels;
  std::vector<int> chosen;
  VertexSet witness;
  auto dfs = [&](auto&& self, int depth, int start, int remaining) -> bool {
    for (std::size_t i = start; i < candidates.size(); ++i) {
      int v = candidates[i];
      if (levels[depth].active[v]) continue;  // already reached; never helps a minimum
      if (++steps > budget.max_steps)
        throw budget_error("seed search budget exceeded while testing " +
                           std::to_string(forced.size() + chosen.size() + 1) +
                           "-vertex seed sets");
      if (static_cast<int>(levels.size()) <= depth + 1)
        levels.push_back(levels[depth]);
      else
        levels[depth + 1] = levels[depth];
      levels[depth + 1].activate(v);
      chosen.push_back(v);
      if (remaining == 1) {
        if (levels[depth + 1].covered == n) {
          witness = as_vertex_set(chosen);
          return true;
        }
      } else if (self(self, depth + 1, static_cast<int>(i) + 1, remaining - 1)) {
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };

  for (int extra = 1; extra <= max_extra; ++extra) {
    levels.assign(1, base);
    chosen.clear();
    if (dfs(dfs, 0, 0, extra)) {
      return std::make_pair(static_cast<int>(forced.size()) + extra,
                            set_union_of(forced, witness));
    }
  }
  return std::nullopt;
}

// Ground truth for the minimum dynamic monopoly size, by increasing-cardinality
// search over all vertices.
inline std::pair<int, VertexSet> brute_force_dyn(const ThresholdedInstance& inst,
                                                 const SearchBudget& budget = {}) {
  VertexSet all(inst.graph.order());
  std::iota(all.begin(), all.end(), 0);
  auto result = min_monopoly_within(inst, all, inst.graph.order(), budget);
  if (!result) throw std::logic_error("the full vertex set is always a monopoly");
  return *result;
}

inline int brute_force_vertex_cover(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw budget_error("brute_force_vertex_cover: graph larger than 20 vertices");
  auto edges = g.edges();
  std::vector<int> pick;
  auto covers = [&]() {
    for (auto [u, v] : edges)
      if (!std::binary_search(pick.begin(), pick.end(), u) &&
          !std::binary_search(pick.begin(), pick.end(), v))
        return false;
    return true;
  };
  auto search = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) return covers();
    for (int v = start; v < n; ++v) {
      pick.push_back(v);
      if (self(self, v + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = 0; k <= n; ++k)
    if (search(search, 0, k)) return k;
  return n;
}

// Maximum cardinality search followed by a direct perfect-elimination check:
// in reverse selection order, the later neighbors of every vertex must form a
// clique. Holds for some order iff it holds for an MCS order.
inline bool is_chordal(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<int> weight(n, 0), position(n, -1);
  std::vector<char> picked(n, 0);
  std::vector<int> selection;
  for (int round = 0; round < n; ++round) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!picked[v] && (best < 0 || weight[v] > weight[best])) best = v;
    picked[best] = 1;
    selection.push_back(best);
    for (int w : g.neighbors(best))
      if (!picked[w]) ++weight[w];
  }
  std::reverse(selection.begin(), selection.end());  // candidate elimination order
  for (int i = 0; i < n; ++i) position[selection[i]] = i;
  for (int v = 0; v < n; ++v) {
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (position[w] > position[v]) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

// Output of the vertex-cover reduction: a chordal instance whose minimum
// dynamic monopoly size equals the vertex cover number of the source graph.
struct ReductionOutput {
  ThresholdedInstance instance;
  std::vector<std::pair<std::pair<int, int>, VertexSet>> gadget_map;
  VertexSet source_vertices;
};

// From a cubic source graph: make the source vertices a clique, and for every
// source edge uv attach an n-clique joined completely to u and v. Source
// vertices get threshold 3n+3, gadget vertices 1.
inline ReductionOutput vc_reduction(const Graph& cubic) {
  const int n = cubic.order();
  for (int v = 0; v < n; ++v)
    if (cubic.degree(v) != 3)
      throw input_error("vc_reduction expects a 3-regular graph; vertex '" + cubic.name(v) +
                        "' has degree " + std::to_string(cubic.degree(v)));
  Graph out(cubic.names());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.add_edge(u, v);

  ReductionOutput red;
  for (int v = 0; v < n; ++v) red.source_vertices.push_back(v);
  for (auto [u, v] : cubic.edges()) {
    VertexSet clique;
    for (int k = 1; k <= n; ++k) {
      std::string name =
          "K_" + cubic.name(u) + "_" + cubic.name(v) + "_" + std::to_string(k);
      if (out.find(name))
        throw input_error("gadget vertex name '" + name + "' collides with the input");
      clique.push_back(out.add_vertex(std::move(name)));
    }
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b)
        out.add_edge(clique[a], clique[b]);
    for (int w : clique) {
      out.add_edge(u, w);
      out.add_edge(v, w);
    }
    red.gadget_map.push_back({{u, v}, std::move(clique)});
  }
  std::vector<int> tau(out.order(), 1);
  for (int v = 0; v < n; ++v) tau[v] = 3 * n + 3;
  red.instance = ThresholdedInstance(std::move(out), std::move(tau), 3 * n + 3);
  return red;
}

// Seeded test-corpus instance: intervals of bounded length scattered over a
// span proportional to n, then normalized; thresholds drawn uniformly from
// 0..min(t, deg+1) so instances mix unconditional, ordinary, and seed-only
// vertices.
inline std::pair<ThresholdedInstance, IntervalRepresentation> generate_interval_instance(
    int n, int t, std::uint64_t seed) {
  if (n < 1) throw input_error("generate_interval_instance: n must be at least 1");
  if (t < 0) throw input_error("generate_interval_instance: t must be non-negative");
  Rng rng(mix_seed({seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)}));
  const int max_len = 1 + rng.below(12);
  IntervalRepresentation rep;
  for (int v = 0; v < n; ++v) {
    rep.names.push_back("v" + std::to_string(v + 1));
    long long left = 1 + rng.below(3 * n);
    long long len = rng.below(max_len + 1);
    rep.intervals.push_back({left, left + len});
  }
  NormalizedRepresentation norm = normalize(rep);
  Graph graph = realize_graph(norm);
  std::vector<int> tau(n);
  for (int v = 0; v < n; ++v) tau[v] = rng.below(std::min(t, graph.degree(v) + 1) + 1);
  IntervalRepresentation out{norm.names, norm.intervals};
  return {ThresholdedInstance(std::move(graph), std::move(tau), t), std::move(out)};
}

// Seeded simple 3-regular graph via the pairing model with full restarts on
// loops or repeated edges.
inline Graph generate_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw input_error("generate_cubic: n must be an even number of at least 4");
  Rng rng(mix_seed({seed, static_cast<std::uint64_t>(n)}));
  std::vector<int> stubs;
  stubs.reserve(3 * static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) stubs.push_back(v);
    for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
      std::swap(stubs[i], stubs[rng.below(i + 1)]);
    std::set<std::pair<int, int>> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v || !edges.emplace(std::min(u, v), std::max(u, v)).second) simple = false;
    }
    if (!simple) continue;
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v + 1));
    Graph g(std::move(names));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  throw std::logic_error("pairing model failed to produce a simple cubic graph");
}

}  // namespace dynmono
