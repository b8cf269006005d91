#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "dynmono/errors.hpp"
#include "dynmono/graph.hpp"
#include "dynmono/intervals.hpp"

namespace dynmono {

// Distinguished "no compatible seed set exists" value; ordered above every
// integer, absorbing under addition.
inline constexpr int kInfeasible = std::numeric_limits<int>::max();

inline int value_plus(int a, int b) {
  if (a == kInfeasible || b == kInfeasible) return kInfeasible;
  return a + b;
}

// DP state for one layer: which boundary vertices are seeds (the first
// seed_count entries of `order`), the activation order of the boundary, and
// for each non-seed boundary vertex the amount of outside help it receives
// when it activates. help[j] belongs to order[seed_count + j].
struct LocalCascade {
  int layer = 0;  // 1-based
  std::vector<int> order;
  int seed_count = 0;
  std::vector<int> help;

  VertexSet seeds() const {
    return as_vertex_set({order.begin(), order.begin() + seed_count});
  }
  VertexSet boundary_set() const { return as_vertex_set(order); }

  bool operator==(const LocalCascade&) const = default;
};

// All (seed subset, order, help) triples for a boundary. Helps are capped at
// the vertex threshold by default: any larger value satisfies the same
// activation conditions, so the capped state space is exact and much smaller.
inline std::vector<LocalCascade> enumerate_local_cascades(const VertexSet& boundary, int n,
                                                          const std::vector<int>& tau,
                                                          int layer,
                                                          bool cap_help_at_threshold = true) {
  if (boundary.empty()) throw input_error("enumerate_local_cascades: empty boundary");
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    int v = boundary[i];
    if (v < 0 || v >= static_cast<int>(tau.size()))
      throw input_error("enumerate_local_cascades: vertex outside threshold map");
    if (i > 0 && boundary[i - 1] >= v)
      throw input_error("enumerate_local_cascades: boundary is not a sorted set");
  }
  auto cap_of = [&](int v) {
    return cap_help_at_threshold ? std::clamp(tau[v], 0, n) : n;
  };

  const int b = static_cast<int>(boundary.size());
  std::vector<LocalCascade> out;
  for (unsigned mask = 0; mask < (1u << b); ++mask) {
    std::vector<int> seed_part, rest_part;
    for (int i = 0; i < b; ++i)
      (mask & (1u << i) ? seed_part : rest_part).push_back(boundary[i]);
    std::vector<int> seed_perm = seed_part;
    do {
      std::vector<int> rest_perm = rest_part;
      do {
        std::vector<int> order = seed_perm;
        order.insert(order.end(), rest_perm.begin(), rest_perm.end());
        std::vector<int> help(rest_perm.size(), 0);
        for (;;) {
          out.push_back({layer, order, static_cast<int>(seed_perm.size()), help});
          int pos = static_cast<int>(help.size()) - 1;
          while (pos >= 0 && help[pos] == cap_of(rest_perm[pos])) help[pos--] = 0;
          if (pos < 0) break;
          ++help[pos];
        }
      } while (std::next_permutation(rest_perm.begin(), rest_perm.end()));
    } while (std::next_permutation(seed_perm.begin(), seed_perm.end()));
  }
  return out;
}

// Hull of `seeds` in the subgraph induced by `inside` minus `removed`.
inline VertexSet localized_hull(const ThresholdedInstance& inst, const VertexSet& inside,
                                const VertexSet& removed, const VertexSet& seeds) {
  check_vertex_set(inst.graph, inside, "inside");
  check_vertex_set(inst.graph, removed, "removed");
  check_vertex_set(inst.graph, seeds, "seeds");
  if (!is_subset_of(removed, inside))
    throw input_error("localized_hull: removed set leaves the subgraph");
  if (!is_subset_of(seeds, inside))
    throw input_error("localized_hull: seed set leaves the subgraph");
  if (!set_intersection_of(seeds, removed).empty())
    throw input_error("localized_hull: seeds overlap the removed set");
  std::vector<char> allowed(inst.graph.order(), 0);
  for (int v : inside) allowed[v] = 1;
  for (int v : removed) allowed[v] = 0;
  return hull_in(inst, allowed, seeds);
}

// How one DP cell was reached; enough to rebuild a witness seed set.
struct TransitionChoice {
  VertexSet base_seeds;           // layer 1: the chosen interior seeds
  VertexSet exiting_seeds;        // seeds among boundary vertices leaving the boundary
  VertexSet band_seeds;           // seeds in the slice outside both boundaries
  std::vector<int> joint_order;   // activation order over both boundaries
  int predecessor = -1;           // cell index in the previous layer's table
};

struct DPCell {
  int value = kInfeasible;
  TransitionChoice back;
};

using CellKey = std::tuple<std::vector<int>, int, std::vector<int>>;

struct DPTable {
  int layer = 0;
  std::vector<LocalCascade> cascades;
  std::vector<DPCell> cells;
  std::map<CellKey, int> index;

  static CellKey key_of(const LocalCascade& lc) { return {lc.order, lc.seed_count, lc.help}; }

  int cell_index(const LocalCascade& lc) const {
    auto it = index.find(key_of(lc));
    if (it == index.end()) throw input_error("no such cell in the DP table");
    return it->second;
  }
};

struct BaseCaseResult {
  int value = kInfeasible;
  VertexSet base_seeds;
};

struct TransitionResult {
  int value = kInfeasible;
  TransitionChoice choice;
};

namespace detail {

struct LayerContext {
  ThresholdedInstance local;  // induced on `vertices`, thresholds sliced
  VertexSet vertices;         // global ids, sorted; local id i <-> vertices[i]
  std::vector<int> to_local;  // global -> local, -1 outside
};

inline LayerContext make_context(const ThresholdedInstance& inst, const VertexSet& vertices) {
  LayerContext ctx;
  ctx.vertices = vertices;
  ctx.to_local.assign(inst.graph.order(), -1);
  std::vector<int> tau_local(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    ctx.to_local[vertices[i]] = static_cast<int>(i);
    tau_local[i] = inst.tau[vertices[i]];
  }
  ctx.local = ThresholdedInstance(induced_subgraph(inst.graph, vertices), std::move(tau_local),
                                  inst.t);
  return ctx;
}

inline std::vector<int> to_local_list(const LayerContext& ctx, const std::vector<int>& global) {
  std::vector<int> out;
  out.reserve(global.size());
  for (int v : global) {
    int l = ctx.to_local[v];
    if (l < 0) throw input_error("vertex outside the layer");
    out.push_back(l);
  }
  return out;
}

inline VertexSet to_global_set(const LayerContext& ctx, const VertexSet& local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(ctx.vertices[v]);
  return as_vertex_set(std::move(out));
}

// Number of neighbors of `v` inside the hull of `seeds`, both within the
// layer subgraph with `removed` deleted.
inline int help_from_inside(const LayerContext& ctx, std::vector<char>& allowed,
                            const std::vector<int>& removed, const VertexSet& seeds, int v) {
  for (int r : removed) allowed[r] = 0;
  VertexSet closure = hull_in(ctx.local, allowed, seeds);
  for (int r : removed) allowed[r] = 1;
  int count = 0;
  for (int w : ctx.local.graph.neighbors(v))
    if (set_contains(closure, w)) ++count;
  return count;
}

// Subsets of `pool` (sorted local ids) with at most max_size elements, in
// ascending bitmask order over the pool positions.
inline std::vector<VertexSet> bounded_subsets_mask_order(const VertexSet& pool, int max_size) {
  std::vector<VertexSet> subsets{{}};
  std::vector<int> pick;
  auto gen = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      subsets.emplace_back(pick.begin(), pick.end());
      self(self, static_cast<int>(i) + 1, remaining - 1);
      pick.pop_back();
    }
  };
  gen(gen, 0, std::min<int>(max_size, static_cast<int>(pool.size())));
  std::sort(subsets.begin(), subsets.end(), [](const VertexSet& a, const VertexSet& b) {
    int ia = static_cast<int>(a.size()) - 1, ib = static_cast<int>(b.size()) - 1;
    while (ia >= 0 && ib >= 0) {
      if (a[ia] != b[ib]) return a[ia] < b[ib];
      --ia;
      --ib;
    }
    return ia < ib;
  });
  return subsets;
}

inline void check_cascade_shape(const Decomposition& dec, const LocalCascade& lc) {
  if (lc.layer < 1 || lc.layer > static_cast<int>(dec.layers.size()))
    throw input_error("local cascade layer out of range");
  if (lc.boundary_set() != dec.layers[lc.layer - 1].boundary)
    throw input_error("local cascade does not match the layer boundary");
  if (lc.seed_count < 0 || lc.seed_count > static_cast<int>(lc.order.size()))
    throw input_error("local cascade seed count out of range");
  if (lc.help.size() != lc.order.size() - static_cast<std::size_t>(lc.seed_count))
    throw input_error("local cascade help vector has the wrong length");
  for (int h : lc.help)
    if (h < 0) throw input_error("negative help value");
}

inline BaseCaseResult base_case_impl(const Decomposition& dec, const LayerContext& ctx,
                                     const LocalCascade& lc) {
  const int p = static_cast<int>(lc.order.size());
  std::vector<int> order_loc = to_local_list(ctx, lc.order);
  VertexSet boundary_loc = as_vertex_set(order_loc);
  VertexSet all_loc(ctx.vertices.size());
  for (std::size_t i = 0; i < all_loc.size(); ++i) all_loc[i] = static_cast<int>(i);
  VertexSet pool = set_difference_of(all_loc, boundary_loc);

  // Vertices that cannot activate inside this layer must be seeds.
  VertexSet mandatory = set_difference_of(forced_vertices(ctx.local), boundary_loc);
  VertexSet optional_pool = set_difference_of(pool, mandatory);

  const int max_extra = dec.t - lc.seed_count - static_cast<int>(mandatory.size());
  if (max_extra < 0) return {kInfeasible, {}};

  std::vector<char> allowed(ctx.vertices.size(), 1);
  auto feasible = [&](const VertexSet& chosen) {
    VertexSet with_boundary = set_union_of(boundary_loc, chosen);
    if (!is_dynamic_monopoly(ctx.local, with_boundary)) return false;
    for (int q = lc.seed_count; q < p; ++q) {
      int v = order_loc[q];
      std::vector<int> removed(order_loc.begin() + q, order_loc.end());
      VertexSet seeds = set_union_of(
          as_vertex_set({order_loc.begin(), order_loc.begin() + q}), chosen);
      int got = help_from_inside(ctx, allowed, removed, seeds, v);
      if (got < ctx.local.tau[v] - lc.help[q - lc.seed_count]) return false;
    }
    return true;
  };

  std::vector<int> pick;
  VertexSet found;
  bool done = false;
  auto search = [&](auto&& self, int start, int remaining) -> void {
    if (done) return;
    if (remaining == 0) {
      VertexSet chosen = set_union_of(mandatory, as_vertex_set(pick));
      if (feasible(chosen)) {
        found = chosen;
        done = true;
      }
      return;
    }
    for (std::size_t i = start; i < optional_pool.size() && !done; ++i) {
      pick.push_back(optional_pool[i]);
      self(self, static_cast<int>(i) + 1, remaining - 1);
      pick.pop_back();
    }
  };
  for (int extra = 0; extra <= std::min<int>(max_extra, optional_pool.size()) && !done;
       ++extra) {
    if (extra == 0) {
      VertexSet chosen = mandatory;
      if (feasible(chosen)) {
        found = chosen;
        done = true;
      }
    } else {
      search(search, 0, extra);
    }
  }
  if (!done) return {kInfeasible, {}};
  return {static_cast<int>(found.size()), to_global_set(ctx, found)};
}

inline TransitionResult transition_impl(const ThresholdedInstance& inst,
                                        const Decomposition& dec, const LayerContext& ctx,
                                        const LocalCascade& lc, const DPTable& prev,
                                        bool cap_help_at_threshold) {
  const int i = lc.layer;
  const int n = inst.graph.order();
  const Layer& layer = dec.layers[i - 1];
  const VertexSet& boundary = layer.boundary;
  const VertexSet& prev_boundary = dec.layers[i - 2].boundary;

  VertexSet staying = set_intersection_of(boundary, prev_boundary);
  VertexSet leaving = set_difference_of(prev_boundary, boundary);
  VertexSet seeds_i = lc.seeds();
  VertexSet staying_seeds = set_intersection_of(seeds_i, prev_boundary);
  VertexSet band_pool =
      set_difference_of(layer.slice, set_union_of(boundary, prev_boundary));

  const int budget = dec.t - lc.seed_count;
  if (budget < 0) return {kInfeasible, {}};

  auto cap_of = [&](int v) {
    return cap_help_at_threshold ? std::clamp(inst.tau[v], 0, n) : n;
  };
  std::vector<int> help_i(n, -1);
  for (int q = lc.seed_count; q < static_cast<int>(lc.order.size()); ++q)
    help_i[lc.order[q]] = lc.help[q - lc.seed_count];

  VertexSet joint = set_union_of(boundary, prev_boundary);
  const int p = static_cast<int>(joint.size());
  std::vector<char> in_curr(n, 0), in_prev(n, 0);
  for (int v : boundary) in_curr[v] = 1;
  for (int v : prev_boundary) in_prev[v] = 1;

  VertexSet band_pool_loc = to_local_list(ctx, band_pool);
  std::sort(band_pool_loc.begin(), band_pool_loc.end());
  std::vector<VertexSet> band_choices = bounded_subsets_mask_order(band_pool_loc, budget);
  VertexSet boundary_union_loc = as_vertex_set(to_local_list(ctx, joint));

  std::vector<char> allowed(ctx.vertices.size(), 1);
  std::map<VertexSet, bool> monopoly_memo;
  auto covers_slice = [&](const VertexSet& band_loc) {
    auto it = monopoly_memo.find(band_loc);
    if (it != monopoly_memo.end()) return it->second;
    bool ok = is_dynamic_monopoly(ctx.local, set_union_of(boundary_union_loc, band_loc));
    monopoly_memo.emplace(band_loc, ok);
    return ok;
  };

  TransitionResult best;
  const int leaving_bits = static_cast<int>(leaving.size());
  for (unsigned lmask = 0; lmask < (1u << leaving_bits); ++lmask) {
    VertexSet exiting_seeds;
    for (int bit = 0; bit < leaving_bits; ++bit)
      if (lmask & (1u << bit)) exiting_seeds.push_back(leaving[bit]);
    if (static_cast<int>(exiting_seeds.size()) > budget) continue;

    VertexSet prefix_seeds = set_union_of(seeds_i, exiting_seeds);
    VertexSet prev_seeds = set_union_of(staying_seeds, exiting_seeds);

    for (const VertexSet& band_loc : band_choices) {
      if (static_cast<int>(exiting_seeds.size() + band_loc.size()) > budget) continue;

      std::vector<int> perm = joint;  // sorted start; next_permutation covers all, in order
      do {
        // The permutation must extend the layer order and start with the seeds.
        {
          std::size_t at = 0;
          bool ok = true;
          for (int v : perm)
            if (in_curr[v]) {
              if (lc.order[at++] != v) {
                ok = false;
                break;
              }
            }
          if (!ok || at != lc.order.size()) continue;
          for (std::size_t pos = 0; pos < prefix_seeds.size(); ++pos)
            if (!set_contains(prefix_seeds, perm[pos])) {
              ok = false;
              break;
            }
          if (!ok) continue;
        }

        int f = kInfeasible;
        if (covers_slice(band_loc)) {
          std::vector<int> perm_loc = to_local_list(ctx, perm);
          std::vector<int> total_help(p, 0);  // hull neighbors, any origin
          std::vector<int> fresh_help(p, 0);  // hull neighbors outside the previous layer
          bool ok = true;
          for (int j = 0; j < p && ok; ++j) {
            int v = perm[j];
            if (set_contains(prefix_seeds, v)) continue;
            std::vector<int> removed(perm_loc.begin() + j, perm_loc.end());
            VertexSet hull_seeds = set_union_of(
                as_vertex_set({perm_loc.begin(), perm_loc.begin() + j}), band_loc);
            for (int r : removed) allowed[r] = 0;
            VertexSet closure = hull_in(ctx.local, allowed, hull_seeds);
            for (int r : removed) allowed[r] = 1;
            for (int w : ctx.local.graph.neighbors(perm_loc[j])) {
              if (!set_contains(closure, w)) continue;
              ++total_help[j];
              // Neighbors in the previous boundary are counted again by the
              // previous layer as ordinary earlier neighbors; only the rest is
              // help from outside that layer.
              if (!in_prev[ctx.vertices[w]]) ++fresh_help[j];
            }
            if (in_curr[v] && !in_prev[v] && total_help[j] < inst.tau[v] - help_i[v])
              ok = false;  // a fresh boundary vertex cannot reach its threshold
          }
          if (ok) {
            // Assemble the predecessor cell: restrict the order to the previous
            // boundary and fold the inside help into its help values.
            std::vector<int> prev_order;
            std::vector<int> prev_help;
            for (int j = 0; j < p; ++j) {
              int v = perm[j];
              if (!in_prev[v]) continue;
              prev_order.push_back(v);
              if (set_contains(prev_seeds, v)) continue;
              int carried = in_curr[v] ? help_i[v] : 0;
              prev_help.push_back(std::min(cap_of(v), carried + fresh_help[j]));
            }
            const int prev_seed_count = static_cast<int>(prev_seeds.size());
            for (int pos = 0; pos < prev_seed_count; ++pos)
              if (!set_contains(prev_seeds, prev_order[pos]))
                throw std::logic_error("predecessor seeds are not an order prefix");
            auto it = prev.index.find({prev_order, prev_seed_count, prev_help});
            if (it == prev.index.end())
              throw std::logic_error("predecessor cell missing from the DP table");
            f = value_plus(static_cast<int>(band_loc.size() + exiting_seeds.size()),
                           prev.cells[it->second].value);
            if (f < best.value) {
              best.value = f;
              best.choice = {{},
                             exiting_seeds,
                             to_global_set(ctx, band_loc),
                             perm,
                             it->second};
            }
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return best;
}

}  // namespace detail

// Minimum number of extra seeds below the first boundary compatible with the
// given local cascade; the witness is the lexicographically least optimum.
inline BaseCaseResult base_case(const ThresholdedInstance& inst, const Decomposition& dec,
                                const LocalCascade& lc) {
  detail::check_cascade_shape(dec, lc);
  if (lc.layer != 1) throw input_error("base_case expects a layer-1 cascade");
  detail::LayerContext ctx = detail::make_context(inst, dec.layers[0].prefix);
  return detail::base_case_impl(dec, ctx, lc);
}

inline TransitionResult transition(const ThresholdedInstance& inst, const Decomposition& dec,
                                   const LocalCascade& lc, const DPTable& prev,
                                   bool cap_help_at_threshold = true) {
  detail::check_cascade_shape(dec, lc);
  if (lc.layer < 2) throw input_error("transition expects a layer above 1");
  if (prev.layer != lc.layer - 1) throw input_error("previous table is for the wrong layer");
  detail::LayerContext ctx = detail::make_context(inst, dec.layers[lc.layer - 1].slice);
  return detail::transition_impl(inst, dec, ctx, lc, prev, cap_help_at_threshold);
}

inline std::vector<DPTable> build_tables(const ThresholdedInstance& inst,
                                         const Decomposition& dec,
                                         bool cap_help_at_threshold = true) {
  const int n = inst.graph.order();
  std::vector<DPTable> tables;
  tables.reserve(dec.layers.size());
  for (int layer = 1; layer <= static_cast<int>(dec.layers.size()); ++layer) {
    DPTable table;
    table.layer = layer;
    table.cascades = enumerate_local_cascades(dec.layers[layer - 1].boundary, n, inst.tau,
                                              layer, cap_help_at_threshold);
    table.cells.resize(table.cascades.size());
    detail::LayerContext ctx = detail::make_context(
        inst, layer == 1 ? dec.layers[0].prefix : dec.layers[layer - 1].slice);
    for (std::size_t c = 0; c < table.cascades.size(); ++c) {
      const LocalCascade& lc = table.cascades[c];
      if (layer == 1) {
        BaseCaseResult r = detail::base_case_impl(dec, ctx, lc);
        table.cells[c].value = r.value;
        table.cells[c].back.base_seeds = r.base_seeds;
      } else {
        TransitionResult r = detail::transition_impl(inst, dec, ctx, lc, tables.back(),
                                                     cap_help_at_threshold);
        table.cells[c] = {r.value, r.choice};
      }
      table.index.emplace(DPTable::key_of(lc), static_cast<int>(c));
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

// Direct evaluation of one DP cell from its definition: search interior seed
// sets by increasing size and check, via a search over placement orders, that
// a compatible activation order exists. Independent of the base-case and
// transition machinery; intended as a test oracle on tiny layers.
inline int definition_level_dyn(const ThresholdedInstance& inst, const Decomposition& dec,
                                const LocalCascade& lc) {
  detail::check_cascade_shape(dec, lc);
  const Layer& layer = dec.layers[lc.layer - 1];
  const int m = static_cast<int>(layer.prefix.size());
  if (m > 12) throw budget_error("definition_level_dyn: layer larger than 12 vertices");

  detail::LayerContext ctx = detail::make_context(inst, layer.prefix);
  std::vector<std::uint32_t> adj(m, 0);
  for (int v = 0; v < m; ++v)
    for (int w : ctx.local.graph.neighbors(v)) adj[v] |= 1u << w;

  std::vector<int> order_loc = detail::to_local_list(ctx, lc.order);
  std::vector<char> in_boundary(m, 0);
  std::vector<std::uint32_t> before_in_order(m, 0);
  std::vector<int> help_of(m, 0);
  std::uint32_t earlier = 0;
  for (std::size_t q = 0; q < order_loc.size(); ++q) {
    int v = order_loc[q];
    in_boundary[v] = 1;
    before_in_order[v] = earlier;
    earlier |= 1u << v;
    if (static_cast<int>(q) >= lc.seed_count)
      help_of[v] = lc.help[q - lc.seed_count];
  }
  std::uint32_t x_mask = 0;
  for (int q = 0; q < lc.seed_count; ++q) x_mask |= 1u << order_loc[q];

  VertexSet pool;
  for (int v = 0; v < m; ++v)
    if (!in_boundary[v]) pool.push_back(v);

  VertexSet x_global = lc.seeds();
  const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
  std::vector<int> stamp(std::size_t{1} << m, -1);
  int generation = 0;

  auto order_exists = [&](std::uint32_t seed_mask) {
    ++generation;
    std::vector<std::uint32_t> stack{0};
    stamp[0] = generation;
    while (!stack.empty()) {
      std::uint32_t mask = stack.back();
      stack.pop_back();
      if (mask == full) return true;
      bool seeds_done = (mask & seed_mask) == seed_mask;
      for (int v = 0; v < m; ++v) {
        if (mask & (1u << v)) continue;
        if (in_boundary[v] && (mask & before_in_order[v]) != before_in_order[v]) continue;
        bool is_seed = (seed_mask >> v) & 1u;
        if (!is_seed) {
          if (!seeds_done) continue;
          int need = ctx.local.tau[v];
          if (in_boundary[v] && !((x_mask >> v) & 1u)) need -= help_of[v];
          if (std::popcount(adj[v] & mask) < need) continue;
        }
        std::uint32_t next = mask | (1u << v);
        if (stamp[next] != generation) {
          stamp[next] = generation;
          stack.push_back(next);
        }
      }
    }
    return false;
  };

  auto within_slice_bounds = [&](const VertexSet& chosen_global) {
    VertexSet seeds_global = set_union_of(x_global, chosen_global);
    for (int j = 1; j <= lc.layer; ++j) {
      if (static_cast<int>(
              set_intersection_of(seeds_global, dec.layers[j - 1].slice).size()) > dec.t)
        return false;
    }
    return true;
  };

  std::vector<int> pick;
  auto try_chosen = [&](const std::vector<int>& chosen) {
    VertexSet chosen_global = detail::to_global_set(ctx, as_vertex_set(chosen));
    if (!within_slice_bounds(chosen_global)) return false;
    std::uint32_t seed_mask = x_mask;
    for (int v : chosen) seed_mask |= 1u << v;
    return order_exists(seed_mask);
  };
  auto search = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) return try_chosen(pick);
    for (std::size_t i = start; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      if (self(self, static_cast<int>(i) + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= static_cast<int>(pool.size()); ++size) {
    if (search(search, 0, size)) return size;
  }
  return kInfeasible;
}

struct SolveResult {
  int size = 0;
  VertexSet monopoly;
};

struct ComponentProblem {
  ThresholdedInstance instance;
  NormalizedRepresentation rep;
  Decomposition decomposition;
  VertexSet global_ids;
};

inline std::vector<ComponentProblem> split_into_components(const ThresholdedInstance& inst,
                                                           const IntervalRepresentation& rep) {
  if (rep.names != inst.graph.names())
    throw input_error("representation names do not match the instance");
  detail::check_representation(rep.names, rep.intervals);
  std::vector<ComponentProblem> out;
  for (const VertexSet& comp : connected_components(inst.graph)) {
    ComponentProblem problem;
    problem.global_ids = comp;
    IntervalRepresentation sub;
    std::vector<int> tau;
    for (int v : comp) {
      sub.names.push_back(inst.graph.name(v));
      sub.intervals.push_back(rep.intervals[v]);
      tau.push_back(inst.tau[v]);
    }
    problem.rep = normalize(sub);
    problem.instance =
        ThresholdedInstance(induced_subgraph(inst.graph, comp), std::move(tau), inst.t);
    problem.decomposition =
        compute_decomposition(compute_cut_structure(problem.rep), inst.t);
    out.push_back(std::move(problem));
  }
  return out;
}

namespace detail {

// Reads the final answer off the last table and unrolls backpointers into a
// witness seed set, all in component-local vertex ids.
inline SolveResult combine_and_reconstruct(const Decomposition& dec,
                                           const std::vector<DPTable>& tables) {
  const DPTable& last = tables.back();
  const VertexSet& final_boundary = dec.layers.back().boundary;
  if (final_boundary.size() != 1)
    throw std::logic_error("final layer boundary is not a single vertex");
  int anchor = final_boundary[0];
  int without = last.cells[last.index.at({{anchor}, 0, {0}})].value;
  int with = value_plus(1, last.cells[last.index.at({{anchor}, 1, {}})].value);

  SolveResult result;
  int cell;
  if (without <= with) {
    result.size = without;
    cell = last.index.at({{anchor}, 0, {0}});
  } else {
    result.size = with;
    result.monopoly.push_back(anchor);
    cell = last.index.at({{anchor}, 1, {}});
  }
  if (result.size == kInfeasible)
    throw std::logic_error("no feasible seed set found; thresholds exceed the bound?");

  std::vector<int> picked = result.monopoly;
  for (int layer = static_cast<int>(tables.size()); layer >= 2; --layer) {
    const TransitionChoice& back = tables[layer - 1].cells[cell].back;
    picked.insert(picked.end(), back.exiting_seeds.begin(), back.exiting_seeds.end());
    picked.insert(picked.end(), back.band_seeds.begin(), back.band_seeds.end());
    cell = back.predecessor;
    if (cell < 0) throw std::logic_error("feasible cell without a predecessor");
  }
  const VertexSet& base = tables[0].cells[cell].back.base_seeds;
  picked.insert(picked.end(), base.begin(), base.end());
  result.monopoly = as_vertex_set(std::move(picked));
  if (static_cast<int>(result.monopoly.size()) != result.size)
    throw std::logic_error("witness size disagrees with the DP value");
  return result;
}

}  // namespace detail

// Exact minimum dynamic monopoly of an interval instance, with a witness of
// exactly that size. Disconnected inputs are solved per component and summed.
inline SolveResult solve(const ThresholdedInstance& inst, const IntervalRepresentation& rep) {
  if (rep.names != inst.graph.names())
    throw input_error("representation names do not match the instance");
  if (!(realize_graph(normalize(rep)) == inst.graph))
    throw input_error("representation does not realize the instance graph");
  for (int v = 0; v < inst.graph.order(); ++v)
    if (inst.tau[v] > inst.t)
      throw bound_error("threshold of '" + inst.graph.name(v) + "' exceeds the bound t");
  if (inst.t == 0) return {0, {}};  // every threshold is <= 0, the empty set floods

  SolveResult total;
  for (const ComponentProblem& comp : split_into_components(inst, rep)) {
    std::vector<DPTable> tables = build_tables(comp.instance, comp.decomposition);
    SolveResult local = detail::combine_and_reconstruct(comp.decomposition, tables);
    total.size += local.size;
    for (int v : local.monopoly) total.monopoly.push_back(comp.global_ids[v]);
  }
  total.monopoly = as_vertex_set(std::move(total.monopoly));
  return total;
}

}  // namespace dynmono
