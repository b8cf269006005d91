#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynmono/graph.hpp"
#include "dynmono/rng.hpp"

namespace testutil {

// Path a-b-c-... with the given thresholds.
inline dynmono::ThresholdedInstance path_instance(const std::vector<int>& tau,
                                                  std::optional<int> t = std::nullopt) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < tau.size(); ++i) names.push_back(std::string(1, 'a' + i));
  dynmono::Graph g(names);
  for (std::size_t i = 0; i + 1 < tau.size(); ++i)
    g.add_edge(static_cast<int>(i), static_cast<int>(i) + 1);
  return dynmono::ThresholdedInstance(std::move(g), tau, t);
}

inline dynmono::Graph complete_graph(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  dynmono::Graph g(names);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline dynmono::Graph cycle_graph(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  dynmono::Graph g(names);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline dynmono::Graph random_graph(dynmono::Rng& rng, int n, int edge_percent) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  dynmono::Graph g(std::move(names));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(100) < edge_percent) g.add_edge(u, v);
  return g;
}

inline dynmono::VertexSet random_subset(dynmono::Rng& rng, int n, int member_percent) {
  dynmono::VertexSet out;
  for (int v = 0; v < n; ++v)
    if (rng.below(100) < member_percent) out.push_back(v);
  return out;
}

// One maximal sequence of legal activations in random order; the fixpoint must
// not depend on the order taken.
inline dynmono::VertexSet random_closure(const dynmono::ThresholdedInstance& inst,
                                         const dynmono::VertexSet& seed, dynmono::Rng& rng) {
  const int n = inst.graph.order();
  std::vector<char> active(n, 0);
  std::vector<int> gained(n, 0);
  for (int v : seed) active[v] = 1;
  for (int v : seed)
    for (int w : inst.graph.neighbors(v))
      if (!active[w]) ++gained[w];
  for (;;) {
    std::vector<int> eligible;
    for (int v = 0; v < n; ++v)
      if (!active[v] && gained[v] >= inst.tau[v]) eligible.push_back(v);
    if (eligible.empty()) break;
    int v = eligible[rng.below(static_cast<int>(eligible.size()))];
    active[v] = 1;
    for (int w : inst.graph.neighbors(v))
      if (!active[w]) ++gained[w];
  }
  dynmono::VertexSet out;
  for (int v = 0; v < n; ++v)
    if (active[v]) out.push_back(v);
  return out;
}

}  // namespace testutil
