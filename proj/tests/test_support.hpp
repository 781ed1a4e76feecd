#pragma once

// Fixtures and small independent oracles used across the test suites. The
// oracles deliberately avoid the library's own algorithms: ancestors via a
// reverse breadth-first search, components via union-find, path existence
// via exhaustive simple-path enumeration, extension sets via filtering all
// 2^k orientations.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "simident/graph.hpp"
#include "simident/mpdag.hpp"

namespace testsupport {

using simident::Edge;
using simident::NodeId;
using simident::NodeSet;
using simident::PDGraph;

inline PDGraph make_graph(const std::vector<NodeId>& nodes, const std::vector<Edge>& directed,
                          const std::vector<Edge>& undirected) {
  PDGraph g(nodes);
  for (const auto& [t, h] : directed) g.add_directed_edge(t, h);
  for (const auto& [a, b] : undirected) g.add_undirected_edge(a, b);
  return g;
}

// figure-1 fixtures: G1 has 1->4, 2->4, 3->4 and 1 -- 2; G2 is fully directed.
inline PDGraph fig1_g1() {
  return make_graph({"1", "2", "3", "4"}, {{"1", "4"}, {"2", "4"}, {"3", "4"}}, {{"1", "2"}});
}
inline PDGraph fig1_g2() {
  return make_graph({"1", "2", "3", "4"}, {{"1", "4"}, {"3", "4"}, {"4", "2"}, {"1", "2"}}, {});
}

// figure-2 fixtures: G1 has 1->4, 3->4, 4->5, 1->5 and 1 -- 2, 3 -- 2; G2 is fully
// directed with a different skeleton.
inline PDGraph fig2_g1() {
  return make_graph({"1", "2", "3", "4", "5"},
                    {{"1", "4"}, {"3", "4"}, {"4", "5"}, {"1", "5"}}, {{"1", "2"}, {"3", "2"}});
}
inline PDGraph fig2_g2() {
  return make_graph({"1", "2", "3", "4", "5"},
                    {{"1", "4"}, {"1", "2"}, {"3", "2"}, {"4", "5"}, {"1", "5"}}, {});
}

// --- independent oracles ----------------------------------------------------

inline NodeSet ancestors_oracle(const PDGraph& g, const NodeSet& d) {
  NodeSet out = d;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [t, h] : g.directed_edges()) {
      if (out.count(h) && !out.count(t)) {
        out.insert(t);
        grew = true;
      }
    }
  }
  return out;
}

inline std::vector<NodeSet> components_oracle(const PDGraph& g) {
  std::map<NodeId, NodeId> up;
  for (const auto& n : g.nodes()) up[n] = n;
  std::function<NodeId(NodeId)> find = [&](NodeId v) {
    while (up[v] != v) v = up[v] = up[up[v]];
    return v;
  };
  for (const auto& [a, b] : g.undirected_edges()) up[find(a)] = find(b);
  std::map<NodeId, NodeSet> groups;
  for (const auto& n : g.nodes()) groups[find(n)].insert(n);
  std::vector<NodeSet> out;
  for (auto& [root, s] : groups) out.push_back(s);
  return out;
}

// Exhaustive simple-path search for "proper semi-directed path from x to y
// starting with an undirected edge".
inline bool blocking_path_oracle(const PDGraph& g, const NodeSet& x, const NodeSet& y) {
  std::function<bool(const NodeId&, NodeSet&)> walk = [&](const NodeId& at,
                                                          NodeSet& visited) -> bool {
    if (y.count(at)) return true;
    int ai = g.index_of(at);
    std::vector<NodeId> next;
    for (int w : g.neighbors_at(ai)) next.push_back(g.name_of(w));
    for (int w : g.children_at(ai)) next.push_back(g.name_of(w));
    for (const auto& n : next) {
      if (x.count(n) || visited.count(n)) continue;
      visited.insert(n);
      if (walk(n, visited)) return true;
      visited.erase(n);
    }
    return false;
  };
  for (const auto& start : x) {
    for (int w : g.neighbors_at(g.index_of(start))) {
      NodeId first = g.name_of(w);
      if (x.count(first)) continue;
      if (y.count(first)) return true;
      NodeSet visited{first};
      if (walk(first, visited)) return true;
    }
  }
  return false;
}

// All DAG extensions by definition: every orientation of the undirected
// edges that keeps acyclicity and adds no unshielded collider.
inline std::vector<PDGraph> extensions_oracle(const PDGraph& g) {
  auto base_colliders = simident::unshielded_colliders(g);
  auto undirected = g.undirected_edges();
  std::vector<PDGraph> out;
  for (std::size_t mask = 0; mask < (1u << undirected.size()); ++mask) {
    PDGraph d = g;
    for (std::size_t k = 0; k < undirected.size(); ++k) {
      const auto& [a, b] = undirected[k];
      if (mask & (1u << k))
        d.orient_undirected(a, b);
      else
        d.orient_undirected(b, a);
    }
    if (simident::has_semi_directed_cycle(d)) continue;
    if (simident::unshielded_colliders(d) != base_colliders) continue;
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const PDGraph& x, const PDGraph& y) {
    return simident::canonical_serialization(x) < simident::canonical_serialization(y);
  });
  return out;
}

// Maximal orientation by definition: the edge-wise intersection of all
// skeleton orientations that are acyclic, share the reference DAG's
// unshielded colliders and contain the background edges.
inline PDGraph meek_oracle(const PDGraph& reference_dag,
                           const std::vector<Edge>& bk) {
  auto base_colliders = simident::unshielded_colliders(reference_dag);
  auto edges = reference_dag.directed_edges();
  std::vector<PDGraph> members;
  for (std::size_t mask = 0; mask < (1u << edges.size()); ++mask) {
    PDGraph d(reference_dag.nodes());
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (mask & (1u << k))
        d.add_directed_edge(edges[k].first, edges[k].second);
      else
        d.add_directed_edge(edges[k].second, edges[k].first);
    }
    if (simident::has_semi_directed_cycle(d)) continue;
    if (simident::unshielded_colliders(d) != base_colliders) continue;
    bool has_bk = true;
    for (const auto& [t, h] : bk)
      if (!d.has_directed_edge(t, h)) has_bk = false;
    if (has_bk) members.push_back(std::move(d));
  }
  PDGraph out(reference_dag.nodes());
  for (const auto& [t, h] : edges) {
    bool always_fwd = true, always_bwd = true;
    for (const auto& m : members) {
      if (!m.has_directed_edge(t, h)) always_fwd = false;
      if (!m.has_directed_edge(h, t)) always_bwd = false;
    }
    if (always_fwd)
      out.add_directed_edge(t, h);
    else if (always_bwd)
      out.add_directed_edge(h, t);
    else
      out.add_undirected_edge(t, h);
  }
  return out;
}

// Random chain graph: forward directed edges between randomly ordered
// undirected clusters; strictly acyclic by construction.
inline PDGraph random_chain_graph(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeId> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("v" + std::to_string(i));
  std::shuffle(nodes.begin(), nodes.end(), rng);
  std::uniform_int_distribution<std::size_t> cluster_size(1, 3);
  std::vector<std::vector<NodeId>> clusters;
  for (std::size_t at = 0; at < n;) {
    std::size_t len = std::min(cluster_size(rng), n - at);
    clusters.emplace_back(nodes.begin() + static_cast<long>(at),
                          nodes.begin() + static_cast<long>(at + len));
    at += len;
  }
  PDGraph g(std::vector<NodeId>(nodes.begin(), nodes.end()));
  std::bernoulli_distribution extra(0.3), forward(0.35);
  for (const auto& c : clusters) {
    for (std::size_t i = 1; i < c.size(); ++i) g.add_undirected_edge(c[i - 1], c[i]);  // spanning path
    for (std::size_t i = 0; i + 2 < c.size(); ++i)
      if (extra(rng)) g.add_undirected_edge(c[i], c[i + 2]);
  }
  for (std::size_t ci = 0; ci < clusters.size(); ++ci)
    for (std::size_t cj = ci + 1; cj < clusters.size(); ++cj)
      for (const auto& a : clusters[ci])
        for (const auto& b : clusters[cj])
          if (forward(rng)) g.add_directed_edge(a, b);
  return g;
}

}  // namespace testsupport
