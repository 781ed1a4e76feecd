#include "simident/mpdag.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace simident {

namespace {

// Directed path from `from` to `to` using directed edges only.
bool directed_reaches(const PDGraph& g, int from, int to) {
  if (from == to) return true;
  std::vector<char> seen(g.node_count(), 0);
  std::deque<int> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.children_at(v)) {
      if (w == to) return true;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

/*
 * Orientation rules, each concluding x -> y for a currently undirected
 * edge x -- y:
 *   R1:  z -> x -- y, z and y non-adjacent
 *   R2:  x -> z -> y, x -- y
 *   R3:  x -- z -> y, x -- w -> y, z != w, z and w non-adjacent
 *   R4:  x -- z, z -> w -> y, z and y non-adjacent
 * R4 is stated without the optional x,w adjacency guard: either
 * orientation of x -- z under y -> x yields a directed cycle or a new
 * unshielded collider, so x -> y is forced regardless.
 */
bool rule_concludes(const PDGraph& g, int x, int y) {
  for (int z : g.parents_at(x)) {
    if (!g.adjacent_at(z, y)) return true;  // R1
  }
  for (int z : g.children_at(x)) {
    if (g.children_at(z).count(y)) return true;  // R2
  }
  const auto& nx = g.neighbors_at(x);
  std::vector<int> into_y;
  for (int z : nx)
    if (g.children_at(z).count(y)) into_y.push_back(z);
  for (std::size_t i = 0; i < into_y.size(); ++i)
    for (std::size_t j = i + 1; j < into_y.size(); ++j)
      if (!g.adjacent_at(into_y[i], into_y[j])) return true;  // R3
  for (int z : nx) {
    if (g.adjacent_at(z, y)) continue;
    for (int w : g.children_at(z)) {
      if (g.children_at(w).count(y)) return true;  // R4
    }
  }
  return false;
}

std::vector<std::pair<int, int>> rule_batch(const PDGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : g.undirected_edges()) {
    int i = g.index_of(a), j = g.index_of(b);
    if (rule_concludes(g, i, j)) out.emplace_back(i, j);
    if (rule_concludes(g, j, i)) out.emplace_back(j, i);
  }
  return out;
}

void check_no_new_colliders(const PDGraph& input, const PDGraph& closed, const char* who) {
  for (const auto& [i, k, j] : unshielded_colliders(closed)) {
    if (!(input.has_directed_edge(i, k) && input.has_directed_edge(j, k)))
      throw std::runtime_error(std::string(who) + ": orientation forces a new unshielded collider " +
                               i + " -> " + k + " <- " + j);
  }
}

}  // namespace

PDGraph meek_close(const PDGraph& g, const BackgroundKnowledge& bk) {
  // Validate and apply the background edges first.
  std::set<std::pair<NodeId, NodeId>> bk_pairs;
  for (const auto& [t, h] : bk.edges) {
    g.index_or_throw(t, "meek_close");
    g.index_or_throw(h, "meek_close");
    if (bk_pairs.count({h, t}))
      throw std::runtime_error("background knowledge contains both '" + t + " -> " + h +
                               "' and its reverse");
    bk_pairs.insert({t, h});
  }
  PDGraph h = g;
  for (const auto& [t, hd] : bk.edges) {
    if (h.has_directed_edge(t, hd)) continue;
    if (h.has_directed_edge(hd, t))
      throw std::runtime_error("background edge '" + t + " -> " + hd +
                               "' conflicts with existing '" + hd + " -> " + t + "'");
    if (h.has_undirected_edge(t, hd)) {
      h.orient_undirected(t, hd);
    } else {
      throw std::runtime_error("background edge '" + t + " -> " + hd +
                               "' has no corresponding adjacency in the graph");
    }
  }

  while (true) {
    auto batch = rule_batch(h);
    if (batch.empty()) break;
    std::set<std::pair<int, int>> batch_set(batch.begin(), batch.end());
    for (const auto& [x, y] : batch) {
      if (batch_set.count({y, x}))
        throw std::runtime_error("orientation rules derive both '" + h.name_of(x) + " -> " +
                                 h.name_of(y) + "' and its reverse (inconsistent background "
                                 "knowledge)");
    }
    for (const auto& [x, y] : batch) h.orient_undirected(h.name_of(x), h.name_of(y));
  }

  check_no_new_colliders(g, h, "meek_close");
  return h;
}

SaMpdag validate_sa_mpdag(PDGraph g, std::optional<BackgroundKnowledge> bk) {
  if (auto cycle = find_semi_directed_cycle(g)) {
    std::ostringstream os;
    os << "not an SA-MPDAG: semi-directed cycle";
    for (const auto& n : *cycle) os << ' ' << n;
    throw std::runtime_error(os.str());
  }
  for (const auto& [i, j] : g.directed_edges()) {
    for (int kn : g.neighbors_at(g.index_of(j))) {
      const NodeId& k = g.name_of(kn);
      if (k != i && !g.adjacent(i, k))
        throw std::runtime_error("not an SA-MPDAG: pattern " + i + " -> " + j + " -- " + k +
                                 " with " + i + ", " + k + " non-adjacent");
    }
  }
  if (meek_close(g, {}) != g)
    throw std::runtime_error("not an SA-MPDAG: graph is not closed under the orientation rules");
  if (bk) {
    for (const auto& [t, h] : bk->edges) {
      if (!g.has_directed_edge(t, h))
        throw std::runtime_error("background edge '" + t + " -> " + h +
                                 "' is not a directed edge of the graph");
    }
  }
  return SaMpdag(std::move(g), std::move(bk));
}

namespace {

// Orients tail -> head if that neither closes a directed cycle nor creates
// an unshielded collider at head; returns false when impossible.
bool try_orient(PDGraph& h, int tail, int head) {
  if (directed_reaches(h, head, tail)) return false;
  for (int c : h.parents_at(head)) {
    if (c != tail && !h.adjacent_at(c, tail)) return false;
  }
  h.orient_undirected(h.name_of(tail), h.name_of(head));
  return true;
}

// R1/R2 propagation after a choice; cheap and sound, the full checks above
// still guard every forced orientation.
bool propagate(PDGraph& h) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : h.undirected_edges()) {
      int i = h.index_of(a), j = h.index_of(b);
      auto forced = [&](int x, int y) {
        for (int z : h.parents_at(x))
          if (!h.adjacent_at(z, y)) return true;
        for (int z : h.children_at(x))
          if (h.children_at(z).count(y)) return true;
        return false;
      };
      bool fij = forced(i, j), fji = forced(j, i);
      if (fij && fji) return false;
      if (fij || fji) {
        if (!try_orient(h, fij ? i : j, fij ? j : i)) return false;
        changed = true;
        break;
      }
    }
  }
  return true;
}

void extend_all(const PDGraph& h, std::vector<PDGraph>& out, std::size_t cap) {
  auto undirected = h.undirected_edges();
  if (undirected.empty()) {
    if (out.size() >= cap)
      throw std::runtime_error("extension enumeration exceeded the cap of " +
                               std::to_string(cap));
    out.push_back(h);
    return;
  }
  const auto& [a, b] = undirected.front();
  for (const auto& [t, hd] : {Edge{a, b}, Edge{b, a}}) {
    PDGraph next = h;
    if (!try_orient(next, next.index_of(t), next.index_of(hd))) continue;
    if (!propagate(next)) continue;
    extend_all(next, out, cap);
  }
}

}  // namespace

std::vector<PDGraph> enumerate_extensions(const SaMpdag& g, std::size_t max_extensions) {
  std::vector<PDGraph> out;
  extend_all(g.graph(), out, max_extensions);
  if (out.empty())
    throw std::runtime_error("no consistent extension found (graph is not a valid SA-MPDAG)");
  std::sort(out.begin(), out.end(), [](const PDGraph& x, const PDGraph& y) {
    return canonical_serialization(x) < canonical_serialization(y);
  });
  return out;
}

std::vector<std::tuple<NodeId, NodeId, NodeId>> unshielded_colliders(const PDGraph& g) {
  std::vector<std::tuple<NodeId, NodeId, NodeId>> out;
  for (const auto& k : g.nodes()) {
    const auto& pa = g.parents_at(g.index_of(k));
    for (auto it = pa.begin(); it != pa.end(); ++it) {
      for (auto jt = std::next(it); jt != pa.end(); ++jt) {
        if (!g.adjacent_at(*it, *jt)) {
          NodeId i = g.name_of(*it), j = g.name_of(*jt);
          if (j < i) std::swap(i, j);
          out.emplace_back(i, k, j);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PDGraph cpdag_of(const PDGraph& dag) {
  if (!dag.fully_directed()) throw std::invalid_argument("cpdag_of: input has undirected edges");
  if (has_semi_directed_cycle(dag)) throw std::invalid_argument("cpdag_of: input is not acyclic");

  PDGraph pattern(dag.nodes());
  std::set<Edge> keep;
  for (const auto& [i, k, j] : unshielded_colliders(dag)) {
    keep.insert({i, k});
    keep.insert({j, k});
  }
  for (const auto& [t, h] : dag.directed_edges()) {
    if (keep.count({t, h}))
      pattern.add_directed_edge(t, h);
    else
      pattern.add_undirected_edge(t, h);
  }
  return meek_close(pattern, {});
}

}  // namespace simident
