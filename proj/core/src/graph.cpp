#include "simident/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace simident {

namespace {

bool valid_name(const NodeId& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
  }
  return true;
}

}  // namespace

PDGraph::PDGraph(const std::vector<NodeId>& nodes) {
  for (const auto& n : nodes) add_node(n);
}

void PDGraph::add_node(const NodeId& name) {
  if (!valid_name(name))
    throw std::invalid_argument("invalid node name '" + name + "' (empty, whitespace or '#')");
  if (index_.count(name)) throw std::invalid_argument("duplicate node '" + name + "'");
  index_[name] = static_cast<int>(names_.size());
  names_.push_back(name);
  parents_.emplace_back();
  children_.emplace_back();
  neighbors_.emplace_back();
}

int PDGraph::index_of(const NodeId& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown node '" + name + "'");
  return it->second;
}

int PDGraph::index_or_throw(const NodeId& name, const char* what) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw std::invalid_argument(std::string(what) + ": unknown node '" + name + "'");
  return it->second;
}

bool PDGraph::has_node(const NodeId& name) const { return index_.count(name) != 0; }

void PDGraph::check_addable(int a, int b, const NodeId& na, const NodeId& nb) const {
  if (a == b) throw std::invalid_argument("self-loop at node '" + na + "'");
  if (adjacent_at(a, b))
    throw std::invalid_argument("conflicting edge: '" + na + "' and '" + nb +
                                "' are already linked");
}

void PDGraph::add_directed_edge(const NodeId& tail, const NodeId& head) {
  int t = index_of(tail), h = index_of(head);
  check_addable(t, h, tail, head);
  children_[static_cast<std::size_t>(t)].insert(h);
  parents_[static_cast<std::size_t>(h)].insert(t);
  ++n_directed_;
}

void PDGraph::add_undirected_edge(const NodeId& a, const NodeId& b) {
  int i = index_of(a), j = index_of(b);
  check_addable(i, j, a, b);
  neighbors_[static_cast<std::size_t>(i)].insert(j);
  neighbors_[static_cast<std::size_t>(j)].insert(i);
  ++n_undirected_;
}

void PDGraph::orient_undirected(const NodeId& tail, const NodeId& head) {
  int t = index_of(tail), h = index_of(head);
  if (!neighbors_[static_cast<std::size_t>(t)].count(h))
    throw std::invalid_argument("no undirected edge '" + tail + " -- " + head + "' to orient");
  neighbors_[static_cast<std::size_t>(t)].erase(h);
  neighbors_[static_cast<std::size_t>(h)].erase(t);
  --n_undirected_;
  children_[static_cast<std::size_t>(t)].insert(h);
  parents_[static_cast<std::size_t>(h)].insert(t);
  ++n_directed_;
}

void PDGraph::remove_directed_edge(const NodeId& tail, const NodeId& head) {
  int t = index_of(tail), h = index_of(head);
  if (!children_[static_cast<std::size_t>(t)].count(h))
    throw std::invalid_argument("no directed edge '" + tail + " -> " + head + "' to remove");
  children_[static_cast<std::size_t>(t)].erase(h);
  parents_[static_cast<std::size_t>(h)].erase(t);
  --n_directed_;
}

bool PDGraph::has_directed_edge(const NodeId& tail, const NodeId& head) const {
  if (!has_node(tail) || !has_node(head)) return false;
  return children_[static_cast<std::size_t>(index_.at(tail))].count(index_.at(head)) != 0;
}

bool PDGraph::has_undirected_edge(const NodeId& a, const NodeId& b) const {
  if (!has_node(a) || !has_node(b)) return false;
  return neighbors_[static_cast<std::size_t>(index_.at(a))].count(index_.at(b)) != 0;
}

bool PDGraph::adjacent(const NodeId& a, const NodeId& b) const {
  if (!has_node(a) || !has_node(b)) return false;
  return adjacent_at(index_.at(a), index_.at(b));
}

bool PDGraph::adjacent_at(int a, int b) const {
  const auto ua = static_cast<std::size_t>(a);
  return children_[ua].count(b) || parents_[ua].count(b) || neighbors_[ua].count(b);
}

NodeSet PDGraph::node_set() const { return NodeSet(names_.begin(), names_.end()); }

std::vector<Edge> PDGraph::directed_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (int c : children_[i]) out.emplace_back(names_[i], names_[static_cast<std::size_t>(c)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> PDGraph::undirected_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (int n : neighbors_[i]) {
      const auto& a = names_[i];
      const auto& b = names_[static_cast<std::size_t>(n)];
      if (a < b) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const PDGraph& a, const PDGraph& b) {
  return a.node_set() == b.node_set() && a.directed_edges() == b.directed_edges() &&
         a.undirected_edges() == b.undirected_edges();
}

namespace {

std::vector<int> to_indices(const PDGraph& g, const NodeSet& d, const char* what) {
  std::vector<int> out;
  out.reserve(d.size());
  for (const auto& name : d) out.push_back(g.index_or_throw(name, what));
  return out;
}

}  // namespace

NodeSet parents(const PDGraph& g, const NodeSet& d) {
  NodeSet out;
  for (int i : to_indices(g, d, "parents"))
    for (int p : g.parents_at(i)) out.insert(g.name_of(p));
  return out;
}

NodeSet ancestors(const PDGraph& g, const NodeSet& d) {
  std::vector<char> seen(g.node_count(), 0);
  std::deque<int> queue;
  for (int i : to_indices(g, d, "ancestors")) {
    seen[static_cast<std::size_t>(i)] = 1;
    queue.push_back(i);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int p : g.parents_at(v)) {
      if (!seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = 1;
        queue.push_back(p);
      }
    }
  }
  NodeSet out;
  for (std::size_t i = 0; i < g.node_count(); ++i)
    if (seen[i]) out.insert(g.name_of(static_cast<int>(i)));
  return out;
}

PDGraph induced_subgraph(const PDGraph& g, const NodeSet& d) {
  to_indices(g, d, "induced_subgraph");  // membership check
  std::vector<NodeId> kept;
  for (const auto& n : g.nodes())
    if (d.count(n)) kept.push_back(n);
  PDGraph out(kept);
  for (const auto& [t, h] : g.directed_edges())
    if (d.count(t) && d.count(h)) out.add_directed_edge(t, h);
  for (const auto& [a, b] : g.undirected_edges())
    if (d.count(a) && d.count(b)) out.add_undirected_edge(a, b);
  return out;
}

std::vector<NodeSet> undirected_components(const PDGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors_at(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  std::vector<NodeSet> out(static_cast<std::size_t>(next));
  for (std::size_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(comp[i])].insert(g.name_of(static_cast<int>(i)));
  return out;
}

namespace {

std::string cycle_to_string(const std::vector<NodeId>& cycle) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) os << " .. ";
    os << cycle[i];
  }
  return os.str();
}

// Undirected path between two nodes of one chain component.
std::vector<int> undirected_path(const PDGraph& g, int from, int to) {
  std::vector<int> prev(g.node_count(), -2);
  prev[static_cast<std::size_t>(from)] = -1;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : g.neighbors_at(v)) {
      if (prev[static_cast<std::size_t>(w)] == -2) {
        prev[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = prev[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;  // empty front if unreachable; callers guarantee same component
}

struct Quotient {
  std::vector<int> comp_of;         // node index -> component id
  std::vector<NodeSet> components;  // by component id
  std::vector<std::set<int>> succ;  // quotient digraph (may have cycles)
  std::map<std::pair<int, int>, std::pair<int, int>> rep_edge;  // (ca,cb) -> node edge
};

Quotient build_quotient(const PDGraph& g) {
  Quotient q;
  q.components = undirected_components(g);
  q.comp_of.assign(g.node_count(), -1);
  for (std::size_t c = 0; c < q.components.size(); ++c)
    for (const auto& name : q.components[c]) q.comp_of[static_cast<std::size_t>(g.index_of(name))] = static_cast<int>(c);
  q.succ.assign(q.components.size(), {});
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    for (int c : g.children_at(static_cast<int>(v))) {
      int cv = q.comp_of[v], cc = q.comp_of[static_cast<std::size_t>(c)];
      if (cv != cc) {
        q.succ[static_cast<std::size_t>(cv)].insert(cc);
        q.rep_edge.emplace(std::make_pair(cv, cc), std::make_pair(static_cast<int>(v), c));
      }
    }
  }
  return q;
}

}  // namespace

std::optional<std::vector<NodeId>> find_semi_directed_cycle(const PDGraph& g) {
  // A directed edge inside one undirected component closes a cycle directly.
  Quotient q = build_quotient(g);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    for (int c : g.children_at(static_cast<int>(v))) {
      if (q.comp_of[v] == q.comp_of[static_cast<std::size_t>(c)]) {
        auto back = undirected_path(g, c, static_cast<int>(v));
        std::vector<NodeId> cycle;
        cycle.push_back(g.name_of(static_cast<int>(v)));
        for (int w : back) cycle.push_back(g.name_of(w));
        return cycle;
      }
    }
  }
  // Otherwise: a cycle in the quotient digraph. Iterative DFS with colors.
  const int m = static_cast<int>(q.components.size());
  std::vector<int> color(static_cast<std::size_t>(m), 0);  // 0 white, 1 gray, 2 black
  for (int s = 0; s < m; ++s) {
    if (color[static_cast<std::size_t>(s)]) continue;
    std::vector<std::pair<int, std::set<int>::const_iterator>> stack;
    color[static_cast<std::size_t>(s)] = 1;
    stack.emplace_back(s, q.succ[static_cast<std::size_t>(s)].begin());
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      if (it == q.succ[static_cast<std::size_t>(v)].end()) {
        color[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
        continue;
      }
      int w = *it;
      ++it;
      if (color[static_cast<std::size_t>(w)] == 1) {
        // Found component cycle w -> ... -> v -> w; expand to node names.
        std::vector<int> comp_cycle;
        for (auto r = stack.rbegin(); r != stack.rend(); ++r) {
          comp_cycle.push_back(r->first);
          if (r->first == w) break;
        }
        std::reverse(comp_cycle.begin(), comp_cycle.end());  // w ... v
        comp_cycle.push_back(w);
        std::vector<NodeId> cycle;
        int entry = -1;  // node where we entered the current component
        for (std::size_t i = 0; i + 1 < comp_cycle.size(); ++i) {
          auto edge = q.rep_edge.at({comp_cycle[i], comp_cycle[i + 1]});
          if (entry < 0) {
            cycle.push_back(g.name_of(edge.first));
          } else if (entry != edge.first) {
            auto within = undirected_path(g, entry, edge.first);
            for (std::size_t k = 1; k < within.size(); ++k) cycle.push_back(g.name_of(within[k]));
          }
          cycle.push_back(g.name_of(edge.second));
          entry = edge.second;
        }
        int first_idx = g.index_of(cycle.front());
        if (entry != first_idx) {
          // Close through the first component back to the entry node.
          auto within = undirected_path(g, entry, first_idx);
          for (std::size_t k = 1; k < within.size(); ++k) cycle.push_back(g.name_of(within[k]));
        }
        return cycle;
      }
      if (color[static_cast<std::size_t>(w)] == 0) {
        color[static_cast<std::size_t>(w)] = 1;
        stack.emplace_back(w, q.succ[static_cast<std::size_t>(w)].begin());
      }
    }
  }
  return std::nullopt;
}

bool has_semi_directed_cycle(const PDGraph& g) { return find_semi_directed_cycle(g).has_value(); }

ChainPartition chain_components(const PDGraph& g) {
  if (auto cycle = find_semi_directed_cycle(g))
    throw std::runtime_error("graph has a semi-directed cycle: " + cycle_to_string(*cycle));
  Quotient q = build_quotient(g);
  const std::size_t m = q.components.size();
  std::vector<int> indeg(m, 0);
  for (std::size_t c = 0; c < m; ++c)
    for (int s : q.succ[c]) ++indeg[static_cast<std::size_t>(s)];
  // Kahn with the smallest contained node name as priority.
  auto key = [&](int c) { return *q.components[static_cast<std::size_t>(c)].begin(); };
  auto cmp = [&](int a, int b) { return key(a) > key(b); };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (std::size_t c = 0; c < m; ++c)
    if (indeg[c] == 0) ready.push(static_cast<int>(c));
  ChainPartition out;
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    out.components.push_back(q.components[static_cast<std::size_t>(c)]);
    for (int s : q.succ[static_cast<std::size_t>(c)])
      if (--indeg[static_cast<std::size_t>(s)] == 0) ready.push(s);
  }
  return out;
}

std::vector<NodeSet> chain_decomposition(const PDGraph& g, const NodeSet& d) {
  to_indices(g, d, "chain_decomposition");
  std::vector<NodeSet> out;
  for (const auto& comp : chain_components(g).components) {
    NodeSet inter;
    for (const auto& n : comp)
      if (d.count(n)) inter.insert(n);
    if (!inter.empty()) out.push_back(std::move(inter));
  }
  return out;
}

NodeSet containing_component(const PDGraph& g, const NodeSet& di) {
  if (di.empty()) throw std::invalid_argument("containing_component: empty node set");
  to_indices(g, di, "containing_component");
  for (const auto& comp : undirected_components(g)) {
    if (comp.count(*di.begin())) {
      for (const auto& n : di)
        if (!comp.count(n))
          throw std::invalid_argument("containing_component: nodes '" + *di.begin() + "' and '" +
                                      n + "' lie in different chain components");
      return comp;
    }
  }
  throw std::logic_error("containing_component: unreachable");
}

bool exists_blocking_path(const PDGraph& g, const NodeSet& x, const NodeSet& y) {
  for (const auto& n : x)
    if (y.count(n))
      throw std::invalid_argument("exists_blocking_path: sets overlap at node '" + n + "'");
  auto xi = to_indices(g, x, "exists_blocking_path");
  auto yi = to_indices(g, y, "exists_blocking_path");
  std::vector<char> in_x(g.node_count(), 0), in_y(g.node_count(), 0);
  for (int i : xi) in_x[static_cast<std::size_t>(i)] = 1;
  for (int i : yi) in_y[static_cast<std::size_t>(i)] = 1;

  // First step: undirected edge to a non-x node. Afterwards plain
  // semi-directed reachability through non-x nodes.
  std::vector<char> seen(g.node_count(), 0);
  std::deque<int> queue;
  for (int i : xi) {
    for (int w : g.neighbors_at(i)) {
      if (in_x[static_cast<std::size_t>(w)]) continue;
      if (in_y[static_cast<std::size_t>(w)]) return true;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    auto visit = [&](int w) -> bool {
      if (in_x[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) return false;
      if (in_y[static_cast<std::size_t>(w)]) return true;
      seen[static_cast<std::size_t>(w)] = 1;
      queue.push_back(w);
      return false;
    };
    for (int w : g.neighbors_at(v))
      if (visit(w)) return true;
    for (int w : g.children_at(v))
      if (visit(w)) return true;
  }
  return false;
}

PDGraph skeleton(const PDGraph& g) {
  PDGraph out(g.nodes());
  for (const auto& [t, h] : g.directed_edges()) out.add_undirected_edge(t, h);
  for (const auto& [a, b] : g.undirected_edges()) out.add_undirected_edge(a, b);
  return out;
}

std::string canonical_serialization(const PDGraph& g) {
  std::ostringstream os;
  auto ns = g.node_set();
  os << "nodes";
  for (const auto& n : ns) os << ' ' << n;
  os << '\n';
  for (const auto& [t, h] : g.directed_edges()) os << t << " -> " << h << '\n';
  for (const auto& [a, b] : g.undirected_edges()) os << a << " -- " << b << '\n';
  return os.str();
}

}  // namespace simident
