#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace simident {

using NodeId = std::string;
using NodeSet = std::set<NodeId>;
using Edge = std::pair<NodeId, NodeId>;

/**
 * Mixed graph over named nodes with directed and undirected edges.
 * Covers DAGs, CPDAGs, MPDAGs and the outputs of the RM operation.
 *
 * Invariants: no self-loops, at most one edge (of either kind) per node
 * pair. Adding a second edge between an already-linked pair throws instead
 * of overwriting. After construction the graph is treated as an immutable
 * value; all algorithms below are pure functions returning new graphs.
 */
class PDGraph {
 public:
  PDGraph() = default;
  explicit PDGraph(const std::vector<NodeId>& nodes);

  void add_node(const NodeId& name);
  void add_directed_edge(const NodeId& tail, const NodeId& head);
  void add_undirected_edge(const NodeId& a, const NodeId& b);
  // Turns an existing undirected edge into tail -> head.
  void orient_undirected(const NodeId& tail, const NodeId& head);
  void remove_directed_edge(const NodeId& tail, const NodeId& head);

  std::size_t node_count() const { return names_.size(); }
  const std::vector<NodeId>& nodes() const { return names_; }
  NodeSet node_set() const;
  bool has_node(const NodeId& name) const;
  bool has_directed_edge(const NodeId& tail, const NodeId& head) const;
  bool has_undirected_edge(const NodeId& a, const NodeId& b) const;
  bool adjacent(const NodeId& a, const NodeId& b) const;

  std::size_t directed_edge_count() const { return n_directed_; }
  std::size_t undirected_edge_count() const { return n_undirected_; }
  std::size_t edge_count() const { return n_directed_ + n_undirected_; }
  bool fully_directed() const { return n_undirected_ == 0; }

  // Sorted lexicographically; undirected pairs are reported with first < second.
  std::vector<Edge> directed_edges() const;
  std::vector<Edge> undirected_edges() const;

  // Index-based access for algorithm internals.
  int index_of(const NodeId& name) const;  // throws on unknown node
  const NodeId& name_of(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::set<int>& parents_at(int i) const { return parents_[static_cast<std::size_t>(i)]; }
  const std::set<int>& children_at(int i) const { return children_[static_cast<std::size_t>(i)]; }
  const std::set<int>& neighbors_at(int i) const { return neighbors_[static_cast<std::size_t>(i)]; }
  bool adjacent_at(int a, int b) const;

  int index_or_throw(const NodeId& name, const char* what) const;

  friend bool operator==(const PDGraph& a, const PDGraph& b);
  friend bool operator!=(const PDGraph& a, const PDGraph& b) { return !(a == b); }

 private:
  std::vector<NodeId> names_;
  std::unordered_map<NodeId, int> index_;
  std::vector<std::set<int>> parents_;
  std::vector<std::set<int>> children_;
  std::vector<std::set<int>> neighbors_;
  std::size_t n_directed_ = 0;
  std::size_t n_undirected_ = 0;

  void check_addable(int a, int b, const NodeId& na, const NodeId& nb) const;
};

/// Chain components listed in a topological order of the quotient graph
/// (ties broken by the smallest contained node name).
struct ChainPartition {
  std::vector<NodeSet> components;
};

// Pa_G(D): tails of directed edges into D. Undirected neighbours excluded;
// the result may intersect D.
NodeSet parents(const PDGraph& g, const NodeSet& d);

// An_G(D): D plus every node with a fully directed path into D. Reflexive;
// undirected edges do not extend ancestry.
NodeSet ancestors(const PDGraph& g, const NodeSet& d);

PDGraph induced_subgraph(const PDGraph& g, const NodeSet& d);

// Connected components of the undirected-edge-only subgraph (no
// precondition), without the topological order.
std::vector<NodeSet> undirected_components(const PDGraph& g);

// Throws if g has a semi-directed cycle (the order would not exist); the
// message names one cycle.
ChainPartition chain_components(const PDGraph& g);

// The non-empty sets d ∩ τ_i in component order.
std::vector<NodeSet> chain_decomposition(const PDGraph& g, const NodeSet& d);

// The unique chain component containing di; error if di straddles several.
NodeSet containing_component(const PDGraph& g, const NodeSet& di);

bool has_semi_directed_cycle(const PDGraph& g);

// Witness cycle as a node sequence v0, ..., vk = v0, or nullopt.
std::optional<std::vector<NodeId>> find_semi_directed_cycle(const PDGraph& g);

/**
 * True iff a proper semi-directed path from x to y exists whose first edge
 * is undirected: start at some X in x, step over an undirected edge to a
 * non-x node, then continue over undirected or tail-to-head directed edges
 * through non-x nodes until y is hit.
 */
bool exists_blocking_path(const PDGraph& g, const NodeSet& x, const NodeSet& y);

PDGraph skeleton(const PDGraph& g);

// Byte-stable textual form (sorted node and edge lists); used for
// deduplication and deterministic ordering of graph collections.
std::string canonical_serialization(const PDGraph& g);

}  // namespace simident
