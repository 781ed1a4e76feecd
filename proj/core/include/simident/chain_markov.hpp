#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simident/graph.hpp"

namespace simident {

/**
 * A minimal complex (I, C, J) in a chain graph: I and J non-adjacent,
 * C = C_1 -- ... -- C_k an induced undirected path inside one chain
 * component with I -> C_1 and J -> C_k, and no other adjacency between
 * {I, J} and C. For k = 1 this is an unshielded collider.
 */
struct MinimalComplex {
  NodeId left;                // I
  std::vector<NodeId> core;   // C_1 ... C_k, ordered from I's side
  NodeId right;               // J

  // Identity for set comparison: unordered endpoint pair + core as a set.
  friend bool operator==(const MinimalComplex& a, const MinimalComplex& b);
  std::string to_string() const;
};

struct EquivalenceVerdict {
  bool equivalent = false;
  std::optional<std::string> witness;  // present iff equivalent == false
};

/// All minimal complexes of a chain graph, deterministic order.
/// Throws if g has a semi-directed cycle.
std::vector<MinimalComplex> minimal_complexes(const PDGraph& g);

/// Markov equivalence of two chain graphs over the same node set: equal
/// skeletons and equal minimal-complex sets.
EquivalenceVerdict equivalent(const PDGraph& g1, const PDGraph& g2);

/// True iff every I -> J with J -- K implies I -> K (the structural
/// property RM outputs satisfy when condition 1 holds).
bool rm_pattern_check(const PDGraph& g);

}  // namespace simident
