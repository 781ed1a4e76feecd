#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "simident/graph.hpp"

namespace simident {

/// Directed edges known to hold in the true DAG (the set E of background
/// knowledge). Endpoints must exist in the target graph and no pair may
/// appear in both orientations.
struct BackgroundKnowledge {
  std::vector<Edge> edges;
};

/**
 * A strictly acyclic MPDAG: no semi-directed cycles, no induced
 * I -> J -- K with I, K non-adjacent, and a fixed point of the orientation
 * rules. Constructed only through validate_sa_mpdag.
 */
class SaMpdag {
 public:
  const PDGraph& graph() const { return graph_; }
  const std::optional<BackgroundKnowledge>& provenance() const { return provenance_; }

 private:
  friend SaMpdag validate_sa_mpdag(PDGraph g, std::optional<BackgroundKnowledge> bk);
  SaMpdag(PDGraph g, std::optional<BackgroundKnowledge> bk)
      : graph_(std::move(g)), provenance_(std::move(bk)) {}

  PDGraph graph_;
  std::optional<BackgroundKnowledge> provenance_;
};

/**
 * Orients the background edges in g and applies the four orientation rules
 * to a fixed point. Rules are applied in batches computed on a frozen
 * snapshot, so a pass that concludes both u -> v and v -> u is reported as
 * a contradiction instead of being masked by application order; a final
 * audit rejects closures that manufacture an unshielded collider absent
 * from the input.
 *
 * Throws on: bk conflicting with g (reverse edge present, non-adjacent
 * pair, internal double orientation) and on derived contradictions.
 */
PDGraph meek_close(const PDGraph& g, const BackgroundKnowledge& bk);

/// Checks the three SA-MPDAG invariants in order and reports the first
/// violation with a witness (a cycle or an I,J,K triple).
SaMpdag validate_sa_mpdag(PDGraph g, std::optional<BackgroundKnowledge> bk = std::nullopt);

inline constexpr std::size_t kDefaultExtensionCap = 1u << 20;

/**
 * All DAGs represented by the SA-MPDAG: every orientation of the
 * undirected edges that creates no directed cycle and no new unshielded
 * collider. Deterministic canonical order; throws if the count would
 * exceed max_extensions rather than truncating.
 */
std::vector<PDGraph> enumerate_extensions(const SaMpdag& g,
                                          std::size_t max_extensions = kDefaultExtensionCap);

/// CPDAG of the Markov equivalence class of a fully directed acyclic graph
/// (skeleton + v-structures, then orientation-rule closure).
PDGraph cpdag_of(const PDGraph& dag);

/// Triples (i, k, j) with i -> k <- j, i < j, i and j non-adjacent; sorted.
std::vector<std::tuple<NodeId, NodeId, NodeId>> unshielded_colliders(const PDGraph& g);

}  // namespace simident
