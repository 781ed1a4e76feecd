#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simident/chain_markov.hpp"
#include "simident/graph.hpp"
#include "simident/mpdag.hpp"

namespace simident {

/// Treatment set X and outcome set Y. Both non-empty and disjoint;
/// membership in a concrete graph is checked by each operation.
class IdentQuery {
 public:
  IdentQuery(NodeSet x, NodeSet y);
  const NodeSet& x() const { return x_; }
  const NodeSet& y() const { return y_; }

 private:
  NodeSet x_, y_;
};

/// The candidate set, an ordered list of SA-MPDAGs over one shared node
/// set. List order is the user's order.
class CandidateSet {
 public:
  explicit CandidateSet(std::vector<SaMpdag> graphs);
  const std::vector<SaMpdag>& graphs() const { return graphs_; }
  std::size_t size() const { return graphs_.size(); }
  const SaMpdag& operator[](std::size_t i) const { return graphs_[i]; }

 private:
  std::vector<SaMpdag> graphs_;
};

struct FormulaBlock {
  NodeSet vars;     // B_j
  NodeSet parents;  // Pa(B_j) in the source graph; may include x nodes
};

/// Symbolic identification formula: sum over the integrand variables of
/// the product of block conditionals, with parent slots taking the
/// intervened values on x.
struct IdentFormula {
  std::size_t source_graph_index = 0;
  std::vector<FormulaBlock> blocks;  // chain decomposition order
  NodeSet integrand_vars;            // B = An_{G_{V\X}}(Y) \ Y
  NodeSet x, y;                      // the query this formula answers
};

struct PairResult {
  std::size_t i = 0, j = 0;
  bool cond2a = false;
  std::optional<bool> cond2b;  // unset when condition 1 fails for either graph
  bool satisfied() const { return cond2a || (cond2b && *cond2b); }
};

enum class Verdict { identifiable, not_determined };

struct IdentReport {
  std::vector<bool> condition1;           // per graph
  std::vector<NodeSet> a_sets;            // A_i = X ∩ An_{G_i}(Y)
  std::vector<PairResult> pairwise;       // all unordered pairs, i < j
  Verdict verdict = Verdict::not_determined;
  std::optional<IdentFormula> formula;    // from graphs[0] iff identifiable
  std::vector<IdentFormula> per_graph_formulas;  // iff identifiable
};

/**
 * Algorithm RM: delete the directed edges into X ∩ An(Y), then take the
 * induced subgraph over the ancestors of Y in the pruned graph.
 */
PDGraph rm(const SaMpdag& g, const IdentQuery& q);

/// Condition 1: no proper semi-directed path from x to y starting with an
/// undirected edge.
bool check_condition1(const SaMpdag& g, const IdentQuery& q);

/// Condition 2a: the chain-decomposition blocks of A_i have identical
/// parent sets in both graphs, and symmetrically for A_j.
bool check_condition2a(const SaMpdag& gi, const SaMpdag& gj, const IdentQuery& q);

/// Condition 2b: the two RM graphs are chain-graph Markov equivalent.
/// Unequal RM node sets count as not equivalent. Throws when condition 1
/// fails for either input.
bool check_condition2b(const SaMpdag& gi, const SaMpdag& gj, const IdentQuery& q);

/// Identification formula for one graph; throws when condition 1 fails.
IdentFormula build_formula(const SaMpdag& g, const IdentQuery& q);

/// The full criterion over a candidate set. Never answers "not
/// identifiable": failures yield not_determined (the criterion is
/// sufficient only).
IdentReport simultaneous_identify(const CandidateSet& gs, const IdentQuery& q);

namespace detail {
// Formula construction on raw sets; tolerates empty x (the g-formula with
// an empty intervention degenerates to a marginalisation).
IdentFormula build_formula_impl(const PDGraph& g, const NodeSet& x, const NodeSet& y,
                                std::size_t source_index);
}  // namespace detail

}  // namespace simident
