#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "simident/distribution.hpp"
#include "simident/identify.hpp"
#include "simident/numeric.hpp"

namespace simident {

/**
 * Ground-truth verdict: the interventional marginal over y computed by
 * truncated factorisation on every DAG represented by the candidate set,
 * compared pairwise. Deliberately independent of the criterion code path.
 */
template <class Num>
struct OracleVerdict {
  bool all_agree = true;
  std::vector<PDGraph> dags;  // deduplicated union of extensions, canonical order
  std::vector<InterventionalMarginal<Num>> marginals;  // aligned with dags
  struct Witness {
    std::size_t dag_i = 0, dag_j = 0;
    Assignment y_assignment;
    double difference = 0.0;
  };
  std::optional<Witness> witness;  // present iff all_agree == false
};

/// The deduplicated union of the extensions of every graph in gs.
std::vector<PDGraph> represented_dags(const CandidateSet& gs);

/// All labelled DAGs over the given nodes (guard: at most 5 nodes).
std::vector<PDGraph> enumerate_all_dags(const std::vector<NodeId>& nodes);

template <class Num>
OracleVerdict<Num> brute_force_check(const CandidateSet& gs, const DiscreteDistribution<Num>& p,
                                     const IdentQuery& q, const ValueMap& x_assignment,
                                     double tol = 1e-9) {
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Assignment violating;
    if (!is_compatible(p, gs[i], tol, /*exhaustive=*/false, &violating)) {
      std::string at;
      for (std::size_t k = 0; k < violating.size(); ++k)
        at += (k ? "," : "") + p.variables()[k].name + "=" +
              p.variables()[k].state_name(violating[k]);
      throw std::runtime_error("brute_force_check: density is not compatible with graph " +
                               std::to_string(i) + " (violated at " + at + ")");
    }
  }
  OracleVerdict<Num> out;
  out.dags = represented_dags(gs);
  for (const auto& dag : out.dags)
    out.marginals.push_back(marginalize(truncated_factorization(p, dag, x_assignment), q.y()));
  for (std::size_t i = 0; i < out.dags.size() && out.all_agree; ++i) {
    for (std::size_t j = i + 1; j < out.dags.size(); ++j) {
      bool same = true;
      std::size_t where = 0;
      for (std::size_t k = 0; k < out.marginals[i].values.size(); ++k) {
        if (!num_eq(out.marginals[i].values[k], out.marginals[j].values[k], tol)) {
          same = false;
          where = k;
          break;
        }
      }
      if (!same) {
        out.all_agree = false;
        typename OracleVerdict<Num>::Witness w;
        w.dag_i = i;
        w.dag_j = j;
        w.y_assignment = out.marginals[i].decode(where);
        w.difference = std::fabs(to_double(out.marginals[i].values[where]) -
                                 to_double(out.marginals[j].values[where]));
        out.witness = w;
        break;
      }
    }
  }
  return out;
}

/// The bundled example distribution: 512 equiprobable outcomes of nine
/// Bernoulli(1/2) noise bits mapped through fixed structural equations to
/// variables 1..3 (8 states each) and 4 (36 states). Its sparsest Markovian
/// classes are exactly the two figure1 CPDAGs.
DiscreteDistribution<Rational> example1_distribution();

// Bundled fixture graphs (node names "1".."5").
PDGraph figure1_g1();
PDGraph figure1_g2();
PDGraph figure2_g1();
PDGraph figure2_g2();

namespace detail {

template <class Num>
class ConditionalCache {
 public:
  explicit ConditionalCache(const DiscreteDistribution<Num>& p) : p_(&p) {}
  const Factor<Num>& get(const NodeId& target, const NodeSet& given) {
    auto key = std::make_pair(target, given);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, conditional(*p_, NodeSet{target}, given)).first;
    return it->second;
  }

 private:
  const DiscreteDistribution<Num>* p_;
  std::map<std::pair<NodeId, NodeSet>, Factor<Num>> cache_;
};

template <class Num>
bool is_markov_cached(const DiscreteDistribution<Num>& p, const PDGraph& dag,
                      ConditionalCache<Num>& cache, double tol) {
  std::vector<const Factor<Num>*> factors;
  for (const auto& v : p.variables())
    factors.push_back(&cache.get(v.name, parents(dag, NodeSet{v.name})));
  for (std::size_t idx = 0; idx < p.table_size(); ++idx) {
    Assignment a = p.decode(idx);
    Num prod = NumericConstants<Num>::one();
    bool undefined = false;
    for (const auto* f : factors) {
      std::size_t g = f->given_index(a);
      if (!f->defined_at(g)) {
        undefined = true;
        break;
      }
      prod *= f->value_at(f->target_index(a), g);
    }
    bool ok = undefined ? num_eq(p.prob(idx), NumericConstants<Num>::zero(), tol)
                        : num_eq(p.prob(idx), prod, tol);
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/**
 * Enumerates every labelled DAG over the node set, keeps the ones the
 * distribution is Markovian to, and maps the minimum-edge survivors to
 * their CPDAGs (deduplicated, canonical order).
 */
template <class Num>
std::vector<PDGraph> sparsest_cpdag_search(const DiscreteDistribution<Num>& p,
                                           const std::vector<NodeId>& nodes, double tol = 1e-9) {
  NodeSet node_set(nodes.begin(), nodes.end());
  if (p.variable_names() != node_set)
    throw std::invalid_argument("sparsest_cpdag_search: node list must match the variables");
  detail::ConditionalCache<Num> cache(p);
  std::vector<PDGraph> best;
  std::size_t best_edges = 0;
  for (const auto& dag : enumerate_all_dags(nodes)) {
    if (!best.empty() && dag.edge_count() > best_edges) continue;
    if (!detail::is_markov_cached(p, dag, cache, tol)) continue;
    if (best.empty() || dag.edge_count() < best_edges) {
      best.clear();
      best_edges = dag.edge_count();
    }
    best.push_back(dag);
  }
  std::map<std::string, PDGraph> dedup;
  for (const auto& dag : best) {
    PDGraph c = cpdag_of(dag);
    dedup.emplace(canonical_serialization(c), std::move(c));
  }
  std::vector<PDGraph> out;
  for (auto& [key, g] : dedup) out.push_back(std::move(g));
  return out;
}

struct CounterexampleResult {
  DiscreteDistribution<double> density;
  OracleVerdict<double> verdict;
  ValueMap x_assignment;
  unsigned long long seed = 0;  // the seed that produced the hit, for replay
  int trial = 0;
};

/**
 * Searches for a density witnessing non-identifiability of a candidate set
 * that FAILS the identification criterion (it is an error to call this on a
 * set that passes — a hit would contradict soundness). Samples densities
 * Markovian to a random extension of graphs[0], keeps those compatible with
 * every graph, and sweeps all arity^|x| treatment assignments.
 */
std::optional<CounterexampleResult> counterexample_search(const CandidateSet& gs,
                                                          const IdentQuery& q, int arity,
                                                          int trials, unsigned long long seed,
                                                          double tol = 1e-9);

}  // namespace simident
