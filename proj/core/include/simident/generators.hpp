#pragma once

#include <random>
#include <vector>

#include "simident/distribution.hpp"
#include "simident/identify.hpp"
#include "simident/mpdag.hpp"

namespace simident {

PDGraph random_dag(const std::vector<NodeId>& nodes, double edge_prob, std::mt19937_64& rng);

/// Random CPDAG refined by a random consistent set of background-knowledge
/// edges; retries on closures with semi-directed cycles and falls back to
/// the bare CPDAG.
SaMpdag random_sa_mpdag(const std::vector<NodeId>& nodes, std::mt19937_64& rng,
                        double edge_prob = 0.5, double bk_prob = 0.6);

/// Candidate set whose members share one Markov equivalence class but carry
/// different background knowledge, so densities Markovian to any class
/// member are compatible with every candidate.
CandidateSet random_candidate_set(const std::vector<NodeId>& nodes, std::size_t count,
                                  std::mt19937_64& rng, double edge_prob = 0.5);

std::vector<VariableSpec> uniform_cardinality_vars(const std::vector<NodeId>& nodes,
                                                   std::size_t arity);

/// Strictly positive density Markovian to the DAG by construction: every
/// conditional table drawn from a flat Dirichlet, then multiplied out.
DiscreteDistribution<double> random_positive_density(const std::vector<VariableSpec>& vars,
                                                     const PDGraph& dag, std::mt19937_64& rng);

}  // namespace simident
