#include "simident/generators.hpp"

#include <algorithm>
#include <numeric>

namespace simident {

PDGraph random_dag(const std::vector<NodeId>& nodes, double edge_prob, std::mt19937_64& rng) {
  std::vector<NodeId> order = nodes;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution flip(edge_prob);
  PDGraph g(nodes);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (flip(rng)) g.add_directed_edge(order[i], order[j]);
  return g;
}

namespace {

SaMpdag refine_with_random_bk(const PDGraph& cpdag, std::mt19937_64& rng, double bk_prob) {
  std::bernoulli_distribution want_bk(bk_prob);
  if (!want_bk(rng) || cpdag.undirected_edge_count() == 0)
    return validate_sa_mpdag(cpdag);
  auto extensions = enumerate_extensions(validate_sa_mpdag(cpdag));
  std::uniform_int_distribution<std::size_t> pick(0, extensions.size() - 1);
  std::bernoulli_distribution keep(0.5);
  for (int attempt = 0; attempt < 20; ++attempt) {
    const PDGraph& ext = extensions[pick(rng)];
    BackgroundKnowledge bk;
    for (const auto& [t, h] : ext.directed_edges())
      if (cpdag.has_undirected_edge(t, h) && keep(rng)) bk.edges.push_back({t, h});
    if (bk.edges.empty()) return validate_sa_mpdag(cpdag);
    PDGraph closed = meek_close(cpdag, bk);
    if (has_semi_directed_cycle(closed)) continue;  // MPDAG but not strictly acyclic
    return validate_sa_mpdag(closed, bk);
  }
  return validate_sa_mpdag(cpdag);
}

}  // namespace

SaMpdag random_sa_mpdag(const std::vector<NodeId>& nodes, std::mt19937_64& rng, double edge_prob,
                        double bk_prob) {
  PDGraph cpdag = cpdag_of(random_dag(nodes, edge_prob, rng));
  return refine_with_random_bk(cpdag, rng, bk_prob);
}

CandidateSet random_candidate_set(const std::vector<NodeId>& nodes, std::size_t count,
                                  std::mt19937_64& rng, double edge_prob) {
  PDGraph cpdag = cpdag_of(random_dag(nodes, edge_prob, rng));
  std::vector<SaMpdag> graphs;
  for (std::size_t i = 0; i < count; ++i) graphs.push_back(refine_with_random_bk(cpdag, rng, 0.7));
  return CandidateSet(std::move(graphs));
}

std::vector<VariableSpec> uniform_cardinality_vars(const std::vector<NodeId>& nodes,
                                                   std::size_t arity) {
  std::vector<VariableSpec> vars;
  for (const auto& n : nodes) vars.push_back({n, arity, {}});
  return vars;
}

DiscreteDistribution<double> random_positive_density(const std::vector<VariableSpec>& vars,
                                                     const PDGraph& dag, std::mt19937_64& rng) {
  if (!dag.fully_directed())
    throw std::invalid_argument("random_positive_density: graph has undirected edges");
  NodeSet names;
  for (const auto& v : vars) names.insert(v.name);
  if (names != dag.node_set())
    throw std::invalid_argument("random_positive_density: variables and nodes differ");

  const std::size_t n = vars.size();
  auto strides = detail::strides_for(vars);
  std::map<NodeId, std::size_t> var_index;
  for (std::size_t i = 0; i < n; ++i) var_index[vars[i].name] = i;

  // Per node: parent index list and a Dirichlet(1) conditional table.
  std::exponential_distribution<double> gamma1(1.0);
  std::vector<std::vector<std::size_t>> parent_idx(n);
  std::vector<std::vector<double>> tables(n);
  std::vector<std::size_t> parent_size(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& pa : parents(dag, NodeSet{vars[i].name}))
      parent_idx[i].push_back(var_index.at(pa));
    std::sort(parent_idx[i].begin(), parent_idx[i].end());
    for (std::size_t k : parent_idx[i]) parent_size[i] *= vars[k].cardinality;
    tables[i].resize(parent_size[i] * vars[i].cardinality);
    for (std::size_t cfg = 0; cfg < parent_size[i]; ++cfg) {
      double total = 0.0;
      for (std::size_t s = 0; s < vars[i].cardinality; ++s) {
        double w = gamma1(rng) + 1e-3;  // bounded away from 0
        tables[i][cfg * vars[i].cardinality + s] = w;
        total += w;
      }
      for (std::size_t s = 0; s < vars[i].cardinality; ++s)
        tables[i][cfg * vars[i].cardinality + s] /= total;
    }
  }

  std::size_t size = detail::table_size_for(vars);
  std::vector<double> probs(size);
  Assignment a(n);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<int>(rem / strides[i]);
      rem %= strides[i];
    }
    double v = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t cfg = 0;
      for (std::size_t k : parent_idx[i])
        cfg = cfg * vars[k].cardinality + static_cast<std::size_t>(a[k]);
      v *= tables[i][cfg * vars[i].cardinality + static_cast<std::size_t>(a[i])];
    }
    probs[idx] = v;
  }
  // Compensate float drift so the constructor's 1e-12 check always holds.
  double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (auto& v : probs) v /= total;
  return DiscreteDistribution<double>(vars, std::move(probs));
}

}  // namespace simident
