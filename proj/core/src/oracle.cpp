#include "simident/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "simident/generators.hpp"

namespace simident {

std::vector<PDGraph> represented_dags(const CandidateSet& gs) {
  std::map<std::string, PDGraph> dedup;
  for (const auto& g : gs.graphs()) {
    for (auto& dag : enumerate_extensions(g)) {
      std::string key = canonical_serialization(dag);
      dedup.emplace(std::move(key), std::move(dag));
    }
  }
  std::vector<PDGraph> out;
  for (auto& [key, dag] : dedup) out.push_back(std::move(dag));
  return out;
}

std::vector<PDGraph> enumerate_all_dags(const std::vector<NodeId>& nodes) {
  if (nodes.size() > 5)
    throw std::invalid_argument("enumerate_all_dags: guard allows at most 5 nodes, got " +
                                std::to_string(nodes.size()));
  std::vector<NodeId> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) pairs.emplace_back(i, j);

  std::vector<PDGraph> out;
  // Each unordered pair is absent (0), i->j (1) or j->i (2).
  std::vector<int> state(pairs.size(), 0);
  while (true) {
    PDGraph g(sorted);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (state[k] == 1) g.add_directed_edge(sorted[pairs[k].first], sorted[pairs[k].second]);
      if (state[k] == 2) g.add_directed_edge(sorted[pairs[k].second], sorted[pairs[k].first]);
    }
    if (!has_semi_directed_cycle(g)) out.push_back(std::move(g));
    std::size_t pos = 0;
    while (pos < state.size() && state[pos] == 2) state[pos++] = 0;
    if (pos == state.size()) break;
    ++state[pos];
  }
  return out;
}

DiscreteDistribution<Rational> example1_distribution() {
  auto bit_labels = [](std::size_t width) {
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < (1u << width); ++v) {
      std::string s(width, '0');
      for (std::size_t b = 0; b < width; ++b)
        if (v & (1u << (width - 1 - b))) s[b] = '1';
      labels.push_back(s);
    }
    return labels;
  };
  std::vector<std::string> x4_labels;
  for (int idx = 0; idx < 36; ++idx) {
    int s1 = idx / 12, s2 = (idx / 4) % 3, s3 = (idx / 2) % 2, s4 = idx % 2;
    x4_labels.push_back(std::to_string(s1) + std::to_string(s2) + std::to_string(s3) +
                        std::to_string(s4));
  }
  std::vector<VariableSpec> vars{{"1", 8, bit_labels(3)},
                                 {"2", 8, bit_labels(3)},
                                 {"3", 8, bit_labels(3)},
                                 {"4", 36, x4_labels}};

  // Each adjacency of the target skeleton carries noise the other
  // variables cannot reconstruct: phi1 links 1-2, phi2 links 1-4, phi3
  // links 2-4 and phi4, phi5 link 3-4. The component sums take values in
  // {0,1,2}, hence the 3x3x2x2 state space of variable 4.
  std::vector<Rational> probs(8 * 8 * 8 * 36, Rational(0));
  const Rational mass(1, 512);
  for (int noise = 0; noise < 512; ++noise) {
    int phi1 = (noise >> 8) & 1, phi2 = (noise >> 7) & 1, phi3 = (noise >> 6) & 1;
    int phi4 = (noise >> 5) & 1, phi5 = (noise >> 4) & 1;
    int eps1 = (noise >> 3) & 1, eps2 = (noise >> 2) & 1, eps3 = (noise >> 1) & 1;
    int eps4 = noise & 1;
    int x1 = phi1 * 4 + phi2 * 2 + eps1;              // X1 = (phi1, phi2, eps1)
    int x2 = phi1 * 4 + phi3 * 2 + eps2;              // X2 = (X1^1, phi3, eps2)
    int x3 = phi4 * 4 + phi5 * 2 + eps3;              // X3 = (phi4, phi5, eps3)
    int x4 = (phi2 + phi4) * 12 + (phi3 + phi5) * 4   // X4 = (X1^2+X3^1, X2^2+X3^2,
             + phi3 * 2 + eps4;                       //       X2^2, eps4)
    std::size_t idx =
        ((static_cast<std::size_t>(x1) * 8 + x2) * 8 + x3) * 36 + static_cast<std::size_t>(x4);
    probs[idx] += mass;
  }
  return DiscreteDistribution<Rational>(std::move(vars), std::move(probs));
}

PDGraph figure1_g1() {
  PDGraph g({"1", "2", "3", "4"});
  g.add_directed_edge("1", "4");
  g.add_directed_edge("2", "4");
  g.add_directed_edge("3", "4");
  g.add_undirected_edge("1", "2");
  return g;
}

PDGraph figure1_g2() {
  PDGraph g({"1", "2", "3", "4"});
  g.add_directed_edge("1", "4");
  g.add_directed_edge("3", "4");
  g.add_directed_edge("4", "2");
  g.add_directed_edge("1", "2");
  return g;
}

PDGraph figure2_g1() {
  PDGraph g({"1", "2", "3", "4", "5"});
  g.add_directed_edge("1", "4");
  g.add_directed_edge("3", "4");
  g.add_directed_edge("4", "5");
  g.add_directed_edge("1", "5");
  g.add_undirected_edge("1", "2");
  g.add_undirected_edge("3", "2");
  return g;
}

PDGraph figure2_g2() {
  PDGraph g({"1", "2", "3", "4", "5"});
  g.add_directed_edge("1", "4");
  g.add_directed_edge("1", "2");
  g.add_directed_edge("3", "2");
  g.add_directed_edge("4", "5");
  g.add_directed_edge("1", "5");
  return g;
}

std::optional<CounterexampleResult> counterexample_search(const CandidateSet& gs,
                                                          const IdentQuery& q, int arity,
                                                          int trials, unsigned long long seed,
                                                          double tol) {
  if (arity < 2) throw std::invalid_argument("counterexample_search: arity must be at least 2");
  auto report = simultaneous_identify(gs, q);
  if (report.verdict == Verdict::identifiable)
    throw std::invalid_argument(
        "counterexample_search: the candidate set satisfies the identification criterion; a "
        "counterexample would contradict soundness");

  std::mt19937_64 rng(seed);
  std::vector<NodeId> nodes = gs[0].graph().nodes();
  std::sort(nodes.begin(), nodes.end());
  auto vars = uniform_cardinality_vars(nodes, static_cast<std::size_t>(arity));
  auto extensions = enumerate_extensions(gs[0]);
  std::uniform_int_distribution<std::size_t> pick(0, extensions.size() - 1);

  std::vector<NodeId> x_names(q.x().begin(), q.x().end());
  const std::size_t grid = [&] {
    std::size_t n = 1;
    for (std::size_t i = 0; i < x_names.size(); ++i) n *= static_cast<std::size_t>(arity);
    return n;
  }();

  for (int trial = 0; trial < trials; ++trial) {
    auto p = random_positive_density(vars, extensions[pick(rng)], rng);
    bool compatible_with_all = true;
    for (const auto& g : gs.graphs()) {
      if (!is_compatible(p, g, tol)) {
        compatible_with_all = false;
        break;
      }
    }
    if (!compatible_with_all) continue;
    for (std::size_t cell = 0; cell < grid; ++cell) {
      ValueMap xa;
      std::size_t rem = cell;
      for (const auto& name : x_names) {
        xa[name] = static_cast<int>(rem % static_cast<std::size_t>(arity));
        rem /= static_cast<std::size_t>(arity);
      }
      auto verdict = brute_force_check(gs, p, q, xa, tol);
      if (!verdict.all_agree)
        return CounterexampleResult{std::move(p), std::move(verdict), std::move(xa), seed, trial};
    }
  }
  return std::nullopt;
}

}  // namespace simident
