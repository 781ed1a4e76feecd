#include "simident/identify.hpp"

#include <algorithm>
#include <stdexcept>

namespace simident {

namespace {

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

void check_query_in_graph(const PDGraph& g, const IdentQuery& q) {
  for (const auto& n : q.x()) g.index_or_throw(n, "query x");
  for (const auto& n : q.y()) g.index_or_throw(n, "query y");
}

}  // namespace

IdentQuery::IdentQuery(NodeSet x, NodeSet y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.empty()) throw std::invalid_argument("IdentQuery: empty treatment set x");
  if (y_.empty()) throw std::invalid_argument("IdentQuery: empty outcome set y");
  for (const auto& n : x_)
    if (y_.count(n)) throw std::invalid_argument("IdentQuery: x and y overlap at '" + n + "'");
}

CandidateSet::CandidateSet(std::vector<SaMpdag> graphs) : graphs_(std::move(graphs)) {
  if (graphs_.empty()) throw std::invalid_argument("CandidateSet: no graphs");
  const auto nodes = graphs_.front().graph().node_set();
  for (std::size_t i = 1; i < graphs_.size(); ++i) {
    if (graphs_[i].graph().node_set() != nodes)
      throw std::invalid_argument("CandidateSet: graph " + std::to_string(i) +
                                  " has a different node set");
  }
}

PDGraph rm(const SaMpdag& g, const IdentQuery& q) {
  const PDGraph& base = g.graph();
  check_query_in_graph(base, q);
  NodeSet targets = set_intersection(q.x(), ancestors(base, q.y()));
  PDGraph pruned = base;
  for (const auto& node : targets) {
    // Snapshot: removing edges mutates the parent set being iterated.
    std::vector<NodeId> incoming;
    for (int p : pruned.parents_at(pruned.index_of(node)))
      incoming.push_back(pruned.name_of(p));
    for (const auto& tail : incoming) pruned.remove_directed_edge(tail, node);
  }
  return induced_subgraph(pruned, ancestors(pruned, q.y()));
}

bool check_condition1(const SaMpdag& g, const IdentQuery& q) {
  check_query_in_graph(g.graph(), q);
  return !exists_blocking_path(g.graph(), q.x(), q.y());
}

bool check_condition2a(const SaMpdag& gi, const SaMpdag& gj, const IdentQuery& q) {
  if (gi.graph().node_set() != gj.graph().node_set())
    throw std::invalid_argument("check_condition2a: graphs over different node sets");
  check_query_in_graph(gi.graph(), q);
  auto half = [&](const SaMpdag& a, const SaMpdag& b) {
    NodeSet ai = set_intersection(q.x(), ancestors(a.graph(), q.y()));
    for (const auto& block : chain_decomposition(a.graph(), ai)) {
      if (parents(a.graph(), block) != parents(b.graph(), block)) return false;
    }
    return true;
  };
  return half(gi, gj) && half(gj, gi);
}

bool check_condition2b(const SaMpdag& gi, const SaMpdag& gj, const IdentQuery& q) {
  if (!check_condition1(gi, q) || !check_condition1(gj, q))
    throw std::invalid_argument(
        "check_condition2b: condition 1 must hold for both graphs");
  PDGraph ri = rm(gi, q);
  PDGraph rj = rm(gj, q);
  if (ri.node_set() != rj.node_set()) return false;
  return equivalent(ri, rj).equivalent;
}

namespace detail {

IdentFormula build_formula_impl(const PDGraph& g, const NodeSet& x, const NodeSet& y,
                                std::size_t source_index) {
  NodeSet keep = set_difference(g.node_set(), x);
  PDGraph sub = induced_subgraph(g, keep);
  NodeSet an = ancestors(sub, y);
  IdentFormula f;
  f.source_graph_index = source_index;
  f.x = x;
  f.y = y;
  f.integrand_vars = set_difference(an, y);
  for (const auto& block : chain_decomposition(g, an))
    f.blocks.push_back({block, parents(g, block)});
  return f;
}

}  // namespace detail

IdentFormula build_formula(const SaMpdag& g, const IdentQuery& q) {
  if (!check_condition1(g, q))
    throw std::runtime_error(
        "build_formula: not identifiable (a proper semi-directed path from x to y starts "
        "with an undirected edge)");
  return detail::build_formula_impl(g.graph(), q.x(), q.y(), 0);
}

IdentReport simultaneous_identify(const CandidateSet& gs, const IdentQuery& q) {
  IdentReport report;
  const std::size_t n = gs.size();
  for (std::size_t i = 0; i < n; ++i) {
    report.condition1.push_back(check_condition1(gs[i], q));
    report.a_sets.push_back(set_intersection(q.x(), ancestors(gs[i].graph(), q.y())));
  }
  bool all_cond1 = std::all_of(report.condition1.begin(), report.condition1.end(),
                               [](bool b) { return b; });
  bool all_pairs = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairResult pr;
      pr.i = i;
      pr.j = j;
      pr.cond2a = check_condition2a(gs[i], gs[j], q);
      if (report.condition1[i] && report.condition1[j])
        pr.cond2b = check_condition2b(gs[i], gs[j], q);
      if (!pr.satisfied()) all_pairs = false;
      report.pairwise.push_back(pr);
    }
  }
  if (all_cond1 && all_pairs) {
    report.verdict = Verdict::identifiable;
    for (std::size_t i = 0; i < n; ++i)
      report.per_graph_formulas.push_back(
          detail::build_formula_impl(gs[i].graph(), q.x(), q.y(), i));
    report.formula = report.per_graph_formulas.front();
  } else {
    report.verdict = Verdict::not_determined;
  }
  return report;
}

}  // namespace simident
