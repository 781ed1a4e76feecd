#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "simident/graph.hpp"
#include "simident/identify.hpp"
#include "simident/mpdag.hpp"
#include "simident/numeric.hpp"

namespace simident {

/// Raised when an identification formula or re-weighting expression hits a
/// conditioning event of probability zero that actually carries weight.
class undefined_evaluation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VariableSpec {
  NodeId name;
  std::size_t cardinality = 0;
  std::vector<std::string> labels;  // optional; size == cardinality when present

  std::string state_name(int s) const {
    return labels.empty() ? std::to_string(s) : labels[static_cast<std::size_t>(s)];
  }
};

inline constexpr std::size_t kMaxTableCells = 1000000;

// Full assignments are encoded in mixed radix, variables in declared order,
// last variable fastest (row-major).
using Assignment = std::vector<int>;
using ValueMap = std::map<NodeId, int>;  // variable name -> state index

namespace detail {

inline std::vector<std::size_t> strides_for(const std::vector<VariableSpec>& vars) {
  std::vector<std::size_t> s(vars.size(), 1);
  for (std::size_t i = vars.size(); i-- > 1;) s[i - 1] = s[i] * vars[i].cardinality;
  return s;
}

inline std::size_t table_size_for(const std::vector<VariableSpec>& vars) {
  std::size_t n = 1;
  for (const auto& v : vars) {
    if (v.cardinality == 0) throw std::invalid_argument("variable '" + v.name + "' has cardinality 0");
    if (!v.labels.empty() && v.labels.size() != v.cardinality)
      throw std::invalid_argument("variable '" + v.name + "': label count != cardinality");
    if (n > kMaxTableCells / v.cardinality)
      throw std::invalid_argument("state space exceeds the desk-scale guard of " +
                                  std::to_string(kMaxTableCells) + " assignments");
    n *= v.cardinality;
  }
  return n;
}

}  // namespace detail

/// Exact joint probability table over finite-valued variables. Immutable
/// after construction; sums to one (exactly in rational mode, within 1e-12
/// in float mode) and has no negative entries.
template <class Num>
class DiscreteDistribution {
 public:
  DiscreteDistribution(std::vector<VariableSpec> variables, std::vector<Num> probabilities)
      : vars_(std::move(variables)), probs_(std::move(probabilities)) {
    size_ = detail::table_size_for(vars_);
    if (probs_.size() != size_)
      throw std::invalid_argument("probability table has " + std::to_string(probs_.size()) +
                                  " entries, expected " + std::to_string(size_));
    strides_ = detail::strides_for(vars_);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (index_by_name_.count(vars_[i].name))
        throw std::invalid_argument("duplicate variable '" + vars_[i].name + "'");
      index_by_name_[vars_[i].name] = i;
    }
    Num total = NumericConstants<Num>::zero();
    for (const auto& v : probs_) {
      if (v < NumericConstants<Num>::zero())
        throw std::invalid_argument("negative probability entry");
      total += v;
    }
    if (!num_eq(total, NumericConstants<Num>::one(), 1e-12))
      throw std::invalid_argument("probabilities sum to " + format_number(total) + ", not 1");
  }

  const std::vector<VariableSpec>& variables() const { return vars_; }
  std::size_t table_size() const { return size_; }
  const std::vector<Num>& values() const { return probs_; }

  bool has_variable(const NodeId& name) const { return index_by_name_.count(name) != 0; }
  std::size_t variable_index(const NodeId& name) const {
    auto it = index_by_name_.find(name);
    if (it == index_by_name_.end())
      throw std::invalid_argument("unknown variable '" + name + "'");
    return it->second;
  }
  const VariableSpec& variable(const NodeId& name) const { return vars_[variable_index(name)]; }

  NodeSet variable_names() const {
    NodeSet out;
    for (const auto& v : vars_) out.insert(v.name);
    return out;
  }

  const Num& prob(std::size_t index) const { return probs_[index]; }
  const Num& prob(const Assignment& a) const { return probs_[encode(a)]; }

  std::size_t encode(const Assignment& a) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      idx += static_cast<std::size_t>(a[i]) * strides_[i];
    return idx;
  }
  Assignment decode(std::size_t index) const {
    Assignment a(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      a[i] = static_cast<int>(index / strides_[i]);
      index %= strides_[i];
    }
    return a;
  }

 private:
  std::vector<VariableSpec> vars_;
  std::vector<Num> probs_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
  std::map<NodeId, std::size_t> index_by_name_;
};

/// Conditional table p(target | given). Rows whose conditioning event has
/// probability zero are all-zero and flagged undefined.
template <class Num>
struct Factor {
  std::vector<std::size_t> target_idx;  // indices into the source distribution
  std::vector<std::size_t> given_idx;
  std::vector<std::size_t> target_card, given_card;
  std::size_t target_size = 1, given_size = 1;
  std::vector<Num> values;       // index: g * target_size + t
  std::vector<char> defined;     // per given row

  std::size_t target_index(const Assignment& full) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < target_idx.size(); ++k)
      idx = idx * target_card[k] + static_cast<std::size_t>(full[target_idx[k]]);
    return idx;
  }
  std::size_t given_index(const Assignment& full) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < given_idx.size(); ++k)
      idx = idx * given_card[k] + static_cast<std::size_t>(full[given_idx[k]]);
    return idx;
  }
  const Num& value_at(std::size_t t, std::size_t g) const { return values[g * target_size + t]; }
  bool defined_at(std::size_t g) const { return defined[g] != 0; }
};

/// Interventional marginal table over an ordered variable subset, for one
/// fixed treatment assignment.
template <class Num>
struct InterventionalMarginal {
  std::vector<VariableSpec> vars;
  ValueMap x_assignment;
  std::vector<Num> values;  // mixed radix over vars, last fastest
  std::vector<std::string> warnings;
  std::size_t undefined_rows = 0;

  std::size_t table_size() const { return values.size(); }
  Assignment decode(std::size_t index) const {
    auto strides = detail::strides_for(vars);
    Assignment a(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      a[i] = static_cast<int>(index / strides[i]);
      index %= strides[i];
    }
    return a;
  }
  Num total() const {
    Num t = NumericConstants<Num>::zero();
    for (const auto& v : values) t += v;
    return t;
  }
};

// ---------------------------------------------------------------------------
// Operations

template <class Num>
DiscreteDistribution<Num> marginal(const DiscreteDistribution<Num>& p, const NodeSet& s) {
  for (const auto& n : s) p.variable_index(n);
  std::vector<VariableSpec> kept;
  std::vector<std::size_t> kept_idx;
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    if (s.count(p.variables()[i].name)) {
      kept.push_back(p.variables()[i]);
      kept_idx.push_back(i);
    }
  }
  auto strides = detail::strides_for(kept);
  std::vector<Num> out(detail::table_size_for(kept), NumericConstants<Num>::zero());
  for (std::size_t idx = 0; idx < p.table_size(); ++idx) {
    Assignment a = p.decode(idx);
    std::size_t sub = 0;
    for (std::size_t k = 0; k < kept_idx.size(); ++k)
      sub += static_cast<std::size_t>(a[kept_idx[k]]) * strides[k];
    out[sub] += p.prob(idx);
  }
  return DiscreteDistribution<Num>(std::move(kept), std::move(out));
}

template <class Num>
Factor<Num> conditional(const DiscreteDistribution<Num>& p, const NodeSet& target,
                        const NodeSet& given) {
  for (const auto& n : target)
    if (given.count(n))
      throw std::invalid_argument("conditional: '" + n + "' is both target and given");
  Factor<Num> f;
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    const auto& name = p.variables()[i].name;
    if (target.count(name)) {
      f.target_idx.push_back(i);
      f.target_card.push_back(p.variables()[i].cardinality);
      f.target_size *= p.variables()[i].cardinality;
    } else if (given.count(name)) {
      f.given_idx.push_back(i);
      f.given_card.push_back(p.variables()[i].cardinality);
      f.given_size *= p.variables()[i].cardinality;
    }
  }
  if (f.target_idx.size() != target.size())
    for (const auto& n : target) p.variable_index(n);
  if (f.given_idx.size() != given.size())
    for (const auto& n : given) p.variable_index(n);

  std::vector<Num> joint(f.given_size * f.target_size, NumericConstants<Num>::zero());
  std::vector<Num> gmarg(f.given_size, NumericConstants<Num>::zero());
  for (std::size_t idx = 0; idx < p.table_size(); ++idx) {
    Assignment a = p.decode(idx);
    std::size_t t = f.target_index(a), g = f.given_index(a);
    joint[g * f.target_size + t] += p.prob(idx);
    gmarg[g] += p.prob(idx);
  }
  f.values.assign(f.given_size * f.target_size, NumericConstants<Num>::zero());
  f.defined.assign(f.given_size, 0);
  for (std::size_t g = 0; g < f.given_size; ++g) {
    if (gmarg[g] > NumericConstants<Num>::zero()) {
      f.defined[g] = 1;
      for (std::size_t t = 0; t < f.target_size; ++t)
        f.values[g * f.target_size + t] = joint[g * f.target_size + t] / gmarg[g];
    }
  }
  return f;
}

namespace detail {

template <class Num>
void check_nodes_match(const DiscreteDistribution<Num>& p, const PDGraph& g, const char* who) {
  if (p.variable_names() != g.node_set())
    throw std::invalid_argument(std::string(who) +
                                ": graph nodes and distribution variables differ");
}

}  // namespace detail

/**
 * Definition-1 check: p(v) equals the product of per-node conditionals at
 * every full assignment. Rows whose conditioning assignment has zero mass
 * impose no constraint beyond p(v) = 0, which holds automatically for
 * exact tables and is enforced within tol for floats.
 */
template <class Num>
bool is_markov_to_dag(const DiscreteDistribution<Num>& p, const PDGraph& dag, double tol = 1e-9,
                      Assignment* violating = nullptr) {
  detail::check_nodes_match(p, dag, "is_markov_to_dag");
  if (!dag.fully_directed())
    throw std::invalid_argument("is_markov_to_dag: graph has undirected edges");
  if (has_semi_directed_cycle(dag))
    throw std::invalid_argument("is_markov_to_dag: graph is not acyclic");

  std::vector<Factor<Num>> factors;
  for (const auto& node : p.variables())
    factors.push_back(conditional(p, NodeSet{node.name}, parents(dag, NodeSet{node.name})));

  for (std::size_t idx = 0; idx < p.table_size(); ++idx) {
    Assignment a = p.decode(idx);
    Num prod = NumericConstants<Num>::one();
    bool undefined = false;
    for (const auto& f : factors) {
      std::size_t g = f.given_index(a);
      if (!f.defined_at(g)) {
        undefined = true;
        break;
      }
      prod *= f.value_at(f.target_index(a), g);
    }
    bool ok = undefined ? num_eq(p.prob(idx), NumericConstants<Num>::zero(), tol)
                        : num_eq(p.prob(idx), prod, tol);
    if (!ok) {
      if (violating) *violating = a;
      return false;
    }
  }
  return true;
}

/**
 * Compatibility with an SA-MPDAG: Markov to one consistent extension
 * (sufficient, since all extensions are Markov equivalent to the graph).
 * The exhaustive mode checks every extension and insists they agree.
 */
template <class Num>
bool is_compatible(const DiscreteDistribution<Num>& p, const SaMpdag& g, double tol = 1e-9,
                   bool exhaustive = false, Assignment* violating = nullptr) {
  auto extensions = enumerate_extensions(g);
  if (!exhaustive) return is_markov_to_dag(p, extensions.front(), tol, violating);
  bool first = is_markov_to_dag(p, extensions.front(), tol, violating);
  for (std::size_t i = 1; i < extensions.size(); ++i) {
    if (is_markov_to_dag(p, extensions[i], tol) != first)
      throw std::logic_error(
          "is_compatible: extensions disagree on the Markov property (library bug: all "
          "extensions of one graph are Markov equivalent)");
  }
  return first;
}

/**
 * Truncated factorisation / g-formula: the interventional density over all
 * non-x variables. Rows that require a conditional with a zero-probability
 * parent configuration (with every other factor positive) get value 0 and
 * a warning record.
 */
template <class Num>
InterventionalMarginal<Num> truncated_factorization(const DiscreteDistribution<Num>& p,
                                                    const PDGraph& dag,
                                                    const ValueMap& x_assignment) {
  detail::check_nodes_match(p, dag, "truncated_factorization");
  if (!dag.fully_directed())
    throw std::invalid_argument("truncated_factorization: graph has undirected edges");
  std::vector<int> fixed(p.variables().size(), -1);
  for (const auto& [name, state] : x_assignment) {
    std::size_t vi = p.variable_index(name);
    if (state < 0 || static_cast<std::size_t>(state) >= p.variables()[vi].cardinality)
      throw std::invalid_argument("state " + std::to_string(state) + " out of range for '" +
                                  name + "'");
    fixed[vi] = state;
  }

  InterventionalMarginal<Num> out;
  out.x_assignment = x_assignment;
  std::vector<std::size_t> free_idx;
  std::vector<Factor<Num>> factors;  // aligned with free_idx
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    if (fixed[i] >= 0) continue;
    const auto& name = p.variables()[i].name;
    out.vars.push_back(p.variables()[i]);
    free_idx.push_back(i);
    factors.push_back(conditional(p, NodeSet{name}, parents(dag, NodeSet{name})));
  }

  std::size_t out_size = detail::table_size_for(out.vars);
  out.values.assign(out_size, NumericConstants<Num>::zero());
  auto out_strides = detail::strides_for(out.vars);

  Assignment full(p.variables().size(), 0);
  for (std::size_t i = 0; i < p.variables().size(); ++i)
    if (fixed[i] >= 0) full[i] = fixed[i];
  for (std::size_t o = 0; o < out_size; ++o) {
    std::size_t rem = o;
    for (std::size_t k = 0; k < free_idx.size(); ++k) {
      full[free_idx[k]] = static_cast<int>(rem / out_strides[k]);
      rem %= out_strides[k];
    }
    Num prod = NumericConstants<Num>::one();
    bool zero = false, undefined = false;
    std::size_t undef_at = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const auto& f = factors[k];
      std::size_t g = f.given_index(full);
      if (!f.defined_at(g)) {
        undefined = true;
        undef_at = k;
        continue;
      }
      const Num& v = f.value_at(f.target_index(full), g);
      if (num_is_zero(v)) {
        zero = true;
        break;
      }
      prod *= v;
    }
    if (zero) continue;  // value stays 0, the undefined factor is not required
    if (undefined) {
      ++out.undefined_rows;
      if (out.warnings.size() < 50)
        out.warnings.push_back("undefined row: variable '" +
                               p.variables()[free_idx[undef_at]].name +
                               "' conditioned on a zero-probability parent configuration");
      continue;
    }
    out.values[o] = prod;
  }
  return out;
}

/// Sums an interventional marginal down to a variable subset.
template <class Num>
InterventionalMarginal<Num> marginalize(const InterventionalMarginal<Num>& im, const NodeSet& y) {
  InterventionalMarginal<Num> out;
  out.x_assignment = im.x_assignment;
  out.warnings = im.warnings;
  out.undefined_rows = im.undefined_rows;
  std::vector<std::size_t> kept_idx;
  for (std::size_t i = 0; i < im.vars.size(); ++i) {
    if (y.count(im.vars[i].name)) {
      out.vars.push_back(im.vars[i]);
      kept_idx.push_back(i);
    }
  }
  NodeSet known;
  for (const auto& v : im.vars) known.insert(v.name);
  for (const auto& n : y)
    if (!known.count(n))
      throw std::invalid_argument("marginalize: unknown variable '" + n + "'");
  auto out_strides = detail::strides_for(out.vars);
  std::size_t out_size = detail::table_size_for(out.vars);
  out.values.assign(out_size, NumericConstants<Num>::zero());
  for (std::size_t idx = 0; idx < im.values.size(); ++idx) {
    Assignment a = im.decode(idx);
    std::size_t sub = 0;
    for (std::size_t k = 0; k < kept_idx.size(); ++k)
      sub += static_cast<std::size_t>(a[kept_idx[k]]) * out_strides[k];
    out.values[sub] += im.values[idx];
  }
  return out;
}

/**
 * Evaluates an identification formula on a compatible distribution: sums over the integrand variables the product of block
 * conditionals, parent slots agreeing with the intervened values. A
 * required zero-probability conditioning row (with all other factors in
 * the term positive) raises undefined_evaluation_error.
 */
template <class Num>
InterventionalMarginal<Num> evaluate_formula(const IdentFormula& f,
                                             const DiscreteDistribution<Num>& p,
                                             const ValueMap& x_assignment) {
  NodeSet given_x;
  for (const auto& [name, state] : x_assignment) {
    std::size_t vi = p.variable_index(name);
    if (state < 0 || static_cast<std::size_t>(state) >= p.variables()[vi].cardinality)
      throw std::invalid_argument("state " + std::to_string(state) + " out of range for '" +
                                  name + "'");
    given_x.insert(name);
  }
  if (given_x != f.x)
    throw std::invalid_argument(
        "evaluate_formula: the assignment must cover exactly the formula's x variables");

  std::vector<Factor<Num>> factors;
  for (const auto& block : f.blocks) factors.push_back(conditional(p, block.vars, block.parents));

  std::vector<VariableSpec> yvars, bvars;
  std::vector<std::size_t> y_idx, b_idx;
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    const auto& name = p.variables()[i].name;
    if (f.y.count(name)) {
      yvars.push_back(p.variables()[i]);
      y_idx.push_back(i);
    } else if (f.integrand_vars.count(name)) {
      bvars.push_back(p.variables()[i]);
      b_idx.push_back(i);
    }
  }
  for (const auto& n : f.y) p.variable_index(n);
  for (const auto& n : f.integrand_vars) p.variable_index(n);

  InterventionalMarginal<Num> out;
  out.vars = yvars;
  out.x_assignment = x_assignment;
  auto y_strides = detail::strides_for(yvars);
  auto b_strides = detail::strides_for(bvars);
  std::size_t y_size = detail::table_size_for(yvars);
  std::size_t b_size = detail::table_size_for(bvars);
  out.values.assign(y_size, NumericConstants<Num>::zero());

  Assignment full(p.variables().size(), 0);
  for (const auto& [name, state] : x_assignment) full[p.variable_index(name)] = state;
  for (std::size_t yi = 0; yi < y_size; ++yi) {
    std::size_t rem = yi;
    for (std::size_t k = 0; k < y_idx.size(); ++k) {
      full[y_idx[k]] = static_cast<int>(rem / y_strides[k]);
      rem %= y_strides[k];
    }
    Num total = NumericConstants<Num>::zero();
    for (std::size_t bi = 0; bi < b_size; ++bi) {
      std::size_t brem = bi;
      for (std::size_t k = 0; k < b_idx.size(); ++k) {
        full[b_idx[k]] = static_cast<int>(brem / b_strides[k]);
        brem %= b_strides[k];
      }
      Num prod = NumericConstants<Num>::one();
      bool zero = false, undefined = false;
      std::size_t undef_block = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& fac = factors[k];
        std::size_t g = fac.given_index(full);
        if (!fac.defined_at(g)) {
          undefined = true;
          undef_block = k;
          continue;
        }
        const Num& v = fac.value_at(fac.target_index(full), g);
        if (num_is_zero(v)) {
          zero = true;
          break;
        }
        prod *= v;
      }
      if (zero) continue;
      if (undefined) {
        std::string vars;
        for (const auto& n : f.blocks[undef_block].vars) vars += (vars.empty() ? "" : ",") + n;
        throw undefined_evaluation_error(
            "evaluate_formula: undefined at this x — block {" + vars +
            "} is conditioned on a zero-probability parent configuration");
      }
      total += prod;
    }
    out.values[yi] = total;
  }
  return out;
}

/**
 * Right-hand side of the re-weighting identity: with A = X ∩ An(Y) pinned
 * at the intervened values, sum p(v) divided by the conditionals of A's
 * chain-decomposition blocks over every remaining non-y variable.
 * Intervened variables outside An(Y) cannot influence y, so they are
 * summed rather than pinned; pinning them would leave their conditional
 * factors dangling in the sum. Zero-mass rows contribute 0; a positive
 * numerator over a zero or undefined denominator raises
 * undefined_evaluation_error.
 */
template <class Num>
InterventionalMarginal<Num> reweight_marginal(const DiscreteDistribution<Num>& p,
                                              const SaMpdag& g, const IdentQuery& q,
                                              const ValueMap& x_assignment) {
  if (!check_condition1(g, q))
    throw std::invalid_argument("reweight_marginal: condition 1 fails for this query");
  detail::check_nodes_match(p, g.graph(), "reweight_marginal");
  NodeSet given_x;
  for (const auto& [name, state] : x_assignment) given_x.insert(name);
  if (given_x != q.x())
    throw std::invalid_argument(
        "reweight_marginal: the assignment must cover exactly the query's x variables");

  NodeSet an = ancestors(g.graph(), q.y());
  NodeSet a_set;
  for (const auto& n : q.x())
    if (an.count(n)) a_set.insert(n);
  std::vector<Factor<Num>> denom;
  for (const auto& block : chain_decomposition(g.graph(), a_set))
    denom.push_back(conditional(p, block, parents(g.graph(), block)));

  std::vector<VariableSpec> yvars, vvars;
  std::vector<std::size_t> y_idx, v_idx;
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    const auto& name = p.variables()[i].name;
    if (q.y().count(name)) {
      yvars.push_back(p.variables()[i]);
      y_idx.push_back(i);
    } else if (!a_set.count(name)) {
      vvars.push_back(p.variables()[i]);
      v_idx.push_back(i);
    }
  }

  InterventionalMarginal<Num> out;
  out.vars = yvars;
  out.x_assignment = x_assignment;
  auto y_strides = detail::strides_for(yvars);
  auto v_strides = detail::strides_for(vvars);
  std::size_t y_size = detail::table_size_for(yvars);
  std::size_t v_size = detail::table_size_for(vvars);
  out.values.assign(y_size, NumericConstants<Num>::zero());

  Assignment full(p.variables().size(), 0);
  for (const auto& [name, state] : x_assignment) {
    std::size_t vi = p.variable_index(name);
    if (state < 0 || static_cast<std::size_t>(state) >= p.variables()[vi].cardinality)
      throw std::invalid_argument("state " + std::to_string(state) + " out of range for '" +
                                  name + "'");
    if (a_set.count(name)) full[vi] = state;
  }
  for (std::size_t yi = 0; yi < y_size; ++yi) {
    std::size_t rem = yi;
    for (std::size_t k = 0; k < y_idx.size(); ++k) {
      full[y_idx[k]] = static_cast<int>(rem / y_strides[k]);
      rem %= y_strides[k];
    }
    Num total = NumericConstants<Num>::zero();
    for (std::size_t vi = 0; vi < v_size; ++vi) {
      std::size_t vrem = vi;
      for (std::size_t k = 0; k < v_idx.size(); ++k) {
        full[v_idx[k]] = static_cast<int>(vrem / v_strides[k]);
        vrem %= v_strides[k];
      }
      const Num& numer = p.prob(full);
      if (num_is_zero(numer)) continue;
      Num den = NumericConstants<Num>::one();
      for (const auto& fac : denom) {
        std::size_t gidx = fac.given_index(full);
        if (!fac.defined_at(gidx))
          throw undefined_evaluation_error(
              "reweight_marginal: re-weighting undefined (positive mass over an undefined "
              "conditional row)");
        const Num& v = fac.value_at(fac.target_index(full), gidx);
        if (num_is_zero(v))
          throw undefined_evaluation_error(
              "reweight_marginal: re-weighting undefined (positive numerator over a zero "
              "denominator)");
        den *= v;
      }
      total += numer / den;
    }
    out.values[yi] = total;
  }
  return out;
}

/// Largest absolute difference between two tables over the same variables.
template <class Num>
double max_abs_difference(const InterventionalMarginal<Num>& a,
                          const InterventionalMarginal<Num>& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("max_abs_difference: table sizes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    worst = std::max(worst, std::fabs(to_double(a.values[i]) - to_double(b.values[i])));
  return worst;
}

template <class Num>
bool tables_agree(const InterventionalMarginal<Num>& a, const InterventionalMarginal<Num>& b,
                  double tol) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!num_eq(a.values[i], b.values[i], tol)) return false;
  return true;
}

}  // namespace simident
