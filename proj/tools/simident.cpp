// Command-line front end: identification, formula evaluation, equivalence,
// extension enumeration, brute-force verification and fixture generation.
//
// Exit codes: 0 success (a not-determined verdict is still success), 1
// domain errors, 2 usage and parse errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "simident/distribution_io.hpp"
#include "simident/generators.hpp"
#include "simident/graph_io.hpp"
#include "simident/identify.hpp"
#include "simident/oracle.hpp"
#include "simident/version.hpp"

using json = nlohmann::ordered_json;
using namespace simident;

namespace {

// --------------------------------------------------------------------------
// plumbing

std::string fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(path, 0, "cannot open file");
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Output {
  std::string format = "text";  // text | json
  std::string path;             // empty: stdout

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format (text or json)")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", path, "Write the report to a file instead of stdout");
  }

  void emit(const std::string& text, const json& doc) const {
    std::string payload = format == "json" ? doc.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write file '" + path + "'");
      out << payload;
    }
  }
};

json make_document(const std::string& subcommand, const std::vector<std::string>& input_paths,
                   json options, json report) {
  json inputs = json::array();
  for (const auto& p : input_paths) inputs.push_back({{"path", p}, {"fnv1a64", fnv1a64_file(p)}});
  return json{{"tool", "simident"},
              {"version", kVersion},
              {"subcommand", subcommand},
              {"inputs", inputs},
              {"options", std::move(options)},
              {"report", std::move(report)}};
}

json graph_json(const PDGraph& g) {
  json directed = json::array(), undirected = json::array();
  for (const auto& [t, h] : g.directed_edges()) directed.push_back({t, h});
  for (const auto& [a, b] : g.undirected_edges()) undirected.push_back({a, b});
  json nodes = json::array();
  for (const auto& n : g.node_set()) nodes.push_back(n);
  return json{{"nodes", nodes}, {"directed", directed}, {"undirected", undirected}};
}

json node_set_json(const NodeSet& s) {
  json out = json::array();
  for (const auto& n : s) out.push_back(n);
  return out;
}

json formula_json(const IdentFormula& f) {
  json blocks = json::array();
  for (const auto& b : f.blocks)
    blocks.push_back({{"vars", node_set_json(b.vars)}, {"parents", node_set_json(b.parents)}});
  return json{{"source_graph_index", f.source_graph_index},
              {"blocks", blocks},
              {"integrand_vars", node_set_json(f.integrand_vars)},
              {"x", node_set_json(f.x)},
              {"y", node_set_json(f.y)}};
}

std::string formula_text(const IdentFormula& f) {
  std::ostringstream os;
  std::string sum;
  for (const auto& v : f.integrand_vars) sum += (sum.empty() ? "" : ",") + v;
  if (!sum.empty()) os << "sum_{" << sum << "} ";
  for (const auto& b : f.blocks) {
    std::string vars, pa;
    for (const auto& v : b.vars) vars += (vars.empty() ? "" : ",") + v;
    for (const auto& v : b.parents) pa += (pa.empty() ? "" : ",") + v;
    os << "p(" << vars;
    if (!pa.empty()) os << " | " << pa;
    os << ") ";
  }
  return os.str();
}

template <class Num>
json marginal_json(const InterventionalMarginal<Num>& im) {
  json rows = json::array();
  for (std::size_t i = 0; i < im.values.size(); ++i) {
    Assignment a = im.decode(i);
    json at = json::object();
    for (std::size_t k = 0; k < im.vars.size(); ++k)
      at[im.vars[k].name] = im.vars[k].state_name(a[k]);
    if constexpr (std::is_same_v<Num, Rational>)
      rows.push_back({{"y", at}, {"value", format_number(im.values[i])}});
    else
      rows.push_back({{"y", at}, {"value", im.values[i]}});
  }
  json x = json::object();
  for (const auto& [name, state] : im.x_assignment) x[name] = state;
  return json{{"x_assignment", x},
              {"rows", rows},
              {"warnings", im.warnings},
              {"undefined_rows", im.undefined_rows}};
}

template <class Num>
std::string marginal_text(const InterventionalMarginal<Num>& im) {
  std::ostringstream os;
  std::string xdesc;
  for (const auto& [name, state] : im.x_assignment)
    xdesc += (xdesc.empty() ? "" : ", ") + name + "=" + std::to_string(state);
  os << "interventional marginal, do(" << xdesc << "):\n";
  for (std::size_t i = 0; i < im.values.size(); ++i) {
    Assignment a = im.decode(i);
    os << "  ";
    for (std::size_t k = 0; k < im.vars.size(); ++k) {
      if (k) os << ' ';
      os << im.vars[k].name << '=' << im.vars[k].state_name(a[k]);
    }
    os << "  " << format_number(im.values[i]) << '\n';
  }
  for (const auto& w : im.warnings) os << "  warning: " << w << '\n';
  return os.str();
}

std::vector<SaMpdag> load_sa_mpdags(const std::vector<std::string>& paths) {
  std::vector<SaMpdag> out;
  for (const auto& p : paths) out.push_back(validate_sa_mpdag(load_graph_file(p)));
  return out;
}

NodeSet to_node_set(const std::vector<std::string>& names) {
  return NodeSet(names.begin(), names.end());
}

// NAME=STATE with STATE a state index or label; resolved against the
// distribution's variables.
template <class Num>
ValueMap parse_do_flags(const std::vector<std::string>& dos, const DiscreteDistribution<Num>& p) {
  ValueMap out;
  for (const auto& spec : dos) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--do expects NAME=STATE, got '" + spec + "'");
    std::string name = spec.substr(0, eq), state = spec.substr(eq + 1);
    const auto& var = p.variable(name);
    int resolved = -1;
    for (std::size_t s = 0; s < var.labels.size(); ++s)
      if (var.labels[s] == state) resolved = static_cast<int>(s);
    if (resolved < 0) {
      try {
        std::size_t pos = 0;
        int idx = std::stoi(state, &pos);
        if (pos == state.size() && idx >= 0 && static_cast<std::size_t>(idx) < var.cardinality)
          resolved = idx;
      } catch (const std::exception&) {
      }
    }
    if (resolved < 0)
      throw std::invalid_argument("'" + state + "' is not a state of variable '" + name + "'");
    if (out.count(name)) throw std::invalid_argument("duplicate --do for '" + name + "'");
    out[name] = resolved;
  }
  return out;
}

json report_json(const IdentReport& r) {
  json cond1 = json::array(), a_sets = json::array(), pairs = json::array();
  for (bool b : r.condition1) cond1.push_back(b);
  for (const auto& a : r.a_sets) a_sets.push_back(node_set_json(a));
  for (const auto& pr : r.pairwise) {
    json p{{"i", pr.i}, {"j", pr.j}, {"condition_2a", pr.cond2a}};
    p["condition_2b"] = pr.cond2b ? json(*pr.cond2b) : json(nullptr);
    p["satisfied"] = pr.satisfied();
    pairs.push_back(p);
  }
  json out{{"verdict", r.verdict == Verdict::identifiable ? "identifiable" : "not-determined"},
           {"condition1", cond1},
           {"a_sets", a_sets},
           {"pairwise", pairs}};
  if (r.formula) out["formula"] = formula_json(*r.formula);
  json per_graph = json::array();
  for (const auto& f : r.per_graph_formulas) per_graph.push_back(formula_json(f));
  out["per_graph_formulas"] = per_graph;
  return out;
}

std::string report_text(const IdentReport& r) {
  std::ostringstream os;
  os << "verdict: "
     << (r.verdict == Verdict::identifiable ? "identifiable" : "not-determined") << '\n';
  for (std::size_t i = 0; i < r.condition1.size(); ++i) {
    std::string a;
    for (const auto& n : r.a_sets[i]) a += (a.empty() ? "" : ",") + n;
    os << "  graph " << i << ": condition 1 " << (r.condition1[i] ? "holds" : "fails")
       << ", A = {" << a << "}\n";
  }
  for (const auto& pr : r.pairwise) {
    os << "  pair (" << pr.i << "," << pr.j << "): 2a " << (pr.cond2a ? "holds" : "fails")
       << ", 2b ";
    if (pr.cond2b)
      os << (*pr.cond2b ? "holds" : "fails");
    else
      os << "not evaluated";
    os << " -> " << (pr.satisfied() ? "satisfied" : "NOT satisfied") << '\n';
  }
  if (r.formula) os << "formula (from graph 0): " << formula_text(*r.formula) << '\n';
  return os.str();
}

// --------------------------------------------------------------------------
// subcommands

int run_identify(const std::vector<std::string>& graph_paths, const NodeSet& x, const NodeSet& y,
                 const Output& out) {
  CandidateSet gs(load_sa_mpdags(graph_paths));
  IdentQuery q(x, y);
  auto report = simultaneous_identify(gs, q);
  json options{{"x", node_set_json(x)}, {"y", node_set_json(y)}};
  out.emit(report_text(report),
           make_document("identify", graph_paths, options, report_json(report)));
  return 0;
}

int run_rm(const std::string& graph_path, const NodeSet& x, const NodeSet& y, const Output& out) {
  auto g = validate_sa_mpdag(load_graph_file(graph_path));
  auto result = rm(g, IdentQuery(x, y));
  json options{{"x", node_set_json(x)}, {"y", node_set_json(y)}};
  out.emit(write_graph(result),
           make_document("rm", {graph_path}, options, graph_json(result)));
  return 0;
}

int run_extensions(const std::string& graph_path, std::size_t cap, const Output& out) {
  auto g = validate_sa_mpdag(load_graph_file(graph_path));
  auto dags = enumerate_extensions(g, cap);
  std::ostringstream text;
  json list = json::array();
  for (std::size_t i = 0; i < dags.size(); ++i) {
    text << "# extension " << i << '\n' << write_graph(dags[i]);
    list.push_back(graph_json(dags[i]));
  }
  out.emit(text.str(), make_document("extensions", {graph_path}, {{"max", cap}},
                                     json{{"count", dags.size()}, {"dags", list}}));
  return 0;
}

int run_equiv(const std::string& path1, const std::string& path2, const Output& out) {
  PDGraph g1 = load_graph_file(path1), g2 = load_graph_file(path2);
  auto verdict = equivalent(g1, g2);
  std::ostringstream text;
  text << (verdict.equivalent ? "equivalent" : "not equivalent") << '\n';
  if (verdict.witness) text << "witness: " << *verdict.witness << '\n';
  json rep{{"equivalent", verdict.equivalent},
           {"witness", verdict.witness ? json(*verdict.witness) : json(nullptr)}};
  out.emit(text.str(), make_document("equiv", {path1, path2}, json::object(), rep));
  return 0;
}

template <class Num>
int run_evaluate_typed(const std::vector<std::string>& graph_paths,
                       const std::string& dist_path, const std::vector<std::string>& dos,
                       const NodeSet& y, double tol, const Output& out) {
  auto p = load_distribution_file<Num>(dist_path);
  auto xa = parse_do_flags(dos, p);
  NodeSet x;
  for (const auto& [name, state] : xa) x.insert(name);
  CandidateSet gs(load_sa_mpdags(graph_paths));
  IdentQuery q(x, y);

  IdentFormula formula;
  if (gs.size() == 1) {
    formula = build_formula(gs[0], q);
  } else {
    auto report = simultaneous_identify(gs, q);
    if (report.verdict != Verdict::identifiable)
      throw std::runtime_error(
          "the candidate set is not determined identifiable for this query; no formula to "
          "evaluate");
    formula = *report.formula;
  }
  if (!is_compatible(p, gs[formula.source_graph_index], tol))
    throw std::runtime_error("distribution is not compatible with the formula's source graph");
  auto im = evaluate_formula(formula, p, xa);

  json options{{"x", node_set_json(x)},
               {"y", node_set_json(y)},
               {"mode", NumericConstants<Num>::mode_name},
               {"tol", tol}};
  std::vector<std::string> inputs = graph_paths;
  inputs.push_back(dist_path);
  std::ostringstream text;
  text << "formula: " << formula_text(formula) << '\n' << marginal_text(im);
  out.emit(text.str(), make_document("evaluate", inputs, options,
                                     json{{"formula", formula_json(formula)},
                                          {"marginal", marginal_json(im)}}));
  return 0;
}

template <class Num>
int run_oracle_typed(const std::vector<std::string>& graph_paths, const std::string& dist_path,
                     const std::vector<std::string>& dos, const NodeSet& x, const NodeSet& y,
                     double tol, const Output& out) {
  auto p = load_distribution_file<Num>(dist_path);
  auto xa = parse_do_flags(dos, p);
  NodeSet x_from_do;
  for (const auto& [name, state] : xa) x_from_do.insert(name);
  NodeSet x_final = x.empty() ? x_from_do : x;
  if (x_final != x_from_do)
    throw std::invalid_argument("--do assignments must cover exactly the x variables");
  CandidateSet gs(load_sa_mpdags(graph_paths));
  IdentQuery q(x_final, y);
  auto verdict = brute_force_check(gs, p, q, xa, tol);

  std::ostringstream text;
  text << "represented DAGs: " << verdict.dags.size() << '\n'
       << "all_agree: " << (verdict.all_agree ? "true" : "false") << '\n';
  json wit = nullptr;
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    text << "witness: DAGs " << w.dag_i << " and " << w.dag_j << " differ by " << w.difference
         << '\n';
    json ya = json::object();
    for (std::size_t k = 0; k < verdict.marginals[w.dag_i].vars.size(); ++k) {
      const auto& var = verdict.marginals[w.dag_i].vars[k];
      ya[var.name] = var.state_name(w.y_assignment[k]);
    }
    wit = json{{"dag_i", w.dag_i},
               {"dag_j", w.dag_j},
               {"y_assignment", ya},
               {"difference", w.difference}};
  } else {
    text << marginal_text(verdict.marginals.front());
  }
  json dags = json::array(), marginals = json::array();
  for (const auto& d : verdict.dags) dags.push_back(graph_json(d));
  for (const auto& m : verdict.marginals) marginals.push_back(marginal_json(m));
  json options{{"x", node_set_json(x_final)},
               {"y", node_set_json(y)},
               {"mode", NumericConstants<Num>::mode_name},
               {"tol", tol}};
  std::vector<std::string> inputs = graph_paths;
  inputs.push_back(dist_path);
  out.emit(text.str(),
           make_document("oracle", inputs, options,
                         json{{"all_agree", verdict.all_agree},
                              {"witness", wit},
                              {"dags", dags},
                              {"marginals", marginals}}));
  return 0;
}

int run_counterexample(const std::vector<std::string>& graph_paths, const NodeSet& x,
                       const NodeSet& y, int arity, int trials, unsigned long long seed,
                       double tol, const Output& out) {
  CandidateSet gs(load_sa_mpdags(graph_paths));
  IdentQuery q(x, y);
  auto result = counterexample_search(gs, q, arity, trials, seed, tol);
  std::ostringstream text;
  json rep{{"seed", seed}, {"trials", trials}, {"arity", arity}};
  if (result) {
    text << "counterexample found at trial " << result->trial << " (seed " << seed << ")\n";
    const auto& w = *result->verdict.witness;
    text << "DAGs " << w.dag_i << " and " << w.dag_j << " disagree by " << w.difference << '\n';
    std::string xdesc;
    for (const auto& [name, state] : result->x_assignment)
      xdesc += (xdesc.empty() ? "" : ", ") + name + "=" + std::to_string(state);
    text << "at do(" << xdesc << ")\n";
    json x_json = json::object();
    for (const auto& [name, state] : result->x_assignment) x_json[name] = state;
    rep["found"] = true;
    rep["trial"] = result->trial;
    rep["x_assignment"] = x_json;
    rep["difference"] = w.difference;
    rep["density"] = write_distribution(result->density);
  } else {
    text << "no counterexample in " << trials << " trials (seed " << seed << ")\n";
    rep["found"] = false;
  }
  json options{{"x", node_set_json(x)}, {"y", node_set_json(y)},
               {"arity", arity},       {"trials", trials},
               {"seed", seed},         {"tol", tol}};
  out.emit(text.str(), make_document("oracle", graph_paths, options, rep));
  return 0;
}

int run_fixtures(const std::string& which, std::string dir, const Output& out) {
  if (which != "example1")
    throw std::invalid_argument("unknown fixture set '" + which + "' (available: example1)");
  if (dir.empty()) {
    const char* env = std::getenv("SIMIDENT_OUT_DIR");
    dir = env ? env : ".";
  }
  std::filesystem::create_directories(dir);
  auto path = [&](const std::string& name) { return (std::filesystem::path(dir) / name).string(); };
  save_distribution_file(example1_distribution(), path("example1.dist"));
  save_graph_file(figure1_g1(), path("fig1_g1.pdg"));
  save_graph_file(figure1_g2(), path("fig1_g2.pdg"));
  save_graph_file(figure2_g1(), path("fig2_g1.pdg"));
  save_graph_file(figure2_g2(), path("fig2_g2.pdg"));
  std::vector<std::string> files{"example1.dist", "fig1_g1.pdg", "fig1_g2.pdg", "fig2_g1.pdg",
                                 "fig2_g2.pdg"};
  std::ostringstream text;
  json written = json::array();
  for (const auto& f : files) {
    text << path(f) << '\n';
    written.push_back(path(f));
  }
  out.emit(text.str(), make_document("fixtures", {}, {{"set", which}, {"dir", dir}},
                                     json{{"written", written}}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simultaneous causal effect identification over candidate SA-MPDAGs"};
  app.set_version_flag("--version", std::string("simident ") + kVersion);
  app.require_subcommand(1);

  // identify
  auto* identify_cmd = app.add_subcommand("identify", "Decide simultaneous identifiability");
  std::vector<std::string> id_graphs, id_x, id_y;
  Output id_out;
  identify_cmd->add_option("--graphs", id_graphs, "Graph files (SA-MPDAGs)")->required();
  identify_cmd->add_option("--x", id_x, "Treatment node names")->required();
  identify_cmd->add_option("--y", id_y, "Outcome node names")->required();
  id_out.add_flags(identify_cmd);

  // rm
  auto* rm_cmd = app.add_subcommand("rm", "Print the re-weight-and-marginalise graph");
  std::string rm_graph;
  std::vector<std::string> rm_x, rm_y;
  Output rm_out;
  rm_cmd->add_option("--graph", rm_graph, "Graph file")->required();
  rm_cmd->add_option("--x", rm_x, "Treatment node names")->required();
  rm_cmd->add_option("--y", rm_y, "Outcome node names")->required();
  rm_out.add_flags(rm_cmd);

  // extensions
  auto* ext_cmd = app.add_subcommand("extensions", "List all represented DAGs");
  std::string ext_graph;
  std::size_t ext_cap = kDefaultExtensionCap;
  Output ext_out;
  ext_cmd->add_option("--graph", ext_graph, "Graph file")->required();
  ext_cmd->add_option("--max", ext_cap, "Error out beyond this many extensions");
  ext_out.add_flags(ext_cmd);

  // equiv
  auto* eq_cmd = app.add_subcommand("equiv", "Chain-graph Markov equivalence of two graphs");
  std::string eq_g1, eq_g2;
  Output eq_out;
  eq_cmd->add_option("first", eq_g1, "First graph file")->required();
  eq_cmd->add_option("second", eq_g2, "Second graph file")->required();
  eq_out.add_flags(eq_cmd);

  // evaluate
  auto* ev_cmd = app.add_subcommand("evaluate", "Evaluate the identification formula");
  std::vector<std::string> ev_graphs, ev_do, ev_y;
  std::string ev_dist, ev_mode = "exact";
  double ev_tol = 1e-9;
  Output ev_out;
  ev_cmd->add_option("--graphs", ev_graphs, "Graph files")->required();
  ev_cmd->add_option("--distribution", ev_dist, "Distribution file")->required();
  ev_cmd->add_option("--do", ev_do, "Intervened values, NAME=STATE (index or label)")
      ->required();
  ev_cmd->add_option("--y", ev_y, "Outcome node names")->required();
  ev_cmd->add_option("--mode", ev_mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
  ev_cmd->add_option("--tol", ev_tol, "Comparison tolerance (float mode)");
  ev_out.add_flags(ev_cmd);

  // oracle
  auto* or_cmd = app.add_subcommand(
      "oracle", "Brute-force verification (with --distribution) or counterexample search");
  std::vector<std::string> or_graphs, or_do, or_x, or_y;
  std::string or_dist, or_mode = "exact";
  double or_tol = 1e-9;
  int or_arity = 2, or_trials = 100;
  unsigned long long or_seed = 0;
  Output or_out;
  or_cmd->add_option("--graphs", or_graphs, "Graph files")->required();
  or_cmd->add_option("--x", or_x, "Treatment node names")->required();
  or_cmd->add_option("--y", or_y, "Outcome node names")->required();
  or_cmd->add_option("--distribution", or_dist, "Distribution file (brute-force mode)");
  or_cmd->add_option("--do", or_do, "Intervened values, NAME=STATE");
  or_cmd->add_option("--mode", or_mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
  or_cmd->add_option("--tol", or_tol, "Comparison tolerance");
  or_cmd->add_option("--arity", or_arity, "States per variable (search mode)");
  or_cmd->add_option("--trials", or_trials, "Sampled densities (search mode)");
  or_cmd->add_option("--seed", or_seed, "Random seed (search mode)");
  or_out.add_flags(or_cmd);

  // fixtures
  auto* fx_cmd = app.add_subcommand("fixtures", "Write the bundled example assets");
  std::string fx_which, fx_dir;
  Output fx_out;
  fx_cmd->add_option("set", fx_which, "Fixture set name (example1)")->required();
  fx_cmd->add_option("--out", fx_dir, "Output directory (default: $SIMIDENT_OUT_DIR or .)");
  fx_out.add_flags(fx_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (identify_cmd->parsed())
      return run_identify(id_graphs, to_node_set(id_x), to_node_set(id_y), id_out);
    if (rm_cmd->parsed()) return run_rm(rm_graph, to_node_set(rm_x), to_node_set(rm_y), rm_out);
    if (ext_cmd->parsed()) return run_extensions(ext_graph, ext_cap, ext_out);
    if (eq_cmd->parsed()) return run_equiv(eq_g1, eq_g2, eq_out);
    if (ev_cmd->parsed()) {
      if (ev_mode == "exact")
        return run_evaluate_typed<Rational>(ev_graphs, ev_dist, ev_do, to_node_set(ev_y), ev_tol,
                                            ev_out);
      return run_evaluate_typed<double>(ev_graphs, ev_dist, ev_do, to_node_set(ev_y), ev_tol,
                                        ev_out);
    }
    if (or_cmd->parsed()) {
      if (!or_dist.empty()) {
        if (or_mode == "exact")
          return run_oracle_typed<Rational>(or_graphs, or_dist, or_do, to_node_set(or_x),
                                            to_node_set(or_y), or_tol, or_out);
        return run_oracle_typed<double>(or_graphs, or_dist, or_do, to_node_set(or_x),
                                        to_node_set(or_y), or_tol, or_out);
      }
      return run_counterexample(or_graphs, to_node_set(or_x), to_node_set(or_y), or_arity,
                                or_trials, or_seed, or_tol, or_out);
    }
    if (fx_cmd->parsed()) return run_fixtures(fx_which, fx_dir, fx_out);
  } catch (const parse_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
