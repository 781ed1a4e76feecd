#include "simident/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace simident {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

}  // namespace

PDGraph parse_graph(std::istream& in, const std::string& source) {
  PDGraph g;
  std::string line;
  std::size_t lineno = 0;
  bool saw_nodes = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    try {
      if (toks[0] == "nodes") {
        for (std::size_t i = 1; i < toks.size(); ++i) g.add_node(toks[i]);
        saw_nodes = true;
      } else if (toks.size() == 3 && toks[1] == "->") {
        if (!saw_nodes) throw std::invalid_argument("edge before any 'nodes' line");
        if (!g.has_node(toks[0]) || !g.has_node(toks[2]))
          throw std::invalid_argument("undeclared node in edge");
        g.add_directed_edge(toks[0], toks[2]);
      } else if (toks.size() == 3 && toks[1] == "--") {
        if (!saw_nodes) throw std::invalid_argument("edge before any 'nodes' line");
        if (!g.has_node(toks[0]) || !g.has_node(toks[2]))
          throw std::invalid_argument("undeclared node in edge");
        g.add_undirected_edge(toks[0], toks[2]);
      } else {
        throw std::invalid_argument("unrecognised statement '" + toks[0] + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw parse_error(source, lineno, e.what());
    }
  }
  if (!saw_nodes) throw parse_error(source, lineno, "missing 'nodes' line");
  return g;
}

PDGraph parse_graph_string(const std::string& text, const std::string& source) {
  std::istringstream is(text);
  return parse_graph(is, source);
}

PDGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path, 0, "cannot open file");
  return parse_graph(in, path);
}

std::string write_graph(const PDGraph& g) { return canonical_serialization(g); }

void save_graph_file(const PDGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << write_graph(g);
}

}  // namespace simident
