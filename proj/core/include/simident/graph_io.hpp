#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "simident/graph.hpp"

namespace simident {

/// Parse/format error carrying a source name and 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(source),
        line_(line) {}
  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Graph text format, one statement per line, '#' starts a comment:
//   nodes A B C D
//   A -> B
//   A -- B
// Rejects duplicate edges, self-loops and undeclared nodes.
PDGraph parse_graph(std::istream& in, const std::string& source = "<graph>");
PDGraph parse_graph_string(const std::string& text, const std::string& source = "<graph>");
PDGraph load_graph_file(const std::string& path);

// Canonical form: sorted node list, then sorted directed and undirected edges.
std::string write_graph(const PDGraph& g);
void save_graph_file(const PDGraph& g, const std::string& path);

}  // namespace simident
