#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "simident/distribution.hpp"
#include "simident/graph_io.hpp"  // parse_error

namespace simident {

// Distribution text format. Header lines declare variables in order, then
// one body section:
//
//   var 1 8
//   var 4 36 labels 0000 0001 ...
//   dense:
//   1/512 0 3/512 ...          # mixed-radix row-major, last variable fastest
//
// or
//
//   sparse:
//   0 3 2 17  1/512            # one state token per variable, then the value
//
// State tokens may be indices or labels. Values are "num/den" fractions,
// integers or decimals; decimals are exact in rational mode.

namespace detail {

inline std::vector<std::string> dist_tokens(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

inline int state_of(const VariableSpec& v, const std::string& tok, const std::string& source,
                    std::size_t lineno) {
  for (std::size_t i = 0; i < v.labels.size(); ++i)
    if (v.labels[i] == tok) return static_cast<int>(i);
  try {
    std::size_t pos = 0;
    int s = std::stoi(tok, &pos);
    if (pos == tok.size() && s >= 0 && static_cast<std::size_t>(s) < v.cardinality) return s;
  } catch (const std::exception&) {
  }
  throw parse_error(source, lineno,
                    "'" + tok + "' is not a state of variable '" + v.name + "'");
}

}  // namespace detail

template <class Num>
DiscreteDistribution<Num> parse_distribution(std::istream& in,
                                             const std::string& source = "<distribution>") {
  std::vector<VariableSpec> vars;
  std::string line;
  std::size_t lineno = 0;
  enum { header, dense, sparse } section = header;
  std::vector<Num> values;
  std::vector<char> seen;  // sparse duplicate detection
  std::vector<std::size_t> strides;
  std::size_t size = 0;

  auto begin_body = [&](bool is_dense) {
    if (vars.empty()) throw parse_error(source, lineno, "no variables declared");
    size = detail::table_size_for(vars);
    strides = detail::strides_for(vars);
    values.assign(size, NumericConstants<Num>::zero());
    if (!is_dense) seen.assign(size, 0);
    section = is_dense ? dense : sparse;
  };

  std::size_t dense_filled = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::dist_tokens(line);
    if (toks.empty()) continue;
    try {
      if (section == header) {
        if (toks[0] == "var") {
          if (toks.size() < 3) throw std::invalid_argument("expected: var NAME CARDINALITY");
          VariableSpec v;
          v.name = toks[1];
          v.cardinality = static_cast<std::size_t>(std::stoul(toks[2]));
          if (toks.size() > 3) {
            if (toks[3] != "labels") throw std::invalid_argument("expected 'labels'");
            v.labels.assign(toks.begin() + 4, toks.end());
          }
          vars.push_back(std::move(v));
        } else if (toks[0] == "dense:") {
          begin_body(true);
          for (std::size_t t = 1; t < toks.size(); ++t) {
            if (dense_filled >= size) throw std::invalid_argument("too many dense values");
            values[dense_filled++] = parse_number<Num>(toks[t]);
          }
        } else if (toks[0] == "sparse:") {
          if (toks.size() > 1)
            throw std::invalid_argument("sparse entries start on the following lines");
          begin_body(false);
        } else {
          throw std::invalid_argument("unrecognised statement '" + toks[0] + "'");
        }
      } else if (section == dense) {
        for (const auto& t : toks) {
          if (dense_filled >= size) throw std::invalid_argument("too many dense values");
          values[dense_filled++] = parse_number<Num>(t);
        }
      } else {
        if (toks.size() != vars.size() + 1)
          throw std::invalid_argument("expected " + std::to_string(vars.size()) +
                                      " state tokens and one value");
        std::size_t idx = 0;
        for (std::size_t i = 0; i < vars.size(); ++i)
          idx += static_cast<std::size_t>(detail::state_of(vars[i], toks[i], source, lineno)) *
                 strides[i];
        if (seen[idx]) throw std::invalid_argument("duplicate sparse entry");
        seen[idx] = 1;
        values[idx] = parse_number<Num>(toks.back());
      }
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception& e) {
      throw parse_error(source, lineno, e.what());
    }
  }
  if (section == header) throw parse_error(source, lineno, "missing 'dense:' or 'sparse:' section");
  if (section == dense && dense_filled != size)
    throw parse_error(source, lineno,
                      "dense section has " + std::to_string(dense_filled) + " values, expected " +
                          std::to_string(size));
  try {
    return DiscreteDistribution<Num>(std::move(vars), std::move(values));
  } catch (const std::exception& e) {
    throw parse_error(source, lineno, e.what());
  }
}

template <class Num>
DiscreteDistribution<Num> load_distribution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path, 0, "cannot open file");
  return parse_distribution<Num>(in, path);
}

/// Sparse form listing only positive entries (labels when available).
template <class Num>
std::string write_distribution(const DiscreteDistribution<Num>& p) {
  std::ostringstream os;
  for (const auto& v : p.variables()) {
    os << "var " << v.name << ' ' << v.cardinality;
    if (!v.labels.empty()) {
      os << " labels";
      for (const auto& l : v.labels) os << ' ' << l;
    }
    os << '\n';
  }
  os << "sparse:\n";
  for (std::size_t idx = 0; idx < p.table_size(); ++idx) {
    if (num_is_zero(p.prob(idx))) continue;
    Assignment a = p.decode(idx);
    for (std::size_t i = 0; i < p.variables().size(); ++i)
      os << p.variables()[i].state_name(a[i]) << ' ';
    os << ' ' << format_number(p.prob(idx)) << '\n';
  }
  return os.str();
}

template <class Num>
void save_distribution_file(const DiscreteDistribution<Num>& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << write_distribution(p);
}

}  // namespace simident
