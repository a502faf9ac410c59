#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shortcycle/digraph.hpp"
#include "shortcycle/error.hpp"
#include "shortcycle/group_catalog.hpp"
#include "shortcycle/groups.hpp"

namespace shortcycle::io {

namespace detail {

inline bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Reads exactly `count` non-negative integers from one line.
inline std::vector<std::uint64_t> read_integers(const std::string& line, std::size_t count,
                                                std::size_t line_no, const char* what) {
  std::istringstream in(line);
  std::vector<std::uint64_t> values;
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(line_no, std::string("expected ") + what + ", got '" + token + "'");
    }
    try {
      values.push_back(std::stoull(token));
    } catch (const std::out_of_range&) {
      throw ParseError(line_no, "integer out of range '" + token + "'");
    }
  }
  if (values.size() != count) {
    throw ParseError(line_no, std::string("expected ") + what);
  }
  return values;
}

inline std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

}  // namespace detail

// "n m", then m lines "u v" with 0-based vertices.
inline Digraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](const char* missing) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!detail::blank(line)) return;
    }
    throw ParseError(line_no + 1, missing);
  };

  next_line("missing header 'n m'");
  const auto header = detail::read_integers(line, 2, line_no, "header 'n m'");
  const std::uint64_t n = header[0], m = header[1];
  if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");

  Digraph g(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < m; ++i) {
    next_line("fewer edges than the header declares");
    const auto e = detail::read_integers(line, 2, line_no, "edge 'u v'");
    if (e[0] >= n || e[1] >= n) {
      throw ParseError(line_no, "vertex out of range in edge (" + std::to_string(e[0]) + "," +
                                    std::to_string(e[1]) + ")");
    }
    if (!g.add_edge(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]))) {
      throw ParseError(line_no, "duplicate edge (" + std::to_string(e[0]) + "," +
                                    std::to_string(e[1]) + ")");
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!detail::blank(line)) throw ParseError(line_no, "unexpected content after the edge list");
  }
  return g;
}

inline Digraph read_edge_list_file(const std::string& path) {
  auto in = detail::open(path);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Digraph& g) {
  out << g.size() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// "n", then n lines of n integers; element 0 must be the identity.
inline FiniteGroup read_group_table(std::istream& in, std::string name = "table") {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](const char* missing) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!detail::blank(line)) return;
    }
    throw ParseError(line_no + 1, missing);
  };
  next_line("missing order line");
  const auto n = detail::read_integers(line, 1, line_no, "group order")[0];
  if (n == 0 || n > FiniteGroup::kMaxOrder) throw ParseError(line_no, "group order out of range");
  std::vector<std::vector<std::int64_t>> rows;
  for (std::uint64_t i = 0; i < n; ++i) {
    next_line("fewer table rows than the order");
    const auto row = detail::read_integers(line, static_cast<std::size_t>(n), line_no, "a table row of n entries");
    rows.emplace_back(row.begin(), row.end());
  }
  try {
    return FiniteGroup::from_table(rows, std::move(name));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(std::string("invalid group table: ") + e.what());
  }
}

inline void write_group_table(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
}

// "cyclic:N", "table:PATH", or a catalogue name such as "s3" or "q8".
inline FiniteGroup parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "cyclic") {
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("group spec 'cyclic:N' needs a positive integer");
    }
    return FiniteGroup::cyclic(std::stoull(arg));
  }
  if (kind == "table") {
    if (arg.empty()) throw Error("group spec 'table:PATH' needs a path");
    auto in = detail::open(arg);
    return read_group_table(in, arg);
  }
  if (colon == std::string::npos) return catalog::by_name(spec);
  throw Error("unknown group spec '" + spec + "'");
}

// Comma-separated element indices, e.g. "1,2,5". Empty string is the empty set.
inline GroupSubset parse_subset(const FiniteGroup& g, const std::string& list) {
  GroupSubset s(g);
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    token = token.substr(first, token.find_last_not_of(" \t") - first + 1);
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("bad set element '" + token + "'");
    }
    const auto x = std::stoull(token);
    if (x >= g.order()) throw Error("set element " + token + " out of range for " + g.name());
    s.insert(static_cast<Element>(x));
  }
  return s;
}

inline std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

}  // namespace shortcycle::io
