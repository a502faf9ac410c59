#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shortcycle/error.hpp"

namespace shortcycle {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite directed graph on vertices 0..n-1. Loops are allowed, parallel edges
// are not: adding an existing edge is a no-op. Out-neighbour lists are kept
// sorted so every traversal visits neighbours in increasing index order.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n), indegree_(n, 0) {}

  static Digraph from_edges(std::size_t n, std::span<const Edge> edges) {
    Digraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  // Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    if (u >= size() || v >= size()) {
      throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") out of range for " + std::to_string(size()) + " vertices");
    }
    auto& row = out_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it != row.end() && *it == v) return false;
    row.insert(it, v);
    ++indegree_[v];
    ++num_edges_;
    return true;
  }

  std::size_t size() const noexcept { return out_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::size_t outdegree(Vertex v) const { return out_[v].size(); }
  std::size_t indegree(Vertex v) const { return indegree_[v]; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= size() || v >= size()) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
  }

  // Edges in (tail, head) lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    result.reserve(num_edges_);
    for (Vertex u = 0; u < size(); ++u) {
      for (Vertex v : out_[u]) result.emplace_back(u, v);
    }
    return result;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::size_t> indegree_;
  std::size_t num_edges_ = 0;
};

// A closed walk v0, v1, ..., vl with v0 == vl. The length is the number of
// edges, l = vertices.size() - 1.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline bool is_valid_cycle(const Digraph& g, const Cycle& c) {
  if (c.vertices.size() < 2) return false;
  if (c.vertices.front() != c.vertices.back()) return false;
  for (std::size_t i = 1; i < c.vertices.size(); ++i) {
    if (!g.has_edge(c.vertices[i - 1], c.vertices[i])) return false;
  }
  return true;
}

struct GirthResult {
  std::size_t length;
  Cycle witness;
};

// Exact girth by breadth-first search from every vertex. The shortest closed
// walk through s is found from the BFS distances of the in-neighbours of s;
// the first source (in increasing order) that attains the minimum supplies
// the witness, closing through its smallest qualifying in-neighbour.
inline std::optional<GirthResult> girth(const Digraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

  std::size_t best = kUnseen;
  Cycle witness;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (Vertex s = 0; s < n && best > 1; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    queue.clear();
    dist[s] = 0;
    queue.push_back(s);
    // A cycle through s of length L needs a vertex at distance L-1, so the
    // search stops expanding once distance best-2 has been processed.
    std::size_t closing = kUnseen;
    std::size_t closing_len = best;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (dist[u] + 1 >= closing_len) break;
      for (Vertex w : g.out(u)) {
        if (w == s) {
          if (dist[u] + 1 < closing_len) {
            closing_len = dist[u] + 1;
            closing = u;
          }
          continue;
        }
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (closing == kUnseen) continue;

    best = closing_len;
    std::vector<Vertex> path;
    for (Vertex v = static_cast<Vertex>(closing); v != s; v = parent[v]) {
      path.push_back(v);
    }
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    path.push_back(s);
    witness.vertices = std::move(path);
  }

  if (best == kUnseen) return std::nullopt;
  return GirthResult{best, std::move(witness)};
}

inline std::size_t min_outdegree(const Digraph& g) {
  if (g.size() == 0) throw Error("empty graph");
  std::size_t best = g.outdegree(0);
  for (Vertex v = 1; v < g.size(); ++v) best = std::min(best, g.outdegree(v));
  return best;
}

struct DegreeWitness {
  Vertex vertex;
  std::size_t degree;
};

// Vertex of maximum indegree, smallest index on ties. Because indegrees and
// outdegrees have the same sum, the result is never below the minimum
// outdegree.
inline DegreeWitness max_indegree_vertex(const Digraph& g) {
  if (g.size() == 0) throw Error("empty graph");
  DegreeWitness best{0, g.indegree(0)};
  for (Vertex v = 1; v < g.size(); ++v) {
    if (g.indegree(v) > best.degree) best = {v, g.indegree(v)};
  }
  return best;
}

inline bool has_loop(const Digraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.has_edge(v, v)) return true;
  }
  return false;
}

inline bool has_digon(const Digraph& g) {
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v : g.out(u)) {
      if (v > u && g.has_edge(v, u)) return true;
    }
  }
  return false;
}

// First-neighbourhood and second-neighbourhood sizes of v. The second
// neighbourhood excludes the first one; on oriented graphs it also never
// contains v itself.
inline std::pair<std::size_t, std::size_t> neighborhood_sizes(const Digraph& g,
                                                              Vertex v) {
  std::vector<char> first(g.size(), 0), second(g.size(), 0);
  for (Vertex w : g.out(v)) first[w] = 1;
  std::size_t count = 0;
  for (Vertex w : g.out(v)) {
    for (Vertex x : g.out(w)) {
      if (!first[x] && !second[x]) {
        second[x] = 1;
        ++count;
      }
    }
  }
  return {g.outdegree(v), count};
}

// Some vertex v with |N+(v)| <= |N++(v)|, smallest index first. An absent
// result would be a counterexample to the second neighbourhood conjecture.
inline std::optional<Vertex> second_neighborhood_witness(const Digraph& g) {
  if (has_loop(g) || has_digon(g)) {
    throw Error("precondition: oriented graph required");
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    auto [first, second] = neighborhood_sizes(g, v);
    if (first <= second) return v;
  }
  return std::nullopt;
}

}  // namespace shortcycle
