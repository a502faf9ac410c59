#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "shortcycle/digraph.hpp"
#include "shortcycle/error.hpp"

namespace shortcycle {

// Adjacency as one 64-bit row per vertex, for the enumeration and sampling
// loops where building a Digraph per instance would dominate the cost.
class DenseDigraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  DenseDigraph() = default;
  explicit DenseDigraph(std::size_t n) : n_(n) {
    if (n > kMaxVertices) throw Error("dense digraph limited to 64 vertices");
  }

  std::size_t size() const noexcept { return n_; }
  std::uint64_t row(std::size_t v) const { return rows_[v]; }

  void set_row(std::size_t v, std::uint64_t bits) { rows_[v] = bits; }
  void add_edge(std::size_t u, std::size_t v) { rows_[u] |= bit(v); }
  void remove_edge(std::size_t u, std::size_t v) { rows_[u] &= ~bit(v); }
  bool has_edge(std::size_t u, std::size_t v) const {
    return (rows_[u] >> v) & 1u;
  }
  std::size_t outdegree(std::size_t v) const {
    return static_cast<std::size_t>(std::popcount(rows_[v]));
  }

  std::size_t min_outdegree() const {
    std::size_t best = n_ == 0 ? 0 : outdegree(0);
    for (std::size_t v = 1; v < n_; ++v) {
      const auto d = outdegree(v);
      if (d < best) best = d;
    }
    return best;
  }

  // Union of out-neighbourhoods of the vertices in `set`.
  std::uint64_t successors(std::uint64_t set) const {
    std::uint64_t result = 0;
    while (set != 0) {
      result |= rows_[std::countr_zero(set)];
      set &= set - 1;
    }
    return result;
  }

  // Exact girth, or nullopt if acyclic. Cycles longer than `cap` are not
  // searched for; a result is then absent even if such a cycle exists.
  std::optional<std::size_t> girth(std::size_t cap = kMaxVertices) const {
    std::size_t best = cap + 1;
    for (std::size_t v = 0; v < n_ && best > 1; ++v) {
      // reach holds the vertices reachable from v by walks of length 1..k.
      std::uint64_t reach = rows_[v];
      for (std::size_t k = 1; k < best; ++k) {
        if ((reach >> v) & 1u) {
          best = k;
          break;
        }
        const std::uint64_t next = reach | successors(reach);
        if (next == reach) break;
        reach = next;
      }
    }
    if (best > cap) return std::nullopt;
    return best;
  }

  Digraph to_digraph() const {
    Digraph g(n_);
    for (std::size_t u = 0; u < n_; ++u) {
      std::uint64_t r = rows_[u];
      while (r != 0) {
        g.add_edge(static_cast<Vertex>(u),
                   static_cast<Vertex>(std::countr_zero(r)));
        r &= r - 1;
      }
    }
    return g;
  }

  static DenseDigraph from_digraph(const Digraph& g) {
    DenseDigraph d(g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
      for (Vertex v : g.out(u)) d.add_edge(u, v);
    }
    return d;
  }

  friend bool operator==(const DenseDigraph&, const DenseDigraph&) = default;

 private:
  static constexpr std::uint64_t bit(std::size_t v) {
    return std::uint64_t{1} << v;
  }

  std::size_t n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

}  // namespace shortcycle
