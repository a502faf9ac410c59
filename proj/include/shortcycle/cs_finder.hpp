#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "shortcycle/digraph.hpp"
#include "shortcycle/error.hpp"

// Short-cycle finder for digraphs of minimum outdegree r. Each round picks
// a vertex v0 of maximum indegree and either exhibits a loop, digon or
// triangle through it, or deletes v0 and its in-neighbours A while routing
// every surviving vertex v to the out-neighbours B of v0 through "new
// edges" (v, b), each standing for the path v -> a -> v0 -> b. The smaller
// graph keeps minimum outdegree r, so the rounds end; the final cycle is
// then lifted back level by level.
namespace shortcycle::cs {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct NewEdge {
  Vertex tail;  // parent-graph indices
  Vertex head;
  Vertex via;   // a in A with (tail, a) an edge of the parent graph
};

struct ReductionStep {
  Vertex pivot;
  std::vector<Vertex> in_set;   // A
  std::vector<Vertex> out_set;  // B
  std::vector<NewEdge> new_edges;
  Digraph reduced_graph;
  std::vector<Vertex> to_parent;  // reduced index -> parent vertex
  std::vector<Vertex> via;        // reduced index -> replacement a, or kNoVertex
};

namespace detail {

inline Cycle make_cycle(std::initializer_list<Vertex> vs) {
  return Cycle{std::vector<Vertex>(vs)};
}

}  // namespace detail

// One round. Returns a cycle of length at most 3 through the pivot when the
// pivot's neighbourhood already contains one, otherwise the reduction.
// Requires minimum outdegree >= r.
inline std::variant<Cycle, ReductionStep> reduce(const Digraph& g, std::size_t r) {
  const std::size_t n = g.size();
  const Vertex v0 = max_indegree_vertex(g).vertex;

  std::vector<char> in_a(n, 0), in_b(n, 0);
  std::vector<Vertex> a_set, b_set;
  for (Vertex u = 0; u < n; ++u) {
    if (g.has_edge(u, v0)) {
      in_a[u] = 1;
      a_set.push_back(u);
    }
  }
  for (Vertex b : g.out(v0)) {
    in_b[b] = 1;
    b_set.push_back(b);
  }

  if (in_a[v0]) return detail::make_cycle({v0, v0});
  for (Vertex b : b_set) {
    if (in_a[b]) return detail::make_cycle({v0, b, v0});
  }
  for (Vertex b : b_set) {
    for (Vertex w : g.out(b)) {
      if (in_a[w]) return detail::make_cycle({v0, b, w, v0});
    }
  }

  SHORTCYCLE_ENSURE(a_set.size() >= r && b_set.size() >= r, "pivot degrees below r");
  SHORTCYCLE_ENSURE(n >= 2 * r + 1, "disjoint A, B, v0 need n >= 2r + 1");

  ReductionStep step;
  step.pivot = v0;
  step.in_set = a_set;
  step.out_set = b_set;

  std::vector<Vertex> to_reduced(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (v == v0 || in_a[v]) continue;
    to_reduced[v] = static_cast<Vertex>(step.to_parent.size());
    step.to_parent.push_back(v);
  }
  const std::size_t reduced_n = step.to_parent.size();
  SHORTCYCLE_ENSURE(reduced_n + r + 1 <= n, "reduced graph too large");

  step.reduced_graph = Digraph(reduced_n);
  step.via.assign(reduced_n, kNoVertex);
  for (Vertex i = 0; i < reduced_n; ++i) {
    const Vertex v = step.to_parent[i];
    std::size_t d_a = 0, d_b = 0;
    Vertex first_a = kNoVertex;
    for (Vertex w : g.out(v)) {
      SHORTCYCLE_ENSURE(w != v0, "surviving vertex points at the pivot");
      if (in_a[w]) {
        if (d_a++ == 0) first_a = w;
        continue;
      }
      if (in_b[w]) ++d_b;
      step.reduced_graph.add_edge(i, to_reduced[w]);
    }
    if (in_b[v]) SHORTCYCLE_ENSURE(d_a == 0, "B vertex with an edge into A");

    const std::size_t d_new = std::min(d_a, b_set.size() - d_b);
    std::size_t added = 0;
    for (Vertex b : b_set) {
      if (added == d_new) break;
      if (g.has_edge(v, b)) continue;
      step.reduced_graph.add_edge(i, to_reduced[b]);
      step.new_edges.push_back(NewEdge{v, b, first_a});
      ++added;
    }
    if (added > 0) step.via[i] = first_a;
  }

  for (Vertex i = 0; i < reduced_n; ++i) {
    SHORTCYCLE_ENSURE(step.reduced_graph.outdegree(i) >= r,
                      "reduced graph lost the outdegree bound");
  }
  return step;
}

// Maps a cycle of the reduced graph back to the parent graph: every new edge
// becomes tail -> a -> v0 -> head, and if any were used the resulting closed
// walk is cut at each visit of v0 and the shortest piece returned.
inline Cycle lift(const ReductionStep& step, const Digraph& parent, const Cycle& reduced) {
  const auto& rv = reduced.vertices;
  std::vector<Vertex> walk{step.to_parent[rv.front()]};
  std::size_t new_count = 0;
  for (std::size_t i = 1; i < rv.size(); ++i) {
    const Vertex x = step.to_parent[rv[i - 1]];
    const Vertex y = step.to_parent[rv[i]];
    if (!parent.has_edge(x, y)) {
      const Vertex a = step.via[rv[i - 1]];
      SHORTCYCLE_ENSURE(a != kNoVertex, "new edge without replacement path");
      walk.push_back(a);
      walk.push_back(step.pivot);
      ++new_count;
    }
    walk.push_back(y);
  }
  const std::size_t lifted_length = walk.size() - 1;
  SHORTCYCLE_ENSURE(lifted_length == reduced.length() + 2 * new_count,
                    "lifted walk length accounting");
  if (new_count == 0) return Cycle{std::move(walk)};

  // Rotate the closed walk to start at the pivot, then split it there.
  const std::size_t start =
      static_cast<std::size_t>(std::find(walk.begin(), walk.end(), step.pivot) - walk.begin());
  std::vector<Vertex> rotated(walk.begin() + static_cast<std::ptrdiff_t>(start), walk.end() - 1);
  rotated.insert(rotated.end(), walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(start));
  rotated.push_back(step.pivot);

  std::vector<std::size_t> cuts;
  for (std::size_t i = 0; i < rotated.size(); ++i) {
    if (rotated[i] == step.pivot) cuts.push_back(i);
  }
  SHORTCYCLE_ENSURE(cuts.size() == new_count + 1, "pivot visits differ from new-edge count");

  std::size_t best = 0, total = 0;
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    const std::size_t len = cuts[k] - cuts[k - 1];
    total += len;
    if (k == 1 || len < cuts[best + 1] - cuts[best]) best = k - 1;
  }
  SHORTCYCLE_ENSURE(total == lifted_length, "decomposition lengths do not add up");

  return Cycle{std::vector<Vertex>(rotated.begin() + static_cast<std::ptrdiff_t>(cuts[best]),
                                   rotated.begin() + static_cast<std::ptrdiff_t>(cuts[best + 1]) + 1)};
}

// Exact rational 2n/(r+1), in lowest terms.
struct Rational {
  std::int64_t num;
  std::int64_t den;

  std::int64_t floor() const { return num / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rational cs_bound(std::int64_t n, std::int64_t r) {
  if (r < 1 || n < r) throw Error("cs bound needs n >= r >= 1");
  const std::int64_t num = 2 * n, den = r + 1;
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

// ln((2 + sqrt 7) / 3) = 0.4373...
inline long double shen_constant() {
  return std::log((2.0L + std::sqrt(7.0L)) / 3.0L);
}

// 3 * ceil(ln((2 + sqrt 7)/3) * n / r), roughly 1.312 n / r.
inline std::int64_t shen_bound(std::int64_t n, std::int64_t r) {
  if (n < 1 || r < 1) throw Error("shen bound needs n, r >= 1");
  const long double x = shen_constant() * static_cast<long double>(n) / static_cast<long double>(r);
  return 3 * static_cast<std::int64_t>(std::ceil(x));
}

// A cycle of length at most floor(2n / (r + 1)) in a graph whose vertices
// all have outdegree >= r. Rounds run iteratively; the stack holds one
// reduction per level.
inline Cycle find_short_cycle(const Digraph& g, std::size_t r) {
  if (r == 0) throw Error("r must be positive");
  if (g.size() < r) throw Error("need n >= r");
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.outdegree(v) < r) {
      throw Error("precondition: vertex " + std::to_string(v) + " has outdegree " +
                  std::to_string(g.outdegree(v)) + " < r = " + std::to_string(r));
    }
  }

  std::deque<ReductionStep> stack;
  const Digraph* current = &g;
  Cycle cycle;
  for (;;) {
    auto outcome = reduce(*current, r);
    if (auto* c = std::get_if<Cycle>(&outcome)) {
      cycle = std::move(*c);
      break;
    }
    stack.push_back(std::move(std::get<ReductionStep>(outcome)));
    current = &stack.back().reduced_graph;
  }
  SHORTCYCLE_ENSURE(cycle.length() * (r + 1) <= 2 * current->size(),
                    "short cycle exceeds 2n/(r+1) at the last level");
  for (std::size_t i = stack.size(); i-- > 0;) {
    const Digraph& parent = i == 0 ? g : stack[i - 1].reduced_graph;
    cycle = lift(stack[i], parent, cycle);
    SHORTCYCLE_ENSURE(cycle.length() * (r + 1) <= 2 * parent.size(),
                      "lifted cycle exceeds 2n/(r+1)");
  }
  SHORTCYCLE_ENSURE(is_valid_cycle(g, cycle), "result is not a cycle of the input");
  SHORTCYCLE_ENSURE(cycle.length() * (r + 1) <= 2 * g.size(), "result exceeds 2n/(r+1)");
  return cycle;
}

}  // namespace shortcycle::cs
