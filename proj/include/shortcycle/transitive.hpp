#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shortcycle/cayley.hpp"
#include "shortcycle/digraph.hpp"
#include "shortcycle/groups.hpp"
#include "shortcycle/permutation.hpp"

namespace shortcycle::transitive {

inline constexpr std::size_t kMaxSearchVertices = 10;

inline bool is_automorphism(const Digraph& g, const Permutation& p) {
  if (p.degree() != g.size()) return false;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (g.outdegree(u) != g.outdegree(p(u))) return false;
    for (Vertex v : g.out(u)) {
      if (!g.has_edge(p(u), p(v))) return false;
    }
  }
  return true;
}

// A group of automorphisms of base_graph, listed with the identity first.
// The multiplication table (element i times element j is elements[i] after
// elements[j]) is only built when the order fits FiniteGroup::kMaxOrder.
class AutomorphismGroup {
 public:
  AutomorphismGroup(Digraph base, std::vector<Permutation> elements, std::string name = "Aut")
      : base_(std::move(base)), elements_(std::move(elements)) {
    if (elements_.empty() || !elements_[0].is_identity()) {
      throw Error("identity not at index 0");
    }
    for (const auto& p : elements_) {
      if (!is_automorphism(base_, p)) throw Error("not an automorphism: " + p.to_string());
    }
    if (elements_.size() <= FiniteGroup::kMaxOrder) {
      table_ = FiniteGroup::from_permutation_list(elements_, std::move(name));
    }
  }

  const Digraph& base_graph() const noexcept { return base_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool has_table() const noexcept { return table_.has_value(); }
  const FiniteGroup& as_group() const {
    if (!table_) throw Error("acting group too large for a multiplication table");
    return *table_;
  }

  // Orbit of v as a sorted list.
  std::vector<Vertex> orbit(Vertex v) const {
    std::vector<char> hit(base_.size(), 0);
    for (const auto& p : elements_) hit[p(v)] = 1;
    std::vector<Vertex> out;
    for (Vertex w = 0; w < base_.size(); ++w) {
      if (hit[w]) out.push_back(w);
    }
    return out;
  }

  bool acts_transitively() const {
    return base_.size() == 0 || orbit(0).size() == base_.size();
  }

 private:
  Digraph base_;
  std::vector<Permutation> elements_;
  std::optional<FiniteGroup> table_;
};

namespace detail {

// Backtracking over images of vertices 0, 1, ... in order, pruned by
// (outdegree, indegree, loop) and by adjacency with already-mapped vertices.
// Visits automorphisms in lexicographic order of their image arrays.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Digraph& g) : g_(g), image_(g.size()), used_(g.size(), 0) {}

  // Calls visit(images) for each automorphism with image[0] == first (any
  // image if first is absent); stops when visit returns false.
  template <typename Visit>
  void run(std::optional<Vertex> first, Visit&& visit) {
    stop_ = false;
    if (g_.size() == 0) {
      visit(image_);
      return;
    }
    extend(0, first, visit);
  }

 private:
  bool compatible(Vertex v, Vertex w) const {
    if (g_.outdegree(v) != g_.outdegree(w) || g_.indegree(v) != g_.indegree(w)) return false;
    if (g_.has_edge(v, v) != g_.has_edge(w, w)) return false;
    for (Vertex u = 0; u < v; ++u) {
      if (g_.has_edge(u, v) != g_.has_edge(image_[u], w)) return false;
      if (g_.has_edge(v, u) != g_.has_edge(w, image_[u])) return false;
    }
    return true;
  }

  template <typename Visit>
  void extend(Vertex v, std::optional<Vertex> first, Visit& visit) {
    if (v == g_.size()) {
      if (!visit(image_)) stop_ = true;
      return;
    }
    for (Vertex w = 0; w < g_.size() && !stop_; ++w) {
      if (used_[w]) continue;
      if (v == 0 && first && w != *first) continue;
      if (!compatible(v, w)) continue;
      image_[v] = w;
      used_[w] = 1;
      extend(v + 1, first, visit);
      used_[w] = 0;
    }
  }

  const Digraph& g_;
  std::vector<std::uint32_t> image_;
  std::vector<char> used_;
  bool stop_ = false;
};

inline void require_searchable(const Digraph& g) {
  if (g.size() > kMaxSearchVertices) {
    throw Error("graph too large for automorphism search (n = " + std::to_string(g.size()) +
                " > " + std::to_string(kMaxSearchVertices) + ")");
  }
}

}  // namespace detail

// The full automorphism group. Throws if the graph has more than ten
// vertices or the group has more than max_order elements.
inline AutomorphismGroup automorphism_group(const Digraph& g,
                                            std::size_t max_order = FiniteGroup::kMaxOrder) {
  detail::require_searchable(g);
  std::vector<Permutation> elements;
  bool too_large = false;
  detail::AutomorphismSearch search(g);
  search.run(std::nullopt, [&](const std::vector<std::uint32_t>& images) {
    if (elements.size() == max_order) {
      too_large = true;
      return false;
    }
    elements.emplace_back(images);
    return true;
  });
  if (too_large) throw Error("automorphism group larger than " + std::to_string(max_order));
  return AutomorphismGroup(g, std::move(elements));
}

// Group generated by the given automorphisms.
inline AutomorphismGroup generated_group(const Digraph& g, std::span<const Permutation> generators,
                                         std::size_t max_order = FiniteGroup::kMaxOrder) {
  auto elements = FiniteGroup::permutation_closure(generators, g.size(), max_order);
  return AutomorphismGroup(g, std::move(elements), "generated");
}

// Left translations v -> xv of a Cayley graph, in group element order.
inline AutomorphismGroup left_translations(const cayley::CayleySpec& spec) {
  const auto& grp = spec.group;
  std::vector<Permutation> elements;
  elements.reserve(grp.order());
  for (Element x = 0; x < grp.order(); ++x) {
    std::vector<std::uint32_t> images(grp.order());
    for (Element v = 0; v < grp.order(); ++v) images[v] = grp.mul(x, v);
    elements.emplace_back(std::move(images));
  }
  return AutomorphismGroup(cayley::build(spec), std::move(elements), "translations of " + grp.name());
}

struct TransitivityResult {
  bool transitive = false;
  // Acting group when transitive: the full automorphism group if it is
  // small enough for a table, else the group generated by the automorphisms
  // found while testing, else absent.
  std::optional<AutomorphismGroup> group;
};

// Whether the orbit of vertex 0 under Aut(g) is every vertex; decided by
// searching, for each v, one automorphism sending 0 to v.
inline TransitivityResult is_vertex_transitive(const Digraph& g) {
  detail::require_searchable(g);
  TransitivityResult result;
  std::vector<Permutation> generators;
  detail::AutomorphismSearch search(g);
  for (Vertex v = 1; v < g.size(); ++v) {
    bool found = false;
    search.run(v, [&](const std::vector<std::uint32_t>& images) {
      generators.emplace_back(images);
      found = true;
      return false;
    });
    if (!found) return result;
  }
  result.transitive = true;
  try {
    result.group = automorphism_group(g);
  } catch (const Error&) {
    try {
      result.group = generated_group(g, generators);
    } catch (const Error&) {
      result.group.reset();
    }
  }
  return result;
}

// Elements of the acting group fixing v.
inline GroupSubset stabilizer(const AutomorphismGroup& ag, Vertex v) {
  if (v >= ag.base_graph().size()) throw Error("invalid vertex " + std::to_string(v));
  GroupSubset h(ag.as_group());
  for (Element i = 0; i < ag.order(); ++i) {
    if (ag.elements()[i](v) == v) h.insert(i);
  }
  return h;
}

// For each vertex v, the first element (in list order) sending vertex 0 to v.
inline std::vector<Element> coset_representatives(const AutomorphismGroup& ag) {
  const std::size_t n = ag.base_graph().size();
  constexpr Element kNone = std::numeric_limits<Element>::max();
  std::vector<Element> reps(n, kNone);
  for (Element i = 0; i < ag.order(); ++i) {
    const Vertex w = ag.elements()[i](0);
    if (reps[w] == kNone) reps[w] = i;
  }
  for (auto r : reps) {
    if (r == kNone) throw Error("non-transitive group");
  }
  return reps;
}

struct HamidouneResult {
  Cycle cycle;
  std::vector<Element> factors;  // a1 ... al = 1 in the acting group
  std::size_t degree;            // d
  std::size_t bound;             // ceil(n / d)
  GroupSubset connection;        // A = {x : (v0, x v0) in E}
  GroupSubset stabilizer;        // H0
};

// Short cycle in a vertex-transitive graph through the Cayley graph of its
// acting group. With v0 = 0 and H0 its stabiliser, A = {x : (v0, x v0) in E}
// is a union of d left cosets of H0, so |A| = d |H0| and |group| = n |H0|;
// the Cayley graph of (group, A) has a cycle a1 ... al = 1 with
// l <= ceil(n / d), and v_i = a1 ... ai v0 is a cycle of g of that length.
inline HamidouneResult hamidoune_cycle(const Digraph& g, const AutomorphismGroup& ag) {
  if (!(ag.base_graph() == g)) throw Error("acting group belongs to a different graph");
  if (g.size() == 0) throw Error("empty graph");
  if (!ag.acts_transitively()) throw Error("non-transitive group");
  const std::size_t n = g.size();
  const std::size_t d = g.outdegree(0);
  if (d == 0) throw Error("degree-0 graph");

  const FiniteGroup& grp = ag.as_group();
  const auto& elems = ag.elements();
  GroupSubset h0 = stabilizer(ag, 0);
  GroupSubset a(grp);
  for (Element x = 0; x < grp.order(); ++x) {
    if (g.has_edge(0, elems[x](0))) a.insert(x);
  }

  SHORTCYCLE_ENSURE(grp.order() == n * h0.size(), "orbit-stabilizer count");
  std::size_t cosets_in_a = 0;
  for (const auto& coset : left_cosets(grp, h0)) {
    const std::size_t inside = (coset & a).size();
    SHORTCYCLE_ENSURE(inside == 0 || inside == coset.size(), "A is not a union of left cosets");
    if (inside) ++cosets_in_a;
  }
  SHORTCYCLE_ENSURE(cosets_in_a == d && a.size() == d * h0.size(), "|A| != d |H0|");

  const cayley::CayleySpec spec(grp, a);
  auto factors = cayley::identity_factorization(spec);
  SHORTCYCLE_ENSURE(factors.has_value(), "Cayley graph of the acting group is acyclic");

  Cycle cycle;
  cycle.vertices.push_back(0);
  Element prefix = FiniteGroup::identity();
  for (Element f : *factors) {
    prefix = grp.mul(prefix, f);
    cycle.vertices.push_back(elems[prefix](0));
  }
  for (std::size_t i = 1; i < cycle.vertices.size(); ++i) {
    SHORTCYCLE_ENSURE(g.has_edge(cycle.vertices[i - 1], cycle.vertices[i]),
                      "projected step is not an edge");
  }
  SHORTCYCLE_ENSURE(cycle.vertices.back() == 0, "projected walk does not close");

  const std::size_t bound = (n + d - 1) / d;
  SHORTCYCLE_ENSURE(cycle.length() <= bound, "cycle longer than ceil(n/d)");
  return HamidouneResult{std::move(cycle), std::move(*factors), d, bound, std::move(a), std::move(h0)};
}

}  // namespace shortcycle::transitive
