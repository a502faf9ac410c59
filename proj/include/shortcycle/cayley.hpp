#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "shortcycle/digraph.hpp"
#include "shortcycle/groups.hpp"

namespace shortcycle::cayley {

// Cayley(group, connection): vertices are group elements, edges (v, va) for
// a in the connection set.
struct CayleySpec {
  FiniteGroup group;
  GroupSubset connection;

  CayleySpec(FiniteGroup g, GroupSubset a) : group(std::move(g)), connection(std::move(a)) {
    if (!connection.group().same_as(group)) {
      throw Error("connection set belongs to a different group");
    }
  }
};

inline Digraph build(const CayleySpec& spec) {
  const auto& g = spec.group;
  Digraph graph(g.order());
  const auto as = spec.connection.elements();
  for (Element v = 0; v < g.order(); ++v) {
    for (Element a : as) graph.add_edge(v, g.mul(v, a));
  }
  return graph;
}

// Smallest l with 1 in A^l; a closed walk from 1 of that length exists
// exactly then. Iterates product sets without building the graph and stops
// at l = |group|, beyond which no new shortest cycle can appear.
inline std::optional<std::size_t> cayley_girth(const CayleySpec& spec) {
  const auto& a = spec.connection;
  if (a.empty()) return std::nullopt;
  GroupSubset power = a;
  for (std::size_t l = 1; l <= spec.group.order(); ++l) {
    if (power.contains(FiniteGroup::identity())) return l;
    if (l < spec.group.order()) power = product_set(power, a);
  }
  return std::nullopt;
}

// A shortest factorisation a1 a2 ... al = 1 with every ai in A, or nullopt
// when A has no such product. Layer l records, for each element of A^l, the
// element of A^(l-1) and the factor that first reached it.
inline std::optional<std::vector<Element>> identity_factorization(const CayleySpec& spec) {
  const auto& g = spec.group;
  const auto as = spec.connection.elements();
  if (as.empty()) return std::nullopt;
  constexpr Element kNone = std::numeric_limits<Element>::max();
  struct Step {
    Element prev;
    Element factor;
  };
  std::vector<std::vector<Step>> layers;
  std::vector<Step> first(g.order(), Step{kNone, kNone});
  for (Element x : as) first[x] = Step{kNone, x};
  layers.push_back(std::move(first));

  for (std::size_t l = 1; l <= g.order(); ++l) {
    const auto& layer = layers.back();
    if (layer[0].factor != kNone) {
      std::vector<Element> factors(l);
      Element cur = 0;
      for (std::size_t i = l; i-- > 0;) {
        const Step s = layers[i][cur];
        factors[i] = s.factor;
        cur = s.prev;
      }
      return factors;
    }
    std::vector<Step> next(g.order(), Step{kNone, kNone});
    for (Element y = 0; y < g.order(); ++y) {
      if (layer[y].factor == kNone) continue;
      for (Element a : as) {
        const Element z = g.mul(y, a);
        if (next[z].factor == kNone) next[z] = Step{y, a};
      }
    }
    layers.push_back(std::move(next));
  }
  return std::nullopt;
}

// The cycle v, v a1, v a1 a2, ..., v a1...al of a factorisation of 1.
inline Cycle cycle_from_factors(const FiniteGroup& g, std::span<const Element> factors,
                                Element start = 0) {
  Cycle c;
  c.vertices.push_back(start);
  Element v = start;
  for (Element a : factors) {
    v = g.mul(v, a);
    c.vertices.push_back(v);
  }
  return c;
}

// Extremal circulant: Z/n with connection set {1, ..., r} (as residues, so
// r == n contributes 0), girth exactly ceil(n/r). The witness walks steps
// r, ..., r, r - s from 0 where n = l r - s, 0 <= s < r.
struct CirculantExtremal {
  CayleySpec spec;
  std::size_t girth;
  std::vector<std::size_t> steps;
  Cycle witness;
};

inline CirculantExtremal circulant_extremal(std::size_t n, std::size_t r) {
  if (r == 0 || n < r) throw Error("circulant needs n >= r >= 1");
  auto g = FiniteGroup::cyclic(n);
  GroupSubset a(g);
  for (std::size_t i = 1; i <= r; ++i) a.insert(static_cast<Element>(i % n));

  const std::size_t l = (n + r - 1) / r;
  const std::size_t s = l * r - n;
  std::vector<std::size_t> steps(l, r);
  steps.back() = r - s;

  Cycle w;
  w.vertices.push_back(0);
  std::size_t v = 0;
  for (auto step : steps) {
    v = (v + step) % n;
    w.vertices.push_back(static_cast<Vertex>(v));
  }
  return CirculantExtremal{CayleySpec(g, std::move(a)), l, std::move(steps), std::move(w)};
}

// Z/(d(g-1)+1) with {1, ..., d}: regular of degree d, girth exactly g.
inline CayleySpec regular_girth_cayley(std::size_t d, std::size_t girth) {
  if (d == 0) throw Error("degree must be positive");
  if (girth < 2) throw Error("girth must be at least 2");
  if (d > (FiniteGroup::kMaxOrder - 1) / (girth - 1)) throw Error("parameter overflow");
  const std::size_t n = d * (girth - 1) + 1;
  auto g = FiniteGroup::cyclic(n);
  GroupSubset a(g);
  for (std::size_t i = 1; i <= d; ++i) a.insert(static_cast<Element>(i));
  return CayleySpec(g, std::move(a));
}

// Whether the semigroup generated by A, i.e. the union of all A^k, is the
// whole group. With A empty that union is empty, even for the trivial group.
inline bool is_connected(const CayleySpec& spec) {
  const auto& a = spec.connection;
  GroupSubset reached = a;
  GroupSubset frontier = a;
  while (!frontier.empty()) {
    const GroupSubset next = product_set(frontier, a);
    GroupSubset fresh(spec.group);
    for (Element x : next.elements()) {
      if (!reached.contains(x)) fresh.insert(x);
    }
    reached = reached | fresh;
    frontier = std::move(fresh);
  }
  return reached.size() == spec.group.order();
}

struct CayleyBound {
  std::size_t bound;  // ceil(|group| / |A|)
  std::optional<std::size_t> girth;
  bool holds;
};

inline CayleyBound hamidoune_cayley_bound(const CayleySpec& spec) {
  const std::size_t d = spec.connection.size();
  if (d == 0) throw Error("empty connection set");
  const std::size_t bound = (spec.group.order() + d - 1) / d;
  const auto g = cayley_girth(spec);
  return CayleyBound{bound, g, g.has_value() && *g <= bound};
}

}  // namespace shortcycle::cayley
