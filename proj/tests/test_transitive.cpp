#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shortcycle/cayley.hpp"
#include "shortcycle/group_catalog.hpp"
#include "shortcycle/transitive.hpp"

using namespace shortcycle;
using namespace shortcycle::transitive;

namespace {

std::set<std::vector<std::uint32_t>> as_set(const AutomorphismGroup& ag) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& p : ag.elements()) {
    std::vector<std::uint32_t> v(p.degree());
    for (std::uint32_t i = 0; i < v.size(); ++i) v[i] = p(i);
    out.insert(v);
  }
  return out;
}

// Cayley fixtures with at most ten vertices.
std::vector<cayley::CayleySpec> small_cayley_fixtures() {
  std::vector<cayley::CayleySpec> out;
  std::vector<FiniteGroup> groups;
  for (std::size_t n = 1; n <= 10; ++n) groups.push_back(FiniteGroup::cyclic(n));
  for (auto& g : catalog::small_groups(10)) {
    if (!g.is_abelian() || g.name().find(" x ") != std::string::npos) groups.push_back(g);
  }
  Xoshiro256 rng(77);
  for (const auto& g : groups) {
    for (int t = 0; t < 6; ++t) {
      GroupSubset a(g);
      for (Element x = 0; x < g.order(); ++x) {
        if (rng.unit() < 0.35) a.insert(x);
      }
      if (a.empty()) a.insert(static_cast<Element>(rng.uniform(g.order())));
      out.emplace_back(g, a);
    }
  }
  return out;
}

}  // namespace

TEST(Automorphisms, MatchPermutationFilter) {
  std::vector<Digraph> graphs{oracle::cycle_graph(4), oracle::cycle_graph(6), Digraph(3),
                              oracle::complete_graph(4), oracle::circulant(6, {1, 2})};
  Xoshiro256 rng(4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.uniform(6);
    Digraph g(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (rng.unit() < 0.3) g.add_edge(u, v);
      }
    }
    graphs.push_back(g);
  }
  for (const auto& g : graphs) {
    const auto want = oracle::automorphisms(g);
    const auto got = automorphism_group(g);
    EXPECT_EQ(as_set(got), std::set<std::vector<std::uint32_t>>(want.begin(), want.end()));
    EXPECT_TRUE(got.elements()[0].is_identity());
  }
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphism_group(oracle::cycle_graph(5)).order(), 5u);
  EXPECT_EQ(automorphism_group(Digraph(3)).order(), 6u);
  Digraph edge(2);
  edge.add_edge(0, 1);
  EXPECT_EQ(automorphism_group(edge).order(), 1u);
  EXPECT_THROW(automorphism_group(Digraph(11)), Error);
  EXPECT_THROW(automorphism_group(Digraph(8), 100), Error);
}

TEST(Automorphisms, TableMatchesComposition) {
  const auto ag = automorphism_group(oracle::circulant(6, {1, 3}));
  const auto& g = ag.as_group();
  for (Element i = 0; i < ag.order(); ++i) {
    for (Element j = 0; j < ag.order(); ++j) {
      EXPECT_EQ(ag.elements()[g.mul(i, j)], ag.elements()[i] * ag.elements()[j]);
    }
  }
}

TEST(Transitivity, Examples) {
  Digraph edge(2);
  edge.add_edge(0, 1);
  EXPECT_FALSE(is_vertex_transitive(edge).transitive);
  EXPECT_TRUE(is_vertex_transitive(oracle::cycle_graph(5)).transitive);
  for (const auto& s : small_cayley_fixtures()) {
    const auto res = is_vertex_transitive(cayley::build(s));
    EXPECT_TRUE(res.transitive) << s.group.name();
    if (res.group) {
      EXPECT_TRUE(res.group->acts_transitively());
    }
  }
}

TEST(Stabilizer, Examples) {
  const auto rot = automorphism_group(oracle::cycle_graph(6));
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(stabilizer(rot, v).size(), 1u);
  const auto sym = automorphism_group(Digraph(3));
  const auto h = stabilizer(sym, 0);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_TRUE(is_subgroup(h));
  EXPECT_THROW(stabilizer(sym, 3), Error);
}

// H_v = x_v H_0 x_v^-1 and |group| = n |H_0|.
TEST(Stabilizer, ConjugacyAndOrbitCount) {
  for (const auto& g : {oracle::circulant(6, {1, 3}), oracle::complete_graph(4), Digraph(4),
                        oracle::circulant(8, {1, 2, 4})}) {
    const auto ag = automorphism_group(g);
    const auto& grp = ag.as_group();
    const auto h0 = stabilizer(ag, 0);
    EXPECT_EQ(grp.order(), g.size() * h0.size());
    const auto reps = coset_representatives(ag);
    for (Vertex v = 0; v < g.size(); ++v) {
      const Element x = reps[v];
      EXPECT_EQ(ag.elements()[x](0), v);
      GroupSubset conj(grp);
      for (Element h : h0.elements()) conj.insert(grp.mul(grp.mul(x, h), grp.inverse(x)));
      EXPECT_EQ(conj, stabilizer(ag, v));
    }
  }
}

TEST(Hamidoune, Examples) {
  const auto z6 = FiniteGroup::cyclic(6);
  const cayley::CayleySpec s(z6, GroupSubset(z6, {1, 2}));
  const auto g = cayley::build(s);
  const auto res = hamidoune_cycle(g, left_translations(s));
  EXPECT_EQ(res.cycle.length(), 3u);
  EXPECT_EQ(res.bound, 3u);
  EXPECT_TRUE(is_valid_cycle(g, res.cycle));

  for (std::size_t n = 2; n <= 8; ++n) {
    const auto c = oracle::cycle_graph(n);
    const auto h = hamidoune_cycle(c, automorphism_group(c));
    EXPECT_EQ(h.cycle.length(), n);
  }

  Digraph edge(2);
  edge.add_edge(0, 1);
  EXPECT_THROW(hamidoune_cycle(edge, automorphism_group(edge)), Error);
  EXPECT_THROW(hamidoune_cycle(Digraph(3), automorphism_group(Digraph(3))), Error);
  EXPECT_THROW(hamidoune_cycle(oracle::cycle_graph(4), automorphism_group(oracle::cycle_graph(5))), Error);
}

// Full automorphism group where it has a table, else the translations.
TEST(Hamidoune, AcrossFixtures) {
  int full = 0;
  for (const auto& s : small_cayley_fixtures()) {
    const auto g = cayley::build(s);
    const auto ag = [&] {
      try {
        return automorphism_group(g);
      } catch (const Error&) {
        return left_translations(s);
      }
    }();
    full += ag.order() > s.group.order();
    const auto res = hamidoune_cycle(g, ag);
    const std::size_t d = s.connection.size();
    EXPECT_TRUE(is_valid_cycle(g, res.cycle));
    EXPECT_LE(res.cycle.length(), (g.size() + d - 1) / d);
    EXPECT_EQ(res.connection.size(), d * res.stabilizer.size());

    // Edge criterion: (v, w) in E iff x_v^-1 x_w lies in A.
    const auto reps = coset_representatives(ag);
    const auto& grp = ag.as_group();
    for (Vertex v = 0; v < g.size(); ++v) {
      for (Vertex w = 0; w < g.size(); ++w) {
        const Element q = grp.mul(grp.inverse(reps[v]), reps[w]);
        EXPECT_EQ(g.has_edge(v, w), res.connection.contains(q));
      }
    }
  }
  EXPECT_GT(full, 0);
}

// With a normal stabiliser, vertex v <-> coset x_v H0 is an isomorphism
// from g onto the Cayley graph of the quotient with connection set A H0 / H0.
TEST(Hamidoune, NormalStabilizerQuotientIsomorphism) {
  int checked = 0;
  for (const auto& g : {oracle::circulant(6, {1, 2}), oracle::circulant(8, {1, 4}), oracle::complete_graph(4),
                        oracle::circulant(7, {1, 2, 4})}) {
    const auto ag = automorphism_group(g);
    const auto& grp = ag.as_group();
    const auto h0 = stabilizer(ag, 0);
    bool normal = true;
    for (Element x = 0; x < grp.order() && normal; ++x) {
      for (Element h : h0.elements()) {
        if (!h0.contains(grp.mul(grp.mul(x, h), grp.inverse(x)))) normal = false;
      }
    }
    if (!normal) continue;
    ++checked;
    const auto cosets = left_cosets(grp, h0);
    auto coset_of = [&](Element x) {
      for (std::size_t i = 0; i < cosets.size(); ++i) {
        if (cosets[i].contains(x)) return i;
      }
      return cosets.size();
    };
    const auto reps = coset_representatives(ag);
    std::vector<std::size_t> phi(g.size());
    for (Vertex v = 0; v < g.size(); ++v) phi[v] = coset_of(reps[v]);
    EXPECT_EQ(std::set<std::size_t>(phi.begin(), phi.end()).size(), g.size());
    const auto res = hamidoune_cycle(g, ag);
    std::set<std::size_t> a0;
    for (Element a : res.connection.elements()) a0.insert(coset_of(a));
    for (Vertex v = 0; v < g.size(); ++v) {
      for (Vertex w = 0; w < g.size(); ++w) {
        const std::size_t q = coset_of(grp.mul(grp.inverse(reps[v]), reps[w]));
        EXPECT_EQ(g.has_edge(v, w), a0.count(q) == 1);
      }
    }
  }
  EXPECT_GT(checked, 0);
}
