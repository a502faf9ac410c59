#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "shortcycle/groups.hpp"

namespace shortcycle::additive {

using Integer = std::int64_t;

inline void require_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error("non-abelian group");
}

// r_{A,B}(x): ordered pairs (a, b) in A x B with a + b = x.
inline std::size_t representation_function(const GroupSubset& a, const GroupSubset& b, Element x) {
  a.require_same_group(b);
  const auto& g = a.group();
  require_abelian(g);
  std::size_t count = 0;
  for (Element y : a.elements()) {
    if (b.contains(g.mul(x, g.inverse(y)))) ++count;
  }
  return count;
}

inline std::size_t representation_function(std::span<const Integer> a, std::span<const Integer> b,
                                           Integer x) {
  const std::set<Integer> bs(b.begin(), b.end());
  std::size_t count = 0;
  for (Integer y : std::set<Integer>(a.begin(), a.end())) {
    if (bs.count(x - y)) ++count;
  }
  return count;
}

// Bipartite graph with edges from left vertices 0..left_size-1 to right
// vertices 0..right_size-1 and injective labels alpha (left), beta (right).
template <typename Label>
struct BipartiteLabeled {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<Label> alpha;
  std::vector<Label> beta;

  void validate() const {
    if (alpha.size() != left_size || beta.size() != right_size) {
      throw Error("label count does not match vertex count");
    }
    if (std::set<Label>(alpha.begin(), alpha.end()).size() != alpha.size() ||
        std::set<Label>(beta.begin(), beta.end()).size() != beta.size()) {
      throw Error("injectivity violation");
    }
    for (const auto& [l, r] : edges) {
      if (l >= left_size || r >= right_size) throw Error("edge does not respect the partition");
    }
  }

  // d1: largest left outdegree.
  std::size_t max_left_degree() const {
    std::vector<std::size_t> deg(left_size, 0);
    for (const auto& e : edges) ++deg[e.first];
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  }

  // d2: largest right indegree.
  std::size_t max_right_degree() const {
    std::vector<std::size_t> deg(right_size, 0);
    for (const auto& e : edges) ++deg[e.second];
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  }
};

// {alpha(l) + beta(r) : (l, r) an edge}, always of size >= max(d1, d2).
template <typename Label, typename Add>
std::set<Label> graph_sum(const BipartiteLabeled<Label>& bg, Add&& add) {
  bg.validate();
  std::set<Label> sums;
  for (const auto& [l, r] : bg.edges) sums.insert(add(bg.alpha[l], bg.beta[r]));
  return sums;
}

inline std::set<Integer> graph_sum(const BipartiteLabeled<Integer>& bg) {
  return graph_sum(bg, [](Integer x, Integer y) { return x + y; });
}

inline GroupSubset graph_sum(const BipartiteLabeled<Element>& bg, const FiniteGroup& g) {
  require_abelian(g);
  GroupSubset out(g);
  for (Element x : graph_sum(bg, [&](Element x, Element y) { return g.mul(x, y); })) out.insert(x);
  return out;
}

// Left vertices are -A, right vertices A + B (both as group elements, in
// increasing index order), edges (-a, a + b). Every edge sum is some b, so
// the graph sum is exactly B while d1 = |B|.
inline BipartiteLabeled<Element> greene_construction(const GroupSubset& a, const GroupSubset& b) {
  a.require_same_group(b);
  const auto& g = a.group();
  require_abelian(g);
  const auto as = a.elements();
  const auto bs = b.elements();
  const auto sums = product_set(a, b).elements();

  BipartiteLabeled<Element> bg;
  bg.left_size = as.size();
  bg.right_size = sums.size();
  for (Element x : as) bg.alpha.push_back(g.inverse(x));
  bg.beta = sums;
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (Element y : bs) {
      const Element s = g.mul(as[i], y);
      const auto j = static_cast<std::size_t>(std::lower_bound(sums.begin(), sums.end(), s) - sums.begin());
      bg.edges.emplace_back(i, j);
    }
  }
  return bg;
}

// All sums a_i + a_j with i <= j distinct.
inline bool is_sidon(std::span<const Integer> a) {
  std::unordered_set<Integer> sums;
  const std::vector<Integer> s = [&] {
    std::set<Integer> u(a.begin(), a.end());
    return std::vector<Integer>(u.begin(), u.end());
  }();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!sums.insert(s[i] + s[j]).second) return false;
    }
  }
  return true;
}

inline bool is_sidon(const GroupSubset& a) {
  const auto& g = a.group();
  require_abelian(g);
  const auto s = a.elements();
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      if (seen[g.mul(s[i], s[j])]++) return false;
    }
  }
  return true;
}

// First `count` terms of the greedy Sidon sequence 1, 2, 4, 8, 13, 21, ...:
// each term is the smallest integer keeping all pairwise sums distinct.
inline std::vector<Integer> greedy_sidon(std::size_t count) {
  if (count == 0) throw Error("count must be positive");
  std::vector<Integer> terms;
  std::unordered_set<Integer> sums;
  for (Integer c = 1; terms.size() < count; ++c) {
    bool ok = !sums.count(2 * c);
    for (std::size_t i = 0; ok && i < terms.size(); ++i) ok = !sums.count(c + terms[i]);
    if (!ok) continue;
    for (Integer t : terms) sums.insert(c + t);
    sums.insert(2 * c);
    terms.push_back(c);
  }
  return terms;
}

struct FoxEdge {
  std::size_t i;
  std::size_t j;  // i < j
  Integer gamma;
};

// Labelling of K_n from a set a_1..a_n: alpha(v_i) = -a_i and
// gamma({v_i, v_j}) = a_i + a_j, so every vertex-plus-incident-edge sum is
// some a_j and the sum set is the source set itself.
struct FoxLabeling {
  std::vector<Integer> source;
  std::vector<Integer> alpha;
  std::vector<FoxEdge> edges;
  std::set<Integer> sumset;

  bool alpha_injective() const {
    return std::set<Integer>(alpha.begin(), alpha.end()).size() == alpha.size();
  }
  bool gamma_injective() const {
    std::set<Integer> g;
    for (const auto& e : edges) g.insert(e.gamma);
    return g.size() == edges.size();
  }
};

inline FoxLabeling fox_labeling(std::span<const Integer> source) {
  if (source.size() < 2) throw Error("need at least two vertices");
  FoxLabeling f;
  f.source.assign(source.begin(), source.end());
  for (Integer a : source) f.alpha.push_back(-a);
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = i + 1; j < source.size(); ++j) {
      const Integer g = source[i] + source[j];
      f.edges.push_back({i, j, g});
      f.sumset.insert(f.alpha[i] + g);
      f.sumset.insert(f.alpha[j] + g);
    }
  }
  return f;
}

inline FoxLabeling fox_labeling(std::size_t n) {
  if (n < 2) throw Error("need at least two vertices");
  const auto a = greedy_sidon(n);
  return fox_labeling(std::span<const Integer>(a));
}

// {0} together with +-2^i for i = 0 .. floor(log2(p - 1)) - 1 in Z/p; for
// p = 257 that is i = 0..7.
inline GroupSubset greene_set(const FiniteGroup& zp) {
  const std::size_t p = zp.order();
  if (p < 3) throw Error("modulus must be at least 3");
  std::size_t m = 0;
  while ((std::size_t{1} << (m + 1)) <= p - 1) ++m;
  GroupSubset a(zp);
  a.insert(0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto x = static_cast<Element>((std::size_t{1} << i) % p);
    a.insert(x);
    a.insert(zp.inverse(x));
  }
  return a;
}

struct GreeneDigest {
  std::size_t modulus;
  std::size_t set_size;      // |A|
  std::size_t sumset_size;   // |A + A| in Z/p
  std::size_t lifted_sumset_size;  // |A + A| of the representatives in (-p/2, p/2) as integers
  std::size_t min_representations;  // min over A + A of r_{A,A}
  std::size_t graph_sum_size;
  std::size_t d1;
  std::size_t d2;
};

inline GreeneDigest greene_digest(std::size_t p) {
  const auto zp = FiniteGroup::cyclic(p);
  const auto a = greene_set(zp);
  const auto sums = product_set(a, a);
  std::size_t min_r = std::numeric_limits<std::size_t>::max();
  for (Element x : sums.elements()) min_r = std::min(min_r, representation_function(a, a, x));
  std::vector<Integer> lifted;
  for (Element x : a.elements()) {
    lifted.push_back(2 * x < p ? Integer(x) : Integer(x) - static_cast<Integer>(p));
  }
  std::set<Integer> lifted_sums;
  for (Integer x : lifted) {
    for (Integer y : lifted) lifted_sums.insert(x + y);
  }
  const auto bg = greene_construction(a, a);
  return GreeneDigest{p, a.size(), sums.size(), lifted_sums.size(), min_r, graph_sum(bg, zp).size(),
                      bg.max_left_degree(), bg.max_right_degree()};
}

}  // namespace shortcycle::additive
