#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shortcycle/error.hpp"
#include "shortcycle/permutation.hpp"

namespace shortcycle {

using Element = std::uint32_t;

// Finite group given by its multiplication table, identity at index 0.
//
// FiniteGroup is a cheap handle: copies share the same validated table, and
// two handles denote "the same group" exactly when they share it. Subsets
// remember their group through that identity.
class FiniteGroup {
 public:
  // Largest order accepted. The table has order^2 entries.
  static constexpr std::size_t kMaxOrder = std::size_t{1} << 12;
  // Full associativity check up to this order, seeded sampling above.
  static constexpr std::size_t kFullAssociativityCheck = 64;
  static constexpr std::size_t kAssociativitySamples = 100000;

  static FiniteGroup cyclic(std::size_t n) {
    if (n == 0) throw Error("cyclic group order must be positive");
    if (n > kMaxOrder) throw Error("group order exceeds table limit");
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<Element>((a + b) % n);
      }
    }
    return FiniteGroup(n, std::move(table), "Z/" + std::to_string(n));
  }

  // Pairs (a, b) are encoded as a * |h| + b.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t m = g.order(), k = h.order();
    if (m > kMaxOrder / k) throw Error("group order exceeds table limit");
    const std::size_t n = m * k;
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const auto a = g.mul(static_cast<Element>(x / k), static_cast<Element>(y / k));
        const auto b = h.mul(static_cast<Element>(x % k), static_cast<Element>(y % k));
        table[x * n + y] = static_cast<Element>(a * k + b);
      }
    }
    return FiniteGroup(n, std::move(table), g.name() + " x " + h.name());
  }

  // Validates a raw Cayley table: square, entries in range, identity at 0,
  // Latin square, associative.
  static FiniteGroup from_table(const std::vector<std::vector<std::int64_t>>& rows,
                                std::string name = "table") {
    const std::size_t n = rows.size();
    if (n == 0) throw Error("empty table");
    if (n > kMaxOrder) throw Error("group order exceeds table limit");
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (rows[a].size() != n) throw Error("table is not square");
      for (std::size_t b = 0; b < n; ++b) {
        const auto x = rows[a][b];
        if (x < 0 || static_cast<std::size_t>(x) >= n) {
          throw Error("table entry out of range");
        }
        table[a * n + b] = static_cast<Element>(x);
      }
    }
    validate(n, table);
    return FiniteGroup(n, std::move(table), std::move(name));
  }

  // Closure of the generators under composition. Element 0 is the identity;
  // the remaining elements appear in breadth-first discovery order.
  static FiniteGroup from_permutations(std::span<const Permutation> generators,
                                       std::size_t degree, std::string name,
                                       std::size_t max_order = kMaxOrder) {
    auto elements = permutation_closure(generators, degree, max_order);
    return from_permutation_list(elements, std::move(name));
  }

  // Table of an element list already closed under composition, with the
  // identity first. table[i][j] is elements[i] * elements[j].
  static FiniteGroup from_permutation_list(std::span<const Permutation> elements,
                                           std::string name) {
    const std::size_t n = elements.size();
    if (n == 0 || !elements[0].is_identity()) {
      throw Error("identity not at index 0");
    }
    if (n > kMaxOrder) throw Error("group order exceeds table limit");
    std::unordered_map<Permutation, Element, PermutationHash> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], static_cast<Element>(i));
    std::vector<Element> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto it = index.find(elements[i] * elements[j]);
        if (it == index.end()) throw Error("permutation list not closed");
        table[i * n + j] = it->second;
      }
    }
    return FiniteGroup(n, std::move(table), std::move(name));
  }

  static std::vector<Permutation> permutation_closure(
      std::span<const Permutation> generators, std::size_t degree,
      std::size_t max_order = kMaxOrder) {
    std::vector<Permutation> elements{Permutation::identity(degree)};
    std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
    seen.emplace(elements[0], 0);
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (const auto& gen : generators) {
        if (gen.degree() != degree) throw Error("permutation degree mismatch");
        Permutation next = elements[head] * gen;
        if (seen.emplace(next, elements.size()).second) {
          if (elements.size() >= max_order) throw Error("generated group too large");
          elements.push_back(std::move(next));
        }
      }
    }
    return elements;
  }

  std::size_t order() const noexcept { return data_->order; }
  const std::string& name() const noexcept { return data_->name; }

  Element mul(Element a, Element b) const {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }
  Element inverse(Element a) const { return data_->inverse[a]; }
  static constexpr Element identity() noexcept { return 0; }

  bool is_abelian() const {
    for (Element a = 0; a < order(); ++a) {
      for (Element b = a + 1; b < order(); ++b) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  // Order of a as a group element.
  std::size_t element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
  }

  std::vector<std::vector<std::int64_t>> table_rows() const {
    std::vector<std::vector<std::int64_t>> rows(order(), std::vector<std::int64_t>(order()));
    for (Element a = 0; a < order(); ++a) {
      for (Element b = 0; b < order(); ++b) rows[a][b] = mul(a, b);
    }
    return rows;
  }

  bool same_as(const FiniteGroup& other) const noexcept {
    return data_ == other.data_;
  }

 private:
  struct Data {
    std::size_t order;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::string name;
  };

  FiniteGroup(std::size_t n, std::vector<Element> table, std::string name) {
    auto data = std::make_shared<Data>();
    data->order = n;
    data->table = std::move(table);
    data->name = std::move(name);
    data->inverse.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (data->table[a * n + b] == 0) {
          data->inverse[a] = static_cast<Element>(b);
          break;
        }
      }
    }
    data_ = std::move(data);
  }

  static void validate(std::size_t n, const std::vector<Element>& t) {
    auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
    for (std::size_t x = 0; x < n; ++x) {
      if (at(0, x) != x || at(x, 0) != x) throw Error("identity not at index 0");
    }
    std::vector<char> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < n; ++b) {
        if (seen[at(a, b)]++) throw Error("not a Latin square");
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t a = 0; a < n; ++a) {
        if (seen[at(a, b)]++) throw Error("not a Latin square");
      }
    }
    auto associative = [&](std::size_t a, std::size_t b, std::size_t c) {
      return at(at(a, b), c) == at(a, at(b, c));
    };
    if (n <= kFullAssociativityCheck) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (!associative(a, b, c)) throw Error("not associative");
    } else {
      std::mt19937_64 rng(0x5eed'a550'c1a7'0001ull);
      for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
        const auto a = rng() % n, b = rng() % n, c = rng() % n;
        if (!associative(a, b, c)) throw Error("not associative");
      }
    }
  }

  std::shared_ptr<const Data> data_;
};

// A subset of a finite group, stored as a bitset over element indices.
// Operations return new subsets; nothing mutates an existing value except
// the explicit insert used while building one.
class GroupSubset {
 public:
  explicit GroupSubset(FiniteGroup group)
      : group_(std::move(group)), words_((group_.order() + 63) / 64, 0) {}

  GroupSubset(FiniteGroup group, std::initializer_list<Element> members)
      : GroupSubset(std::move(group)) {
    for (auto x : members) insert(x);
  }

  GroupSubset(FiniteGroup group, std::span<const Element> members)
      : GroupSubset(std::move(group)) {
    for (auto x : members) insert(x);
  }

  static GroupSubset whole(const FiniteGroup& g) {
    GroupSubset s(g);
    for (Element x = 0; x < g.order(); ++x) s.insert(x);
    return s;
  }

  // Bit i of mask selects element i; requires order <= 64.
  static GroupSubset from_mask(const FiniteGroup& g, std::uint64_t mask) {
    if (g.order() > 64) throw Error("mask subsets need order <= 64");
    if (g.order() < 64 && (mask >> g.order()) != 0) {
      throw Error("subset member out of range");
    }
    GroupSubset s(g);
    s.words_[0] = mask;
    return s;
  }

  void insert(Element x) {
    if (x >= group_.order()) {
      throw Error("subset member " + std::to_string(x) + " out of range");
    }
    words_[x / 64] |= std::uint64_t{1} << (x % 64);
  }

  const FiniteGroup& group() const noexcept { return group_; }

  bool contains(Element x) const {
    return x < group_.order() && ((words_[x / 64] >> (x % 64)) & 1u);
  }

  std::size_t size() const {
    std::size_t s = 0;
    for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
    return s;
  }
  bool empty() const { return size() == 0; }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<Element>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  std::uint64_t mask() const {
    if (group_.order() > 64) throw Error("mask subsets need order <= 64");
    return words_[0];
  }

  bool is_subset_of(const GroupSubset& other) const {
    require_same_group(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  void require_same_group(const GroupSubset& other) const {
    if (!group_.same_as(other.group_)) throw Error("subsets belong to different groups");
  }

  friend GroupSubset operator|(const GroupSubset& a, const GroupSubset& b) {
    a.require_same_group(b);
    GroupSubset r = a;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] |= b.words_[i];
    return r;
  }

  friend GroupSubset operator&(const GroupSubset& a, const GroupSubset& b) {
    a.require_same_group(b);
    GroupSubset r = a;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
    return r;
  }

  friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.group_.same_as(b.group_) && a.words_ == b.words_;
  }

 private:
  FiniteGroup group_;
  std::vector<std::uint64_t> words_;
};

// {ab : a in A, b in B}.
inline GroupSubset product_set(const GroupSubset& a, const GroupSubset& b) {
  a.require_same_group(b);
  const auto& g = a.group();
  GroupSubset result(g);
  const auto bs = b.elements();
  for (Element x : a.elements()) {
    for (Element y : bs) result.insert(g.mul(x, y));
  }
  return result;
}

// A x = {ax : a in A}.
inline GroupSubset right_translate(const GroupSubset& a, Element x) {
  GroupSubset r(a.group());
  for (Element e : a.elements()) r.insert(a.group().mul(e, x));
  return r;
}

// x A = {xa : a in A}.
inline GroupSubset left_translate(Element x, const GroupSubset& a) {
  GroupSubset r(a.group());
  for (Element e : a.elements()) r.insert(a.group().mul(x, e));
  return r;
}

inline GroupSubset inverse_set(const GroupSubset& a) {
  GroupSubset r(a.group());
  for (Element e : a.elements()) r.insert(a.group().inverse(e));
  return r;
}

// B^1 = B and B^k = B * B^(k-1).
inline GroupSubset iterated_power(const GroupSubset& b, std::size_t k) {
  if (k == 0) throw Error("power exponent must be positive");
  GroupSubset result = b;
  for (std::size_t i = 1; i < k; ++i) result = product_set(b, result);
  return result;
}

inline bool is_subgroup(const GroupSubset& h) {
  return h.contains(FiniteGroup::identity()) && product_set(h, h) == h;
}

// Left cosets xH, each listed at the position of its smallest element.
inline std::vector<GroupSubset> left_cosets(const FiniteGroup& g,
                                            const GroupSubset& h) {
  if (!h.group().same_as(g)) throw Error("subsets belong to different groups");
  if (!is_subgroup(h)) throw Error("not a subgroup");
  std::vector<GroupSubset> cosets;
  std::vector<char> covered(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    GroupSubset coset = left_translate(x, h);
    for (Element e : coset.elements()) covered[e] = 1;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

}  // namespace shortcycle
