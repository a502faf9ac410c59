#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "shortcycle/groups.hpp"

namespace shortcycle::kemperman {

// Hypotheses of the pair bound: (i) 1 is in both sets, (ii) ab = 1 with
// a in A, b in B only for a = b = 1.
struct PairCondition {
  bool contains_identity = false;
  bool unique_unit_product = false;

  bool satisfied() const { return contains_identity && unique_unit_product; }
};

inline PairCondition check_conditions(const GroupSubset& a, const GroupSubset& b) {
  a.require_same_group(b);
  const auto& g = a.group();
  PairCondition c;
  c.contains_identity = a.contains(0) && b.contains(0);
  c.unique_unit_product = true;
  for (Element x : a.elements()) {
    if (x != 0 && b.contains(g.inverse(x))) {
      c.unique_unit_product = false;
      break;
    }
  }
  return c;
}

struct BoundReport {
  bool holds;
  std::size_t size;   // |AB| or |B^k|
  std::size_t bound;  // |A| + |B| - 1 or k|B| - k + 1
};

// |A| + |B| - |AB|; at most 1 whenever the hypotheses hold.
inline std::ptrdiff_t deficiency(const GroupSubset& a, const GroupSubset& b) {
  return static_cast<std::ptrdiff_t>(a.size() + b.size()) -
         static_cast<std::ptrdiff_t>(product_set(a, b).size());
}

inline BoundReport verify_pair_bound(const GroupSubset& a, const GroupSubset& b) {
  if (!check_conditions(a, b).satisfied()) throw Error("hypotheses violated");
  const std::size_t size = product_set(a, b).size();
  const std::size_t bound = a.size() + b.size() - 1;
  return {size >= bound, size, bound};
}

// True iff 1 is in B and b1...bk = 1 forces every bi = 1. Dropping the
// identity factors of a non-trivial solution leaves a product of j <= k
// non-identity elements equal to 1, so the condition is equivalent to
// 1 not in (B \ {1})^j for j = 1..k.
inline bool power_hypothesis_holds(const GroupSubset& b, std::size_t k) {
  if (k == 0) throw Error("power exponent must be positive");
  if (!b.contains(0)) return false;
  GroupSubset rest(b.group());
  for (Element x : b.elements()) {
    if (x != 0) rest.insert(x);
  }
  if (rest.empty()) return true;
  GroupSubset power = rest;
  for (std::size_t j = 1; j <= k; ++j) {
    if (power.contains(0)) return false;
    if (j < k) power = product_set(rest, power);
  }
  return true;
}

inline BoundReport verify_power_bound(const GroupSubset& b, std::size_t k) {
  if (!power_hypothesis_holds(b, k)) throw Error("hypothesis fails");
  const std::size_t size = iterated_power(b, k).size();
  const std::size_t bound = k * b.size() - k + 1;
  return {size >= bound, size, bound};
}

struct ScanWitness {
  std::uint64_t a_mask;
  std::uint64_t b_mask;
  std::size_t product_size;

  friend bool operator==(const ScanWitness&, const ScanWitness&) = default;
};

struct ScanReport {
  std::string group;
  std::size_t order = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t tight_count = 0;
  std::optional<ScanWitness> witness;          // first tight pair
  std::optional<ScanWitness> first_violation;  // never expected

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// Associative and commutative: counts add, witnesses keep the smallest
// (A mask, B mask) pair.
inline void merge_into(ScanReport& into, const ScanReport& part) {
  auto first = [](const std::optional<ScanWitness>& x, const std::optional<ScanWitness>& y) {
    if (!x) return y;
    if (!y) return x;
    return std::pair(x->a_mask, x->b_mask) <= std::pair(y->a_mask, y->b_mask) ? x : y;
  };
  into.pairs_checked += part.pairs_checked;
  into.violations += part.violations;
  into.tight_count += part.tight_count;
  into.witness = first(into.witness, part.witness);
  into.first_violation = first(into.first_violation, part.first_violation);
}

inline constexpr std::size_t kMaxScanOrder = 16;

namespace detail {

// Lookup tables mapping a subset mask of a group of order <= 16 through a
// bijection of the elements, one 256-entry table per mask byte.
class MaskMap {
 public:
  template <typename F>
  MaskMap(std::size_t order, F&& image) {
    for (std::size_t half = 0; half < 2; ++half) {
      for (std::size_t byte = 0; byte < 256; ++byte) {
        std::uint32_t out = 0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
          const std::size_t x = half * 8 + bit;
          if (x < order && ((byte >> bit) & 1u)) out |= std::uint32_t{1} << image(static_cast<Element>(x));
        }
        table_[half][byte] = out;
      }
    }
  }

  std::uint32_t operator()(std::uint32_t mask) const {
    return table_[0][mask & 0xffu] | table_[1][(mask >> 8) & 0xffu];
  }

 private:
  std::array<std::array<std::uint32_t, 256>, 2> table_{};
};

}  // namespace detail

// Every pair (A, B) of subsets satisfying both hypotheses, with |A| and |B|
// at most max_subset_size, checked against |AB| >= |A| + |B| - 1. Masks are
// visited in increasing (A, B) order; `workers` threads split the A range.
inline ScanReport scan_group(const FiniteGroup& g, std::size_t max_subset_size,
                             unsigned workers = 1) {
  const std::size_t n = g.order();
  if (n > kMaxScanOrder) {
    throw Error("group too large for exhaustive pair scan (order " + std::to_string(n) +
                " > " + std::to_string(kMaxScanOrder) + ")");
  }
  if (workers == 0) workers = 1;

  std::vector<detail::MaskMap> left;
  left.reserve(n);
  for (Element a = 0; a < n; ++a) {
    left.emplace_back(n, [&](Element x) { return g.mul(a, x); });
  }
  const detail::MaskMap inverse(n, [&](Element x) { return g.inverse(x); });

  // Subsets containing the identity correspond to masks (rest << 1) | 1.
  const std::uint64_t half = std::uint64_t{1} << (n - 1);

  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi) {
    ScanReport r;
    for (std::uint64_t ra = lo; ra < hi; ++ra) {
      const auto amask = static_cast<std::uint32_t>((ra << 1) | 1u);
      const auto asize = static_cast<std::size_t>(std::popcount(amask));
      if (asize > max_subset_size) continue;
      // Condition (ii): no non-identity a has its inverse in B.
      const std::uint32_t forbidden = inverse(amask) & ~std::uint32_t{1};
      std::array<const detail::MaskMap*, kMaxScanOrder> maps{};
      std::size_t count = 0;
      for (std::uint32_t m = amask; m != 0; m &= m - 1) maps[count++] = &left[std::countr_zero(m)];

      for (std::uint64_t rb = 0; rb < half; ++rb) {
        const auto bmask = static_cast<std::uint32_t>((rb << 1) | 1u);
        if (bmask & forbidden) continue;
        const auto bsize = static_cast<std::size_t>(std::popcount(bmask));
        if (bsize > max_subset_size) continue;
        std::uint32_t product = 0;
        for (std::size_t i = 0; i < count; ++i) product |= (*maps[i])(bmask);
        const auto psize = static_cast<std::size_t>(std::popcount(product));
        const std::size_t bound = asize + bsize - 1;
        ++r.pairs_checked;
        if (psize < bound) {
          ++r.violations;
          if (!r.first_violation) r.first_violation = ScanWitness{amask, bmask, psize};
        } else if (psize == bound) {
          ++r.tight_count;
          if (!r.witness) r.witness = ScanWitness{amask, bmask, psize};
        }
      }
    }
    return r;
  };

  ScanReport total;
  total.group = g.name();
  total.order = n;
  const unsigned k = static_cast<unsigned>(std::min<std::uint64_t>(workers, half));
  if (k <= 1) {
    merge_into(total, scan_range(0, half));
    return total;
  }
  std::vector<ScanReport> parts(k);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < k; ++w) {
    const std::uint64_t lo = half * w / k, hi = half * (w + 1) / k;
    threads.emplace_back([&, w, lo, hi] { parts[w] = scan_range(lo, hi); });
  }
  for (auto& t : threads) t.join();
  for (const auto& p : parts) merge_into(total, p);
  return total;
}

}  // namespace shortcycle::kemperman
