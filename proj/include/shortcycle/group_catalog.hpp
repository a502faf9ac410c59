#pragma once

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "shortcycle/groups.hpp"
#include "shortcycle/permutation.hpp"

namespace shortcycle::catalog {

// Dihedral group of order 2m acting on the m-gon.
inline FiniteGroup dihedral(std::size_t m, std::string name = "") {
  if (m < 3) throw Error("dihedral group needs m >= 3");
  std::vector<std::uint32_t> rot(m), ref(m);
  for (std::size_t i = 0; i < m; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % m);
    ref[i] = static_cast<std::uint32_t>((m - i) % m);
  }
  const std::vector<Permutation> gens{Permutation(rot), Permutation(ref)};
  if (name.empty()) name = "D" + std::to_string(m);
  return FiniteGroup::from_permutations(gens, m, name);
}

inline FiniteGroup symmetric(std::size_t m) {
  if (m == 0 || m > 6) throw Error("symmetric group degree must be in 1..6");
  std::vector<Permutation> gens;
  if (m >= 2) {
    std::vector<std::uint32_t> swap(m), cycle(m);
    for (std::size_t i = 0; i < m; ++i) {
      swap[i] = static_cast<std::uint32_t>(i);
      cycle[i] = static_cast<std::uint32_t>((i + 1) % m);
    }
    std::swap(swap[0], swap[1]);
    gens = {Permutation(swap), Permutation(cycle)};
  }
  return FiniteGroup::from_permutations(gens, m, "S" + std::to_string(m));
}

inline FiniteGroup alternating4() {
  const std::vector<Permutation> gens{Permutation({1, 2, 0, 3}),
                                      Permutation({1, 0, 3, 2})};
  return FiniteGroup::from_permutations(gens, 4, "A4");
}

// Quaternion group {+-1, +-i, +-j, +-k}; index = 4 * sign + unit with
// units ordered 1, i, j, k.
inline FiniteGroup quaternion8() {
  // unit product: sign bit and resulting unit.
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<std::vector<std::int64_t>> rows(8, std::vector<std::int64_t>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const auto [s, u] = unit_mul[x % 4][y % 4];
      const int sign = (x / 4 + y / 4 + s) % 2;
      rows[x][y] = sign * 4 + u;
    }
  }
  return FiniteGroup::from_table(rows, "Q8");
}

// Dicyclic group of order 12: <a, x | a^6 = 1, x^2 = a^3, x a x^-1 = a^-1>,
// element a^k x^e at index 6e + k.
inline FiniteGroup dicyclic12() {
  std::vector<std::vector<std::int64_t>> rows(12, std::vector<std::int64_t>(12));
  for (int p = 0; p < 12; ++p) {
    for (int q = 0; q < 12; ++q) {
      const int k = p % 6, e = p / 6, m = q % 6, f = q / 6;
      int power, ex;
      if (e == 0) {
        power = k + m;
        ex = f;
      } else {
        power = k - m + (f == 1 ? 3 : 0);
        ex = (1 + f) % 2;
      }
      rows[p][q] = 6 * ex + ((power % 6) + 6) % 6;
    }
  }
  return FiniteGroup::from_table(rows, "Dic3");
}

// Every group used by the exhaustive scans, ordered by order, up to the
// given order. Covers all groups of order <= 12 up to isomorphism.
inline std::vector<FiniteGroup> small_groups(std::size_t max_order = 12) {
  std::vector<FiniteGroup> all;
  auto z = [](std::size_t n) { return FiniteGroup::cyclic(n); };
  auto add = [&](FiniteGroup g) {
    if (g.order() <= max_order) all.push_back(std::move(g));
  };
  for (std::size_t n = 1; n <= 12; ++n) {
    add(z(n));
    switch (n) {
      case 4: add(FiniteGroup::direct_product(z(2), z(2))); break;
      case 6: add(symmetric(3)); break;
      case 8:
        add(FiniteGroup::direct_product(z(2), z(4)));
        add(FiniteGroup::direct_product(FiniteGroup::direct_product(z(2), z(2)), z(2)));
        add(dihedral(4));
        add(quaternion8());
        break;
      case 9: add(FiniteGroup::direct_product(z(3), z(3))); break;
      case 10: add(dihedral(5)); break;
      case 12:
        add(FiniteGroup::direct_product(z(2), z(6)));
        add(dihedral(6));
        add(alternating4());
        add(dicyclic12());
        break;
      default: break;
    }
  }
  return all;
}

// Named groups: "klein", "s3".."s5", "d3".."d8", "q8", "a4", "dic3".
inline FiniteGroup by_name(std::string name) {
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "klein") return FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  if (name == "q8") return quaternion8();
  if (name == "a4") return alternating4();
  if (name == "dic3") return dicyclic12();
  if (name.size() == 2 && name[0] == 's' && name[1] >= '1' && name[1] <= '5') {
    return symmetric(static_cast<std::size_t>(name[1] - '0'));
  }
  if (name.size() == 2 && name[0] == 'd' && name[1] >= '3' && name[1] <= '8') {
    return dihedral(static_cast<std::size_t>(name[1] - '0'));
  }
  throw Error("unknown group name '" + name + "'");
}

}  // namespace shortcycle::catalog
