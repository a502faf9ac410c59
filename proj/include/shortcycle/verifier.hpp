#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "shortcycle/dense.hpp"
#include "shortcycle/digraph.hpp"
#include "shortcycle/error.hpp"
#include "shortcycle/rng.hpp"

namespace shortcycle::verify {

// Girth bound ceil(n / r) asserted for minimum outdegree r.
inline std::size_t ch_bound(std::size_t n, std::size_t r) { return (n + r - 1) / r; }

struct Extremal {
  std::uint64_t index;  // adjacency mask or sample number
  std::size_t girth;
  std::size_t bound;

  friend bool operator==(const Extremal&, const Extremal&) = default;
};

struct VerificationReport {
  std::string mode;  // "exhaustive", "sampled" or "triangle"
  std::size_t n = 0;
  std::size_t r = 0;  // minimum outdegree imposed
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t scanned = 0;  // masks or samples visited
  std::uint64_t checked = 0;  // of those, graphs meeting the outdegree bound
  std::uint64_t tight_count = 0;
  std::vector<std::uint64_t> violations;
  std::optional<Extremal> extremal;  // first instance with girth == bound
  std::uint64_t checkpoint = 0;      // next index to visit
  std::uint64_t total = 0;           // one past the last index

  bool complete() const { return checkpoint == total; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

namespace detail {

// Merges a report for the index range directly after `into`'s checkpoint.
inline void append(VerificationReport& into, const VerificationReport& part) {
  into.scanned += part.scanned;
  into.checked += part.checked;
  into.tight_count += part.tight_count;
  into.violations.insert(into.violations.end(), part.violations.begin(), part.violations.end());
  if (!into.extremal) into.extremal = part.extremal;
  into.checkpoint = part.checkpoint;
}

// Runs scan(lo, hi) over [begin, end) split into `workers` consecutive
// chunks and appends the chunk reports in index order.
template <typename Scan>
void run_partitioned(VerificationReport& report, std::uint64_t begin, std::uint64_t end,
                     unsigned workers, Scan&& scan) {
  if (end <= begin) return;
  const std::uint64_t span = end - begin;
  const unsigned k = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, span)));
  std::vector<VerificationReport> parts(k);
  if (k == 1) {
    parts[0] = scan(begin, end);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < k; ++w) {
      const std::uint64_t lo = begin + span * w / k, hi = begin + span * (w + 1) / k;
      threads.emplace_back([&, w, lo, hi] { parts[w] = scan(lo, hi); });
    }
    for (auto& t : threads) t.join();
  }
  for (const auto& p : parts) append(report, p);
}

// Records one instance of a check with the given bound.
inline void tally(VerificationReport& r, std::uint64_t index, std::optional<std::size_t> girth,
                  std::size_t bound) {
  ++r.checked;
  if (!girth) {
    r.violations.push_back(index);
  } else if (*girth == bound) {
    ++r.tight_count;
    if (!r.extremal) r.extremal = Extremal{index, *girth, bound};
  }
}

}  // namespace detail

inline constexpr std::size_t kMaxExhaustiveVertices = 5;

// Bit u*(n-1) + j of an exhaustive mask is the edge from u to the j-th
// vertex other than u, in increasing order.
inline DenseDigraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  DenseDigraph g(n);
  const std::size_t width = n - 1;
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint64_t bits = width == 0 ? 0 : (mask >> (u * width)) & ((std::uint64_t{1} << width) - 1);
    const std::uint64_t low = bits & ((std::uint64_t{1} << u) - 1);
    const std::uint64_t high = (bits >> u) << (u + 1);
    g.set_row(u, low | high);
  }
  return g;
}

inline std::uint64_t mask_from_graph(const DenseDigraph& g) {
  const std::size_t n = g.size(), width = n - 1;
  std::uint64_t mask = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u) continue;
      if (g.has_edge(u, v)) mask |= std::uint64_t{1} << (u * width + (v < u ? v : v - 1));
    }
  }
  return mask;
}

struct ScanOptions {
  unsigned workers = 1;
  // Stop before this mask (exclusive); the report's checkpoint then resumes.
  std::optional<std::uint64_t> stop_at;
};

namespace detail {

inline VerificationReport exhaustive_range(std::size_t n, std::size_t r, std::uint64_t lo,
                                           std::uint64_t hi) {
  VerificationReport part;
  const std::size_t width = n - 1;
  const std::uint64_t row_mask = width == 0 ? 0 : (std::uint64_t{1} << width) - 1;
  const std::size_t bound = ch_bound(n, r);
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    ++part.scanned;
    bool enough = true;
    for (std::size_t u = 0; u < n && enough; ++u) {
      enough = static_cast<std::size_t>(std::popcount((mask >> (u * width)) & row_mask)) >= r;
    }
    if (!enough) continue;
    tally(part, mask, graph_from_mask(n, mask).girth(bound), bound);
  }
  part.checkpoint = hi;
  return part;
}

}  // namespace detail

// Continues an exhaustive scan from its checkpoint.
inline VerificationReport resume_exhaustive(VerificationReport report, const ScanOptions& options = {}) {
  if (report.mode != "exhaustive") throw Error("checkpoint is not from an exhaustive scan");
  const std::uint64_t end = options.stop_at ? std::min(*options.stop_at, report.total) : report.total;
  if (end < report.checkpoint) throw Error("stop point precedes checkpoint");
  const std::size_t n = report.n, r = report.r;
  detail::run_partitioned(report, report.checkpoint, end, options.workers,
                          [n, r](std::uint64_t lo, std::uint64_t hi) {
                            return detail::exhaustive_range(n, r, lo, hi);
                          });
  return report;
}

// Every loop-free digraph on n <= 5 vertices, as an n(n-1)-bit mask counted
// up from 0; those with minimum outdegree >= r must have girth <= ceil(n/r).
inline VerificationReport exhaustive_ch(std::size_t n, std::size_t r, const ScanOptions& options = {}) {
  if (n == 0 || n > kMaxExhaustiveVertices) throw Error("exhaustive scan needs 1 <= n <= 5");
  if (r == 0 || r > n) throw Error("exhaustive scan needs 1 <= r <= n");
  VerificationReport report;
  report.mode = "exhaustive";
  report.n = n;
  report.r = r;
  report.total = std::uint64_t{1} << (n * (n - 1));
  return resume_exhaustive(std::move(report), options);
}

// Sample i draws from its own stream Xoshiro256(seed, i): each vertex takes
// a uniform r-subset of the other vertices as out-neighbours, then every
// remaining arc independently with probability 1/2.
inline DenseDigraph sample_min_outdegree_graph(std::size_t n, std::size_t r, std::uint64_t seed,
                                               std::uint64_t index) {
  Xoshiro256 rng(seed, index);
  DenseDigraph g(n);
  std::vector<std::size_t> others;
  others.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    others.clear();
    for (std::size_t w = 0; w < n; ++w) {
      if (w != v) others.push_back(w);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.uniform(others.size() - i));
      std::swap(others[i], others[j]);
      g.add_edge(v, others[i]);
    }
    for (std::size_t i = r; i < others.size(); ++i) {
      if (rng.coin()) g.add_edge(v, others[i]);
    }
  }
  return g;
}

inline VerificationReport sampled_ch(std::size_t n, std::size_t r, std::uint64_t samples,
                                     std::uint64_t seed, unsigned workers = 1) {
  if (n < 2 || n > DenseDigraph::kMaxVertices) throw Error("sampled scan needs 2 <= n <= 64");
  if (r == 0 || r >= n) throw Error("sampled scan needs 1 <= r <= n - 1");
  VerificationReport report;
  report.mode = "sampled";
  report.n = n;
  report.r = r;
  report.samples = samples;
  report.seed = seed;
  report.total = samples;
  const std::size_t bound = ch_bound(n, r);
  detail::run_partitioned(report, 0, samples, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    VerificationReport part;
    for (std::uint64_t i = lo; i < hi; ++i) {
      ++part.scanned;
      const auto g = sample_min_outdegree_graph(n, r, seed, i);
      detail::tally(part, i, g.girth(bound), bound);
    }
    part.checkpoint = hi;
    return part;
  });
  return report;
}

// Loop or digon whenever every outdegree is at least n/2.
inline bool digon_check(const Digraph& g) {
  if (g.size() == 0) throw Error("empty graph");
  if (2 * min_outdegree(g) < g.size()) {
    throw Error("precondition: minimum outdegree below n/2");
  }
  return has_loop(g) || has_digon(g);
}

// (3 - sqrt 5)/2, and the later improvements kept as report metadata.
inline double triangle_constant() { return (3.0 - std::sqrt(5.0)) / 2.0; }
inline double bondy_constant() { return (2.0 * std::sqrt(6.0) - 3.0) / 5.0; }
inline double shen_triangle_constant() { return 3.0 - std::sqrt(7.0); }

// Smallest integer k with k >= (3 - sqrt 5) n / 2, in exact arithmetic:
// 2k >= (3 - sqrt 5) n  <=>  3n - 2k <= 0  or  (3n - 2k)^2 <= 5 n^2.
inline std::size_t triangle_threshold_outdegree(std::size_t n) {
  if (n > (std::size_t{1} << 30)) throw Error("n too large for exact threshold");
  const auto nn = static_cast<std::int64_t>(n);
  std::int64_t k = static_cast<std::int64_t>(std::floor(triangle_constant() * static_cast<double>(n))) - 2;
  if (k < 0) k = 0;
  for (;; ++k) {
    const std::int64_t gap = 3 * nn - 2 * k;
    if (gap <= 0 || gap * gap <= 5 * nn * nn) return static_cast<std::size_t>(k);
  }
}

// Random oriented graph (no loops, no digons) with every outdegree >= k,
// n >= 2k + 1. Start from a random tournament; while some vertex v is short,
// reverse a directed path into v from a vertex with outdegree > k, which
// moves one unit of outdegree to v and keeps every other vertex unchanged
// (such a path exists because the vertices that reach v carry at least
// k |S| outgoing arcs). Finally delete each arc, in random order, with a
// per-graph probability q ~ U[0,1) when its tail can spare it.
inline DenseDigraph sample_oriented_graph(std::size_t n, std::size_t k, std::uint64_t seed,
                                          std::uint64_t index) {
  if (n > DenseDigraph::kMaxVertices) throw Error("sampled scan needs n <= 64");
  if (2 * k + 1 > n) throw Error("oriented graph with outdegree >= k needs n >= 2k + 1");
  Xoshiro256 rng(seed, index);
  DenseDigraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.coin()) g.add_edge(u, v); else g.add_edge(v, u);
    }
  }

  std::vector<std::size_t> parent(n);
  std::vector<std::size_t> queue;
  for (;;) {
    std::size_t short_vertex = n;
    for (std::size_t v = 0; v < n && short_vertex == n; ++v) {
      if (g.outdegree(v) < k) short_vertex = v;
    }
    if (short_vertex == n) break;
    // Backward BFS from the short vertex over arcs u -> w.
    std::vector<char> seen(n, 0);
    queue.assign(1, short_vertex);
    seen[short_vertex] = 1;
    std::size_t source = n;
    for (std::size_t head = 0; head < queue.size() && source == n; ++head) {
      const std::size_t w = queue[head];
      for (std::size_t u = 0; u < n; ++u) {
        if (seen[u] || !g.has_edge(u, w)) continue;
        seen[u] = 1;
        parent[u] = w;
        if (g.outdegree(u) > k) {
          source = u;
          break;
        }
        queue.push_back(u);
      }
    }
    SHORTCYCLE_ENSURE(source != n, "no surplus vertex reaches the short vertex");
    for (std::size_t u = source; u != short_vertex; u = parent[u]) {
      g.remove_edge(u, parent[u]);
      g.add_edge(parent[u], u);
    }
  }

  const double q = rng.unit();
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.has_edge(u, v)) arcs.emplace_back(u, v);
    }
  }
  for (std::size_t i = arcs.size(); i > 1; --i) {
    std::swap(arcs[i - 1], arcs[rng.uniform(i)]);
  }
  for (const auto& [u, v] : arcs) {
    if (g.outdegree(u) > k && rng.unit() < q) g.remove_edge(u, v);
  }
  return g;
}

// Oriented graphs with minimum outdegree >= ceil(c0 n), c0 = (3 - sqrt 5)/2,
// must contain a directed triangle.
inline VerificationReport triangle_threshold_check(std::size_t n, std::uint64_t samples,
                                                   std::uint64_t seed, unsigned workers = 1) {
  if (n < 3 || n > DenseDigraph::kMaxVertices) throw Error("triangle check needs 3 <= n <= 64");
  const std::size_t k = triangle_threshold_outdegree(n);
  if (2 * k + 1 > n) throw Error("no oriented graph reaches the threshold at this n");
  VerificationReport report;
  report.mode = "triangle";
  report.n = n;
  report.r = k;
  report.samples = samples;
  report.seed = seed;
  report.total = samples;
  detail::run_partitioned(report, 0, samples, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    VerificationReport part;
    for (std::uint64_t i = lo; i < hi; ++i) {
      ++part.scanned;
      const auto g = sample_oriented_graph(n, k, seed, i);
      SHORTCYCLE_ENSURE(g.min_outdegree() >= k, "sampled graph below threshold");
      detail::tally(part, i, g.girth(3), 3);
    }
    part.checkpoint = hi;
    return part;
  });
  return report;
}

}  // namespace shortcycle::verify
