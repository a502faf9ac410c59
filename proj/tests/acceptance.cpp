// Acceptance checks 1-12. Prints one "[PASS]" or "[FAIL]" line per
// criterion; exit status is non-zero if any selected criterion fails.
// Usage: acceptance [N ...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "shortcycle/report_json.hpp"
#include "shortcycle/shortcycle.hpp"

using namespace shortcycle;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// Groups of order <= 60 for the Cayley corpus.
std::vector<FiniteGroup> cayley_corpus_groups() {
  std::vector<FiniteGroup> gs;
  for (std::size_t n = 1; n <= 60; n += 1) gs.push_back(FiniteGroup::cyclic(n));
  const auto s3 = catalog::symmetric(3);
  for (std::size_t k = 2; k <= 10; ++k) gs.push_back(FiniteGroup::direct_product(s3, FiniteGroup::cyclic(k)));
  gs.push_back(FiniteGroup::direct_product(s3, s3));
  gs.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(6)));
  gs.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(12)));
  gs.push_back(FiniteGroup::direct_product(catalog::alternating4(), FiniteGroup::cyclic(5)));
  gs.push_back(catalog::symmetric(4));
  gs.push_back(catalog::quaternion8());
  gs.push_back(catalog::dicyclic12());
  for (std::size_t m = 3; m <= 8; ++m) gs.push_back(catalog::dihedral(m));
  return gs;
}

// 500 seeded non-empty connection sets.
std::vector<cayley::CayleySpec> cayley_corpus() {
  const auto groups = cayley_corpus_groups();
  Xoshiro256 rng(20240501);
  std::vector<cayley::CayleySpec> out;
  while (out.size() < 500) {
    const auto& g = groups[rng.uniform(groups.size())];
    GroupSubset a(g);
    const double p = 0.25 * rng.unit();
    for (Element x = 0; x < g.order(); ++x) {
      if (rng.unit() < p) a.insert(x);
    }
    if (a.empty()) a.insert(static_cast<Element>(rng.uniform(g.order())));
    out.emplace_back(g, std::move(a));
  }
  return out;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  std::size_t failures = 0, cases = 0;
  for (std::size_t n = 1; n <= 30; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      ++cases;
      const auto e = cayley::circulant_extremal(n, r);
      const auto g = girth(cayley::build(e.spec));
      if (!g || g->length != (n + r - 1) / r) ++failures;
    }
  }
  const double t = seconds_since(t0);
  return {failures == 0 && t < 5.0,
          std::to_string(cases) + " circulants, " + std::to_string(failures) + " failures, " + fmt(t) + " s"};
}

Outcome criterion2() {
  const auto t0 = Clock::now();
  std::size_t mismatches = 0;
  const auto corpus = cayley_corpus();
  for (const auto& s : corpus) {
    const auto a = cayley::cayley_girth(s);
    const auto b = girth(cayley::build(s));
    if (a.has_value() != b.has_value() || (a && *a != b->length)) ++mismatches;
  }
  const double t = seconds_since(t0);
  return {mismatches == 0 && t < 30.0,
          std::to_string(corpus.size()) + " specs, " + std::to_string(mismatches) + " mismatches, " + fmt(t) + " s"};
}

Outcome criterion3() {
  std::uint64_t pairs = 0, violations = 0;
  double worst = 0;
  std::size_t groups = 0;
  for (const auto& g : catalog::small_groups(12)) {
    const auto t0 = Clock::now();
    const auto r = kemperman::scan_group(g, g.order());
    const double t = seconds_since(t0);
    if (g.order() == 12) worst = std::max(worst, t);
    pairs += r.pairs_checked;
    violations += r.violations;
    ++groups;
  }
  return {violations == 0 && worst < 60.0,
          std::to_string(groups) + " groups, " + std::to_string(pairs) + " pairs, " + std::to_string(violations) +
              " violations, slowest order-12 scan " + fmt(worst) + " s"};
}

Outcome criterion4() {
  std::uint64_t checked = 0, violations = 0;
  for (const auto& g : catalog::small_groups(12)) {
    for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (g.order() - 1)); ++rest) {
      const auto b = GroupSubset::from_mask(g, (rest << 1) | 1u);
      for (std::size_t k = 1; k <= 4; ++k) {
        if (!kemperman::power_hypothesis_holds(b, k)) break;
        ++checked;
        if (!kemperman::verify_power_bound(b, k).holds) ++violations;
      }
    }
  }
  const auto z12 = FiniteGroup::cyclic(12);
  const auto tight = kemperman::verify_power_bound(GroupSubset(z12, {0, 1}), 3);
  const bool witness = tight.size == 4 && tight.bound == 4;
  return {violations == 0 && witness,
          std::to_string(checked) + " (B,k) pairs, " + std::to_string(violations) + " violations, Z/12 {0,1} k=3: " +
              std::to_string(tight.size) + " = " + std::to_string(tight.bound)};
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  std::size_t failures = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    Xoshiro256 rng(77, i);
    const std::size_t r = 1 + rng.uniform(6);
    const std::size_t n = r + 1 + rng.uniform(40 - r);
    const double extra = 0.15 * rng.unit();
    Digraph g(n);
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v) {
      others.clear();
      for (Vertex w = 0; w < n; ++w) {
        if (w != v) others.push_back(w);
      }
      for (std::size_t j = 0; j < others.size(); ++j) {
        std::swap(others[j], others[j + rng.uniform(others.size() - j)]);
        if (j < r || rng.unit() < extra) g.add_edge(v, others[j]);
      }
    }
    try {
      const auto c = cs::find_short_cycle(g, r);
      if (!is_valid_cycle(g, c) || c.length() > 2 * n / (r + 1)) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  const double t = seconds_since(t0);
  return {failures == 0 && t < 60.0, "2000 graphs, " + std::to_string(failures) + " failures, " + fmt(t) + " s"};
}

std::vector<verify::VerificationReport> scan_n5(unsigned workers) {
  std::vector<verify::VerificationReport> out;
  for (std::size_t r = 1; r <= 5; ++r) out.push_back(verify::exhaustive_ch(5, r, {workers, std::nullopt}));
  return out;
}

// Best of several repetitions, to keep scheduler noise out of the ratio.
double time_scan(unsigned workers, int reps) {
  double best = 1e9;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    scan_n5(workers);
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

Outcome criterion6() {
  const auto t0 = Clock::now();
  const auto reports = scan_n5(1);
  const double t1 = seconds_since(t0);
  std::size_t violations = 0;
  bool all_scanned = true;
  for (const auto& r : reports) {
    violations += r.violations.size();
    all_scanned = all_scanned && r.complete() && r.scanned == (std::uint64_t{1} << 20);
  }
  const auto& r2 = reports[1];
  bool tight = false;
  if (r2.extremal && r2.extremal->girth == 3 && r2.extremal->bound == 3) {
    const auto g = verify::graph_from_mask(5, r2.extremal->index);
    tight = g.min_outdegree() >= 2 && g.girth() == std::optional<std::size_t>(3);
  }

  const bool same = scan_n5(4) == reports;
  const double serial = time_scan(1, 5);
  const double parallel = time_scan(4, 5);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const double ideal = std::min(4u, hw);
  const double speedup = serial / parallel;
  const bool scaling = speedup >= 0.5 * ideal;
  std::ostringstream d;
  d << "5 x 2^20 masks, " << violations << " violations, (5,2) extremal mask "
    << (r2.extremal ? std::to_string(r2.extremal->index) : "none") << " girth 3 = bound 3" << (tight ? "" : " MISSING")
    << ", " << fmt(t1) << " s single worker; --workers 4 identical=" << (same ? "yes" : "no") << ", speedup "
    << fmt(speedup) << " vs ideal " << ideal << " (" << hw << " hardware threads)";
  return {violations == 0 && all_scanned && tight && same && scaling && t1 < 120.0, d.str()};
}

Outcome criterion7() {
  std::size_t violations = 0;
  const auto corpus = cayley_corpus();
  for (const auto& s : corpus) {
    if (!cayley::hamidoune_cayley_bound(s).holds) ++violations;
  }
  return {violations == 0, std::to_string(corpus.size()) + " specs, " + std::to_string(violations) + " violations"};
}

Outcome criterion8() {
  std::vector<cayley::CayleySpec> fixtures;
  Xoshiro256 rng(88);
  for (const auto& g : catalog::small_groups(10)) {
    for (int t = 0; t < 8; ++t) {
      GroupSubset a(g);
      for (Element x = 0; x < g.order(); ++x) {
        if (rng.unit() < 0.35) a.insert(x);
      }
      if (a.empty()) a.insert(static_cast<Element>(rng.uniform(g.order())));
      fixtures.emplace_back(g, std::move(a));
    }
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t r = 1; r <= n; ++r) fixtures.push_back(cayley::circulant_extremal(n, r).spec);
  }
  std::size_t failures = 0, full_groups = 0;
  for (const auto& s : fixtures) {
    try {
      const auto g = cayley::build(s);
      const auto tr = transitive::is_vertex_transitive(g);
      if (!tr.transitive) {
        ++failures;
        continue;
      }
      std::optional<transitive::AutomorphismGroup> ag;
      if (tr.group && tr.group->order() > s.group.order()) {
        ag = *tr.group;
        ++full_groups;
      } else {
        ag = transitive::left_translations(s);
      }
      const auto h = transitive::hamidoune_cycle(g, *ag);
      const std::size_t d = s.connection.size();
      if (!is_valid_cycle(g, h.cycle) || h.cycle.length() > (g.size() + d - 1) / d) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  Digraph edge(2);
  edge.add_edge(0, 1);
  const bool edge_rejected = !transitive::is_vertex_transitive(edge).transitive;
  return {failures == 0 && edge_rejected,
          std::to_string(fixtures.size()) + " fixtures (" + std::to_string(full_groups) +
              " via a larger automorphism group), " + std::to_string(failures) +
              " failures; single edge non-transitive=" + (edge_rejected ? "yes" : "no")};
}

Outcome criterion9() {
  const auto d = additive::greene_digest(257);
  const bool ok = d.set_size == 17 && d.sumset_size == 105 && d.min_representations >= 2 &&
                  d.graph_sum_size == 17 && std::max(d.d1, d.d2) == 17;
  std::ostringstream s;
  s << "|A|=" << d.set_size << " |A+A|=" << d.sumset_size << " (expected 105; " << d.lifted_sumset_size
    << " as integers before reduction mod 257) min r=" << d.min_representations
    << " graph_sum=" << d.graph_sum_size << " max(d1,d2)=" << std::max(d.d1, d.d2);
  return {ok, s.str()};
}

Outcome criterion10() {
  std::size_t failures = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto f = additive::fox_labeling(n);
    if (!f.alpha_injective() || !f.gamma_injective() || f.sumset.size() != n) ++failures;
  }
  return {failures == 0, "n = 2..12, " + std::to_string(failures) + " failures"};
}

Outcome criterion11() {
  const auto t0 = Clock::now();
  std::size_t violations = 0;
  std::uint64_t samples = 0;
  for (std::size_t n = 10; n <= 20; ++n) {
    const auto r = verify::triangle_threshold_check(n, 10000, 1000 + n);
    violations += r.violations.size();
    samples += r.checked;
  }
  return {violations == 0 && samples == 110000,
          std::to_string(samples) + " samples over n = 10..20, " + std::to_string(violations) + " without a cycle of length <= 3, " +
              fmt(seconds_since(t0)) + " s"};
}

Outcome criterion12() {
  bool resume_ok = true;
  for (std::size_t r = 1; r <= 5; ++r) {
    const auto full = verify::exhaustive_ch(5, r);
    const auto half = verify::exhaustive_ch(5, r, {1, full.total / 2 + 12345});
    const std::string saved = verify::to_json(half).dump(2);
    const auto resumed = verify::resume_exhaustive(verify::report_from_json(Json::parse(saved)));
    resume_ok = resume_ok && !half.complete() && verify::to_json(resumed).dump() == verify::to_json(full).dump();
  }
  const auto a = verify::to_json(verify::sampled_ch(20, 4, 10000, 99)).dump();
  const auto b = verify::to_json(verify::sampled_ch(20, 4, 10000, 99)).dump();
  const auto c = verify::to_json(verify::sampled_ch(20, 4, 10000, 99, 4)).dump();
  const auto t1 = verify::to_json(verify::triangle_threshold_check(15, 2000, 5)).dump();
  const auto t2 = verify::to_json(verify::triangle_threshold_check(15, 2000, 5, 3)).dump();
  const bool seeds_ok = a == b && a == c && t1 == t2;
  return {resume_ok && seeds_ok, std::string("checkpoint/resume byte-identical=") + (resume_ok ? "yes" : "no") +
                                     ", same-seed sampled reports identical=" + (seeds_ok ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3,  criterion4,
                                                       criterion5, criterion6, criterion7,  criterion8,
                                                       criterion9, criterion10, criterion11, criterion12};
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const std::size_t k = std::strtoul(argv[i], nullptr, 10);
    if (k < 1 || k > criteria.size()) {
      std::cerr << "usage: acceptance [1-12 ...]\n";
      return 2;
    }
    selected.insert(k);
  }
  if (selected.empty()) {
    for (std::size_t k = 1; k <= criteria.size(); ++k) selected.insert(k);
  }
  int failed = 0;
  for (auto k : selected) {
    Outcome o;
    try {
      o = criteria[k - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
