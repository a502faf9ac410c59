// Command-line front end. Every run ends with one summary line of
// space-separated key=value fields (or a single JSON object with --json).
// Exit status: 0 success, 1 violation or failed check, 2 usage/input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "shortcycle/report_json.hpp"
#include "shortcycle/shortcycle.hpp"

namespace sc = shortcycle;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  unsigned workers = 1;
  std::string file;
  std::size_t n = 0;
  std::size_t r = 0;
  std::string group;
  std::string set;
  bool want_girth = false;
  bool want_connected = false;
  std::size_t max_size = 0;
  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::string resume;
  std::optional<std::uint64_t> stop_at;
  std::string save;
  std::size_t count = 0;
  std::size_t p = 0;
};

std::string cycle_text(const sc::Cycle& c) { return sc::io::join(c.vertices); }

std::string elements_text(const std::vector<sc::Element>& xs) {
  return sc::io::join(std::vector<sc::Vertex>(xs.begin(), xs.end()));
}

int emit(const Options& o, const sc::Json& j, const std::string& line, int code = kOk) {
  if (o.json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << line << '\n';
  }
  return code;
}

int cmd_girth(const Options& o) {
  const auto g = sc::io::read_edge_list_file(o.file);
  const auto res = sc::girth(g);
  if (!res) return emit(o, {{"girth", nullptr}}, "girth=none");
  return emit(o, {{"girth", res->length}, {"cycle", res->witness.vertices}},
              "girth=" + std::to_string(res->length) + " cycle=" + cycle_text(res->witness));
}

int cmd_cs_cycle(const Options& o) {
  const auto g = sc::io::read_edge_list_file(o.file);
  const auto c = sc::cs::find_short_cycle(g, o.r);
  const auto bound = sc::cs::cs_bound(static_cast<std::int64_t>(g.size()), static_cast<std::int64_t>(o.r));
  return emit(o,
              {{"length", c.length()}, {"bound", bound.floor()}, {"bound_exact", bound.to_string()},
               {"cycle", c.vertices}},
              "length=" + std::to_string(c.length()) + " bound=" + std::to_string(bound.floor()) +
                  " cycle=" + cycle_text(c));
}

int cmd_circulant(const Options& o) {
  const auto ext = sc::cayley::circulant_extremal(o.n, o.r);
  const auto graph = sc::cayley::build(ext.spec);
  const auto measured = sc::girth(graph);
  const bool ok = measured && measured->length == ext.girth && sc::is_valid_cycle(graph, ext.witness);
  std::ostringstream line;
  line << "girth=" << (measured ? std::to_string(measured->length) : "none") << " bound=" << ext.girth
       << " witness=" << cycle_text(ext.witness);
  return emit(o,
              {{"n", o.n}, {"r", o.r}, {"girth", measured ? sc::Json(measured->length) : sc::Json()},
               {"bound", ext.girth}, {"witness", ext.witness.vertices}},
              line.str(), ok ? kOk : kViolation);
}

int cmd_cayley(const Options& o) {
  const auto grp = sc::io::parse_group_spec(o.group);
  const sc::cayley::CayleySpec spec(grp, sc::io::parse_subset(grp, o.set));
  if (o.want_connected) {
    const bool c = sc::cayley::is_connected(spec);
    return emit(o, {{"group", grp.name()}, {"connected", c}},
                std::string("connected=") + (c ? "true" : "false"));
  }
  const auto girth = sc::cayley::cayley_girth(spec);
  sc::Json j{{"group", grp.name()}, {"order", grp.order()}, {"set_size", spec.connection.size()},
             {"girth", girth ? sc::Json(*girth) : sc::Json()}};
  std::string line = "girth=" + (girth ? std::to_string(*girth) : std::string("none"));
  int code = kOk;
  if (!o.want_girth && !spec.connection.empty()) {
    const auto b = sc::cayley::hamidoune_cayley_bound(spec);
    j["bound"] = b.bound;
    j["holds"] = b.holds;
    line += " bound=" + std::to_string(b.bound) + " holds=" + (b.holds ? "true" : "false");
    if (!b.holds) code = kViolation;
  }
  if (girth) {
    const auto factors = sc::cayley::identity_factorization(spec);
    j["factors"] = *factors;
    line += " factors=" + elements_text(*factors);
  }
  return emit(o, j, line, code);
}

int cmd_kemperman(const Options& o) {
  const auto grp = sc::io::parse_group_spec(o.group);
  const std::size_t limit = o.max_size ? o.max_size : grp.order();
  const auto rep = sc::kemperman::scan_group(grp, limit, o.workers);
  std::ostringstream line;
  line << "group=" << rep.group << " pairs=" << rep.pairs_checked << " tight=" << rep.tight_count
       << " violations=" << rep.violations;
  return emit(o, sc::kemperman::to_json(rep), line.str(), rep.violations ? kViolation : kOk);
}

std::string report_line(const sc::verify::VerificationReport& r) {
  std::ostringstream line;
  line << "mode=" << r.mode << " n=" << r.n << " r=" << r.r << " scanned=" << r.scanned
       << " checked=" << r.checked << " tight=" << r.tight_count
       << " violations=" << r.violations.size();
  if (r.extremal) line << " extremal=" << r.extremal->index << " girth=" << r.extremal->girth;
  if (!r.complete()) line << " checkpoint=" << r.checkpoint;
  return line.str();
}

sc::verify::VerificationReport load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sc::Error("cannot open checkpoint '" + path + "'");
  sc::Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw sc::Error("checkpoint '" + path + "' is not valid JSON");
  }
  return sc::verify::report_from_json(j);
}

int cmd_verify_ch(const Options& o) {
  namespace v = sc::verify;
  if (o.stop_at && o.save.empty()) throw sc::Error("--stop-at needs --save to keep the checkpoint");
  v::VerificationReport rep;
  if (o.exhaustive) {
    if (o.samples || o.seed) throw sc::Error("--exhaustive excludes --samples/--seed");
    const v::ScanOptions opts{o.workers, o.stop_at};
    if (!o.resume.empty()) {
      auto saved = load_checkpoint(o.resume);
      if (saved.mode != "exhaustive" || saved.n != o.n || saved.r != o.r) {
        throw sc::Error("checkpoint parameters (mode=" + saved.mode + " n=" + std::to_string(saved.n) +
                        " r=" + std::to_string(saved.r) + ") do not match this run");
      }
      rep = v::resume_exhaustive(std::move(saved), opts);
    } else {
      rep = v::exhaustive_ch(o.n, o.r, opts);
    }
  } else {
    if (!o.samples || !o.seed) throw sc::Error("sampled mode needs --samples and --seed");
    if (!o.resume.empty() || o.stop_at) throw sc::Error("checkpointing applies to --exhaustive only");
    rep = v::sampled_ch(o.n, o.r, *o.samples, *o.seed, o.workers);
  }
  if (!o.save.empty()) {
    std::ofstream out(o.save);
    if (!out) throw sc::Error("cannot write '" + o.save + "'");
    out << v::to_json(rep).dump(2) << '\n';
  }
  return emit(o, v::to_json(rep), report_line(rep), rep.violations.empty() ? kOk : kViolation);
}

int cmd_transitive(const Options& o) {
  const auto g = sc::io::read_edge_list_file(o.file);
  const auto res = sc::transitive::is_vertex_transitive(g);
  sc::Json j{{"transitive", res.transitive}};
  std::string line = std::string("transitive=") + (res.transitive ? "true" : "false");
  if (res.group) {
    j["group_order"] = res.group->order();
    line += " group_order=" + std::to_string(res.group->order());
  }
  return emit(o, j, line);
}

int cmd_hamidoune(const Options& o) {
  const auto g = sc::io::read_edge_list_file(o.file);
  const auto res = sc::transitive::is_vertex_transitive(g);
  if (!res.transitive) throw sc::Error("non-transitive graph");
  if (!res.group) throw sc::Error("acting group too large to tabulate");
  const auto h = sc::transitive::hamidoune_cycle(g, *res.group);
  return emit(o,
              {{"length", h.cycle.length()}, {"bound", h.bound}, {"degree", h.degree},
               {"stabilizer", h.stabilizer.size()}, {"cycle", h.cycle.vertices}},
              "length=" + std::to_string(h.cycle.length()) + " bound=" + std::to_string(h.bound) +
                  " cycle=" + cycle_text(h.cycle));
}

int cmd_sidon(const Options& o) {
  const auto a = sc::additive::greedy_sidon(o.count);
  const auto fox = sc::additive::fox_labeling(std::span<const sc::additive::Integer>(a));
  std::string terms;
  for (std::size_t i = 0; i < a.size(); ++i) terms += (i ? "," : "") + std::to_string(a[i]);
  const bool ok = fox.alpha_injective() && fox.gamma_injective() && fox.sumset.size() == a.size();
  return emit(o,
              {{"sidon", a}, {"alpha_injective", fox.alpha_injective()},
               {"gamma_injective", fox.gamma_injective()}, {"sumset_size", fox.sumset.size()}},
              "sidon=" + terms + " sumset=" + std::to_string(fox.sumset.size()), ok ? kOk : kViolation);
}

int cmd_greene(const Options& o) {
  const auto d = sc::additive::greene_digest(o.p);
  std::ostringstream line;
  line << "p=" << d.modulus << " set=" << d.set_size << " sumset=" << d.sumset_size << " lifted_sumset=" << d.lifted_sumset_size
       << " min_r=" << d.min_representations << " graph_sum=" << d.graph_sum_size << " d1=" << d.d1
       << " d2=" << d.d2;
  return emit(o,
              {{"p", d.modulus}, {"set_size", d.set_size}, {"sumset_size", d.sumset_size},
               {"lifted_sumset_size", d.lifted_sumset_size},
               {"min_representations", d.min_representations}, {"graph_sum_size", d.graph_sum_size},
               {"d1", d.d1}, {"d2", d.d2}},
              line.str());
}

int cmd_triangle(const Options& o) {
  const auto rep = sc::verify::triangle_threshold_check(o.n, *o.samples, *o.seed, o.workers);
  return emit(o, sc::verify::to_json(rep),
              "threshold=" + std::to_string(rep.r) + " " + report_line(rep),
              rep.violations.empty() ? kOk : kViolation);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short directed cycles: girth, constructive bounds and exhaustive checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit one JSON object instead of the summary line");
  app.add_option("--workers", o.workers, "Worker threads for scans")->check(CLI::Range(1u, 256u));

  auto* girth = app.add_subcommand("girth", "Shortest directed cycle of an edge-list graph");
  girth->add_option("file", o.file, "Edge list: 'n m' then m lines 'u v'")->required();

  auto* cs = app.add_subcommand("cs-cycle", "Cycle of length <= floor(2n/(r+1)) by recursive reduction");
  cs->add_option("file", o.file, "Edge list")->required();
  cs->add_option("--r", o.r, "Minimum outdegree")->required();

  auto* circ = app.add_subcommand("circulant", "Extremal circulant Z/n with steps 1..r");
  circ->add_option("--n", o.n)->required();
  circ->add_option("--r", o.r)->required();

  auto* cay = app.add_subcommand("cayley", "Cayley digraph girth, bound and connectivity");
  cay->add_option("--group", o.group, "cyclic:N, table:PATH or a catalogue name")->required();
  cay->add_option("--set", o.set, "Comma-separated element indices")->required();
  auto* only_girth = cay->add_flag("--girth", o.want_girth, "Report the girth only");
  cay->add_flag("--connected", o.want_connected, "Report connectivity only")->excludes(only_girth);

  auto* kem = app.add_subcommand("kemperman-scan", "Exhaustive product-set bound over subset pairs");
  kem->add_option("--group", o.group)->required();
  kem->add_option("--max-size", o.max_size, "Largest subset size (default: group order)");

  auto* ver = app.add_subcommand("verify-ch", "Girth <= ceil(n/r) under minimum outdegree r");
  ver->add_option("--n", o.n)->required();
  ver->add_option("--r", o.r)->required();
  ver->add_flag("--exhaustive", o.exhaustive, "Scan every loop-free digraph (n <= 5)");
  ver->add_option("--samples", o.samples);
  ver->add_option("--seed", o.seed);
  ver->add_option("--resume", o.resume, "Continue from a saved report")->check(CLI::ExistingFile);
  ver->add_option("--stop-at", o.stop_at, "Stop before this mask");
  ver->add_option("--save", o.save, "Write the report JSON here");

  auto* tr = app.add_subcommand("transitive-check", "Vertex-transitivity of an edge-list graph (n <= 10)");
  tr->add_option("file", o.file)->required();

  auto* ham = app.add_subcommand("hamidoune", "Cycle of length <= ceil(n/d) in a vertex-transitive graph");
  ham->add_option("file", o.file)->required();

  auto* sid = app.add_subcommand("sidon", "Greedy Sidon set and its complete-graph labelling");
  sid->add_option("--count", o.count)->required()->check(CLI::PositiveNumber);

  auto* gre = app.add_subcommand("greene", "Sumset digest of {0, +-2^i} in Z/p");
  gre->add_option("--p", o.p)->required();

  auto* tri = app.add_subcommand("triangle-check", "Triangles above the (3 - sqrt 5)/2 outdegree threshold");
  tri->add_option("--n", o.n)->required();
  tri->add_option("--samples", o.samples)->required();
  tri->add_option("--seed", o.seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*girth) return cmd_girth(o);
    if (*cs) return cmd_cs_cycle(o);
    if (*circ) return cmd_circulant(o);
    if (*cay) return cmd_cayley(o);
    if (*kem) return cmd_kemperman(o);
    if (*ver) return cmd_verify_ch(o);
    if (*tr) return cmd_transitive(o);
    if (*ham) return cmd_hamidoune(o);
    if (*sid) return cmd_sidon(o);
    if (*gre) return cmd_greene(o);
    if (*tri) return cmd_triangle(o);
  } catch (const sc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}
