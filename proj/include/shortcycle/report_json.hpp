#pragma once

#include <string>

#include "json.hpp"
#include "shortcycle/kemperman.hpp"
#include "shortcycle/verifier.hpp"

namespace shortcycle {

using Json = nlohmann::ordered_json;

namespace verify {

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["mode"] = r.mode;
  j["n"] = r.n;
  j["r"] = r.r;
  if (r.mode != "exhaustive") {
    j["samples"] = r.samples;
    j["seed"] = r.seed;
  }
  j["scanned"] = r.scanned;
  j["checked"] = r.checked;
  j["tight_count"] = r.tight_count;
  j["violations"] = r.violations;
  const char* key = r.mode == "exhaustive" ? "mask" : "sample";
  if (r.extremal) {
    j["extremal"] = {{key, r.extremal->index}, {"girth", r.extremal->girth}, {"bound", r.extremal->bound}};
  } else {
    j["extremal"] = nullptr;
  }
  j["checkpoint"] = r.checkpoint;
  j["total"] = r.total;
  if (r.mode == "triangle") {
    j["constants"] = {{"c0", triangle_constant()},
                      {"bondy", bondy_constant()},
                      {"shen", shen_triangle_constant()}};
  }
  return j;
}

inline VerificationReport report_from_json(const Json& j) {
  try {
    VerificationReport r;
    r.mode = j.at("mode").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.r = j.at("r").get<std::size_t>();
    if (r.mode != "exhaustive") {
      r.samples = j.at("samples").get<std::uint64_t>();
      r.seed = j.at("seed").get<std::uint64_t>();
    }
    r.scanned = j.at("scanned").get<std::uint64_t>();
    r.checked = j.at("checked").get<std::uint64_t>();
    r.tight_count = j.at("tight_count").get<std::uint64_t>();
    r.violations = j.at("violations").get<std::vector<std::uint64_t>>();
    const auto& e = j.at("extremal");
    if (!e.is_null()) {
      const char* key = r.mode == "exhaustive" ? "mask" : "sample";
      r.extremal = Extremal{e.at(key).get<std::uint64_t>(), e.at("girth").get<std::size_t>(),
                            e.at("bound").get<std::size_t>()};
    }
    r.checkpoint = j.at("checkpoint").get<std::uint64_t>();
    r.total = j.at("total").get<std::uint64_t>();
    if (r.checkpoint > r.total) throw Error("checkpoint beyond end of scan");
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed report: ") + ex.what());
  }
}

}  // namespace verify

namespace kemperman {

inline Json to_json(const ScanReport& r) {
  auto witness = [](const std::optional<ScanWitness>& w) -> Json {
    if (!w) return nullptr;
    return {{"a_mask", w->a_mask}, {"b_mask", w->b_mask}, {"product_size", w->product_size}};
  };
  Json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["pairs_checked"] = r.pairs_checked;
  j["violations"] = r.violations;
  j["tight_count"] = r.tight_count;
  j["witness"] = witness(r.witness);
  j["first_violation"] = witness(r.first_violation);
  return j;
}

}  // namespace kemperman

}  // namespace shortcycle
