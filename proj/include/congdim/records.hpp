// Machine-readable output: one JSON object per line. Key order is the
// library's default (sorted), so identical runs serialize byte-identically.
#pragma once

#include <string>

#include <json.hpp>

#include "congdim/scan.hpp"

namespace congdim {

inline nlohmann::json to_json(const CongruenceReport& r, u64 seed) {
    nlohmann::json j;
    j["type"] = "report";
    j["theorem_id"] = to_string(r.id);
    j["k"] = r.k;
    if (r.p) j["p"] = *r.p; else j["p"] = nullptr;
    if (r.n) j["n"] = *r.n; else j["n"] = nullptr;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["modulus"] = r.modulus;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["provenance"] = to_string(r.provenance);
    j["seed"] = seed;
    return j;
}

inline nlohmann::json to_json(const SkipRecord& s) {
    nlohmann::json j;
    j["type"] = "skip";
    j["theorem_id"] = to_string(s.theorem);
    j["k"] = s.k;
    if (s.p) j["p"] = *s.p; else j["p"] = nullptr;
    if (s.n) j["n"] = *s.n; else j["n"] = nullptr;
    j["reason"] = s.reason;
    return j;
}

inline std::string machine_record(const CongruenceReport& r, u64 seed) {
    return to_json(r, seed).dump();
}

inline std::string machine_record(const SkipRecord& s) { return to_json(s).dump(); }

inline std::string machine_summary(i64 pass, i64 fail, i64 skipped, i64 rejected_draws) {
    nlohmann::json j;
    j["type"] = "summary";
    j["pass"] = pass;
    j["fail"] = fail;
    j["skip"] = skipped;
    j["rejected_draws"] = rejected_draws;
    return j.dump();
}

}  // namespace congdim
