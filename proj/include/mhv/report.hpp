#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mhv {

struct SuiteResult {
    std::string name;
    long long passed = 0;
    long long failed = 0;
    std::vector<std::string> counterexamples; // exact vectors / grid points, capped
    std::optional<std::uint64_t> prng_seed;   // present for randomized suites
    nlohmann::json details = nlohmann::json::object();
    double wall_seconds = 0; // text summary only, never serialized

    void check(bool ok, const std::string& counterexample);
    bool ok() const { return failed == 0; }
};

struct Report {
    std::vector<SuiteResult> suites;

    bool pass() const;
    // Byte-deterministic: sorted keys, canonical rational strings, no
    // floating point, no timing.
    nlohmann::json to_json() const;
    std::string text_summary() const;
};

void emit_report(const Report& report, const std::string& path);

} // namespace mhv
