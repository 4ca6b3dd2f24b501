#include "mhv/report.hpp"

#include "mhv/errors.hpp"

#include <fstream>
#include <sstream>

namespace mhv {

namespace {
constexpr std::size_t kMaxCounterexamples = 20;
}

void SuiteResult::check(bool ok, const std::string& counterexample) {
    if (ok) {
        ++passed;
        return;
    }
    ++failed;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(counterexample);
}

bool Report::pass() const {
    for (const auto& s : suites)
        if (!s.ok()) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["suites"] = nlohmann::json::array();
    for (const auto& s : suites) {
        nlohmann::json e;
        e["name"] = s.name;
        e["passed"] = s.passed;
        e["failed"] = s.failed;
        e["counterexamples"] = s.counterexamples;
        if (s.prng_seed) e["seed"] = *s.prng_seed;
        if (!s.details.empty()) e["details"] = s.details;
        j["suites"].push_back(std::move(e));
    }
    j["verdict"] = pass() ? "pass" : "fail";
    return j;
}

std::string Report::text_summary() const {
    // timings as integer milliseconds: nothing the tool prints is ever a float
    std::ostringstream os;
    for (const auto& s : suites) {
        os << (s.ok() ? "PASS" : "FAIL") << "  " << s.name << ": " << s.passed << " checks";
        if (s.failed) os << ", " << s.failed << " failures";
        os << "  (" << static_cast<long long>(s.wall_seconds * 1000.0 + 0.5) << " ms)\n";
        for (const auto& c : s.counterexamples) os << "        counterexample: " << c << "\n";
    }
    os << "verdict: " << (pass() ? "pass" : "fail") << "\n";
    return os.str();
}

void emit_report(const Report& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("IOError", "cannot write report to '" + path + "'");
    out << report.to_json().dump() << "\n";
    if (!out) fail("IOError", "write failed for '" + path + "'");
}

} // namespace mhv
