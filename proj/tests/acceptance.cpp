// Acceptance harness: runs the eight release criteria end to end, printing
// one line per criterion. Everything is exact rational arithmetic; a
// criterion passes only when every one of its checks holds with tolerance
// zero. Usage: acceptance [mhv-binary] [default-config].
#include "mhv/errors.hpp"
#include "mhv/suites.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace mhv;

namespace {

using clock_type = std::chrono::steady_clock;

int failures = 0;

void report(int number, const std::string& name, bool ok, double seconds,
            const std::string& detail) {
    std::printf("%s  criterion %d: %s  [%.1fs]%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                seconds, detail.empty() ? "" : ("  " + detail).c_str());
    if (!ok) ++failures;
}

void report_suite(int number, const std::string& name, const SuiteResult& res) {
    std::printf("%s  criterion %d: %s  [%lld checks, %.1fs]%s\n", res.ok() ? "PASS" : "FAIL",
                number, name.c_str(), res.passed + res.failed, res.wall_seconds,
                res.counterexamples.empty() ? "" : ("  e.g. " + res.counterexamples[0]).c_str());
    if (!res.ok()) ++failures;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    std::string mhv_path = argc > 1 ? argv[1] : "./mhv";
    std::string config_path = argc > 2 ? argv[2] : "configs/default.json";

    Config config = Config::load(config_path);
    int jobs = std::max(1u, std::thread::hardware_concurrency());
    SuiteContext ctx{config, 20240101, jobs};

    // 1. Lie axioms, exhaustively over the [-6,6] window including every
    //    half-integer h-index.
    {
        auto t0 = clock_type::now();
        SuiteResult res = run_lie_axioms_section(ctx);
        res.wall_seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
        report_suite(1, "Lie axioms (antisymmetry + Jacobi, window 6)", res);
    }

    // 2. Sugawara operators: Virasoro relations with central charge 1, the
    //    mixed relation, the ground shift, and the explicit 1/2 central term.
    report_suite(2, "Sugawara relations on the Heisenberg Whittaker module",
                 run_sugawara_suite(ctx));

    // 3. Decomposition map equivariance (m = 0,1,2) and the phi'-route
    //    consistency of the Whittaker criterion.
    report_suite(3, "decomposition map equivariance + phi'-route consistency",
                 run_decomposition_suite(ctx));

    // 4. Whittaker criterion concordance grid: certified proper witnesses on
    //    the reducible side, twist normalization + vacuum-line reduction on
    //    the irreducible side, no Inconclusive outcomes.
    report_suite(4, "Whittaker criterion concordance grid", run_whittaker_grid_section(ctx));

    // 5. Polynomial family: closure of t C[t] in the degenerate case, cyclic
    //    evidence from seed t otherwise.
    report_suite(5, "polynomial-family criterion concordance", run_omega_grid_section(ctx));

    // 6. Tensor family: leader extraction against the key-surgery oracle,
    //    replayable line generation, certified witnesses in the degenerate
    //    cases.
    report_suite(6, "tensor-family machinery and concordance", run_tensor_grid_section(ctx));

    // 7. PBW engine randomized suites plus the module-axiom sweep over every
    //    module realized in the shipped config.
    {
        SuiteResult res = run_pbw_section(ctx);
        SuiteResult ma = run_module_axiom_section(ctx);
        res.passed += ma.passed;
        res.failed += ma.failed;
        for (const auto& c : ma.counterexamples) res.counterexamples.push_back(c);
        res.wall_seconds += ma.wall_seconds;
        report_suite(7, "PBW confluence/associativity + module axiom sweep", res);
    }

    // 8. CLI determinism: two verify runs on the shipped config produce
    //    byte-identical reports and exit 0.
    {
        auto t0 = clock_type::now();
        std::string out1 = "acceptance_report_1.json";
        std::string out2 = "acceptance_report_2.json";
        std::string base = "\"" + mhv_path + "\" verify --config \"" + config_path + "\" --jobs " +
                           std::to_string(jobs) + " --seed 20240101";
        int rc1 = std::system((base + " --out " + out1 + " > /dev/null 2>&1").c_str());
        int rc2 = std::system((base + " --out " + out2 + " > /dev/null 2>&1").c_str());
        std::string r1 = slurp(out1), r2 = slurp(out2);
        bool ok = rc1 == 0 && rc2 == 0 && !r1.empty() && r1 == r2;
        double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
        std::string detail;
        if (rc1 != 0 || rc2 != 0) detail = "nonzero exit status";
        else if (r1.empty()) detail = "empty report";
        else if (r1 != r2) detail = "reports differ between runs";
        report(8, "CLI determinism (two identical verify runs, exit 0)", ok, dt, detail);
        std::remove(out1.c_str());
        std::remove(out2.c_str());
    }

    std::printf("%s\n", failures == 0 ? "acceptance: all criteria pass"
                                      : "acceptance: FAILURES present");
    return failures == 0 ? 0 : 1;
}
