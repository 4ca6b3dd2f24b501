#pragma once

#include "mhv/analysis.hpp"
#include "mhv/config.hpp"
#include "mhv/probe.hpp"
#include "mhv/report.hpp"

#include <cstdint>

namespace mhv {

struct SuiteContext {
    const Config& config;
    std::uint64_t prng_seed = 1;
    int jobs = 1;
};

// Individual sections, exposed so the acceptance harness can time and report
// them one by one; the public suites below aggregate them.
SuiteResult run_lie_axioms_section(const SuiteContext& ctx);     // antisymmetry, Jacobi, theta laws
SuiteResult run_pbw_section(const SuiteContext& ctx);            // confluence, associativity, bounds
SuiteResult run_module_axiom_section(const SuiteContext& ctx);   // [x,y]v = x(yv)-y(xv) per module
SuiteResult run_whittaker_grid_section(const SuiteContext& ctx); // Whittaker criterion concordance
SuiteResult run_omega_grid_section(const SuiteContext& ctx);     // polynomial-family concordance
SuiteResult run_tensor_grid_section(const SuiteContext& ctx);    // tensor-family concordance

// Lie axioms, automorphism laws, PBW confluence/associativity/termination/
// filtration, and the module-axiom sweep over the configured modules.
SuiteResult run_axioms_suite(const SuiteContext& ctx);

// Virasoro relations of the Sugawara operators, the mixed relation, and the
// ground shift, on the half-integer Heisenberg Whittaker module.
SuiteResult run_sugawara_suite(const SuiteContext& ctx);

// Equivariance of the decomposition map on the pure-h span, plus the
// phi'-route consistency of the Whittaker criterion.
SuiteResult run_decomposition_suite(const SuiteContext& ctx);

// Criteria vs. probes vs. constructive routes over the parameter grids for
// the Whittaker, polynomial and tensor families.
SuiteResult run_criteria_grid_suite(const SuiteContext& ctx);

// Config-specified probe tasks with expected outcomes.
SuiteResult run_probe_suite(const SuiteContext& ctx);

// Isomorphism predicates: equivalence-relation laws, action-level soundness,
// and the tensor proxy.
SuiteResult run_iso_suite(const SuiteContext& ctx);

Report run_suites(const Config& config, std::uint64_t prng_seed, int jobs);

nlohmann::json probe_outcome_to_json(const ProbeOutcome& out);

} // namespace mhv
