#pragma once

#include "mhv/modules.hpp"
#include "mhv/probe.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace mhv {

// Parameter ranges for the criteria concordance grids. Every scalar is an
// exact rational; the defaults cover every boolean branch of every criterion.
struct GridSpec {
    std::vector<long long> m_values{1, 2};
    std::vector<Scalar> phi_values{Scalar(0), Scalar(1), Scalar(2)};
    std::vector<Scalar> l_values{Scalar(0), Scalar(1)};
    std::vector<Scalar> alpha_values{Scalar(0), Scalar(1)};
    std::vector<Scalar> beta_values{Scalar(0), Scalar(1)};
    std::vector<Scalar> lambda0_values{Scalar(1), Scalar(2)};
};

struct ProbeTask {
    std::string module_name;
    std::string seed_expr;
    std::string expect; // "", "CyclicEvidence", "ProperWitness", "certified-ProperWitness"
};

// Self-describing run configuration. Unknown keys are rejected so a typo in
// a config never silently changes a run.
struct Config {
    std::vector<std::string> suites;
    std::map<std::string, ModulePtr> modules;
    ProbeCaps caps;
    GridSpec grid;
    std::vector<ProbeTask> probes;
    long long axiom_window = 6;
    long long action_window = 2; // module-axiom window (basis degree <= 3)
    std::string out_path;

    static Config from_json(const nlohmann::json& j);
    static Config load(const std::string& path);
};

// Module descriptors (see the shipped default config):
//   {"type":"omega","lambda0":"2","alpha":"1","beta":"3"}
//   {"type":"whittakerD","m":1,"d":{"1":"1","2":"0"},"h":{"1/2":"1"},"c":"0","l":"1"}
//   {"type":"whittakerH","h":{"1/2":"1"},"l":"1"}
//   {"type":"whittakerV","m":1,"d":{"1":"1"},"c":"0"}
//   {"type":"sugawaraH","h":{"1/2":"1"},"l":"1"}
//   {"type":"lift","inner":{...}}
//   {"type":"twist","inner":{...},"coeffs":{"0":"1","-1":"1/2"}}
//   {"type":"tensor","left":{...},"right":{...}}
ModulePtr module_from_json(const nlohmann::json& j);

WhittakerFunctionD whittaker_d_from_json(const nlohmann::json& j);
WhittakerFunctionH whittaker_h_from_json(const nlohmann::json& j);
WhittakerFunctionV whittaker_v_from_json(const nlohmann::json& j);

} // namespace mhv
