#include "mhv/config.hpp"

#include "mhv/errors.hpp"

#include <fstream>

namespace mhv {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) fail("ConfigError", "unknown key '" + key + "' in " + where);
    }
}

Scalar scalar_field(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) fail("ConfigError", "missing '" + std::string(key) + "' in " + where);
    if (!j.at(key).is_string())
        fail("ConfigError", "'" + std::string(key) + "' in " + where + " must be a rational string");
    return Scalar::parse(j.at(key).get<std::string>());
}

Scalar scalar_or(const json& j, const char* key, const Scalar& fallback, const std::string& where) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_string())
        fail("ConfigError", "'" + std::string(key) + "' in " + where + " must be a rational string");
    return Scalar::parse(j.at(key).get<std::string>());
}

long long int_field(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        fail("ConfigError", "missing integer '" + std::string(key) + "' in " + where);
    return j.at(key).get<long long>();
}

// "k/2" with odd k -> twice-value k
long long half_twice_from_string(const std::string& s, const std::string& where) {
    Scalar v = Scalar::parse(s);
    Scalar twice = v * Scalar(2);
    if (!twice.is_integer())
        fail("ConfigError", "'" + s + "' in " + where + " is not a half-integer");
    long long t = std::stoll(twice.str());
    if (t % 2 == 0) fail("ConfigError", "'" + s + "' in " + where + " must be a strict half-integer");
    return t;
}

std::map<long long, Scalar> d_map(const json& j, const std::string& where) {
    std::map<long long, Scalar> out;
    if (!j.is_object()) fail("ConfigError", "'d' in " + where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) fail("ConfigError", "d-value in " + where + " must be a string");
        out[std::stoll(key)] = Scalar::parse(value.get<std::string>());
    }
    return out;
}

std::map<long long, Scalar> h_map(const json& j, const std::string& where) {
    std::map<long long, Scalar> out;
    if (!j.is_object()) fail("ConfigError", "'h' in " + where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) fail("ConfigError", "h-value in " + where + " must be a string");
        out[half_twice_from_string(key, where)] = Scalar::parse(value.get<std::string>());
    }
    return out;
}

std::vector<Scalar> scalar_list(const json& j, const std::string& where) {
    std::vector<Scalar> out;
    if (!j.is_array()) fail("ConfigError", where + " must be an array of rational strings");
    for (const auto& v : j) {
        if (!v.is_string()) fail("ConfigError", where + " entries must be rational strings");
        out.push_back(Scalar::parse(v.get<std::string>()));
    }
    return out;
}

AutomorphismSpec coeffs_from_json(const json& j, const std::string& where) {
    AutomorphismSpec spec;
    if (!j.is_object()) fail("ConfigError", "'coeffs' in " + where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) fail("ConfigError", "coefficient in " + where + " must be a string");
        spec.set(std::stoll(key), Scalar::parse(value.get<std::string>()));
    }
    return spec;
}

} // namespace

WhittakerFunctionD whittaker_d_from_json(const json& j) {
    reject_unknown(j, {"type", "m", "d", "h", "c", "l"}, "whittakerD descriptor");
    long long m = int_field(j, "m", "whittakerD descriptor");
    return WhittakerFunctionD::make(
        m, j.contains("d") ? d_map(j.at("d"), "whittakerD") : std::map<long long, Scalar>{},
        j.contains("h") ? h_map(j.at("h"), "whittakerD") : std::map<long long, Scalar>{},
        scalar_or(j, "c", Scalar(0), "whittakerD"), scalar_or(j, "l", Scalar(0), "whittakerD"));
}

WhittakerFunctionH whittaker_h_from_json(const json& j) {
    reject_unknown(j, {"type", "h", "l"}, "whittakerH descriptor");
    return WhittakerFunctionH::make(
        j.contains("h") ? h_map(j.at("h"), "whittakerH") : std::map<long long, Scalar>{},
        scalar_or(j, "l", Scalar(0), "whittakerH"));
}

WhittakerFunctionV whittaker_v_from_json(const json& j) {
    reject_unknown(j, {"type", "m", "d", "c"}, "whittakerV descriptor");
    long long m = int_field(j, "m", "whittakerV descriptor");
    return WhittakerFunctionV::make(
        m, j.contains("d") ? d_map(j.at("d"), "whittakerV") : std::map<long long, Scalar>{},
        scalar_or(j, "c", Scalar(0), "whittakerV"));
}

ModulePtr module_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        fail("ConfigError", "module descriptor needs a 'type' string");
    std::string type = j.at("type").get<std::string>();
    if (type == "omega") {
        reject_unknown(j, {"type", "lambda0", "alpha", "beta"}, "omega descriptor");
        return make_omega(OmegaParams::make(scalar_field(j, "lambda0", "omega"),
                                            scalar_or(j, "alpha", Scalar(0), "omega"),
                                            scalar_or(j, "beta", Scalar(0), "omega")));
    }
    if (type == "whittakerD") return make_whittaker_module(whittaker_d_from_json(j));
    if (type == "whittakerH") return make_whittaker_module(whittaker_h_from_json(j));
    if (type == "whittakerV") return make_whittaker_module(whittaker_v_from_json(j));
    if (type == "sugawaraH") {
        reject_unknown(j, {"type", "h", "l"}, "sugawaraH descriptor");
        return make_sugawara_module(WhittakerFunctionH::make(
            j.contains("h") ? h_map(j.at("h"), "sugawaraH") : std::map<long long, Scalar>{},
            scalar_or(j, "l", Scalar(0), "sugawaraH")));
    }
    if (type == "lift") {
        reject_unknown(j, {"type", "inner"}, "lift descriptor");
        if (!j.contains("inner")) fail("ConfigError", "lift descriptor needs 'inner'");
        return lift_trivial_H(module_from_json(j.at("inner")));
    }
    if (type == "twist") {
        reject_unknown(j, {"type", "inner", "coeffs"}, "twist descriptor");
        if (!j.contains("inner") || !j.contains("coeffs"))
            fail("ConfigError", "twist descriptor needs 'inner' and 'coeffs'");
        return twist_module(module_from_json(j.at("inner")),
                            coeffs_from_json(j.at("coeffs"), "twist"));
    }
    if (type == "tensor") {
        reject_unknown(j, {"type", "left", "right"}, "tensor descriptor");
        if (!j.contains("left") || !j.contains("right"))
            fail("ConfigError", "tensor descriptor needs 'left' and 'right'");
        return tensor(module_from_json(j.at("left")), module_from_json(j.at("right")));
    }
    fail("ConfigError", "unknown module type '" + type + "'");
}

Config Config::from_json(const json& j) {
    reject_unknown(j,
                   {"suites", "modules", "caps", "grid", "probes", "axiom_window",
                    "action_window", "out"},
                   "config");
    Config cfg;
    if (j.contains("suites")) {
        if (!j.at("suites").is_array()) fail("ConfigError", "'suites' must be an array");
        for (const auto& s : j.at("suites")) {
            if (!s.is_string()) fail("ConfigError", "suite names must be strings");
            static const std::vector<std::string> known = {"axioms",        "sugawara",
                                                           "decomposition", "criteria-grid",
                                                           "probe",         "iso"};
            std::string name = s.get<std::string>();
            bool ok = false;
            for (const auto& k : known) ok = ok || k == name;
            if (!ok) fail("ConfigError", "unknown suite '" + name + "'");
            cfg.suites.push_back(name);
        }
    }
    if (j.contains("modules")) {
        for (const auto& [name, desc] : j.at("modules").items())
            cfg.modules.emplace(name, module_from_json(desc));
    }
    if (j.contains("caps")) {
        const json& c = j.at("caps");
        reject_unknown(c, {"index_window", "max_word_length", "max_dimension"}, "caps");
        if (c.contains("index_window")) cfg.caps.index_window = int_field(c, "index_window", "caps");
        if (c.contains("max_word_length"))
            cfg.caps.max_word_length = int_field(c, "max_word_length", "caps");
        if (c.contains("max_dimension"))
            cfg.caps.max_dimension = int_field(c, "max_dimension", "caps");
        if (cfg.caps.index_window <= 0 || cfg.caps.max_word_length <= 0 ||
            cfg.caps.max_dimension <= 0)
            fail("ConfigError", "caps must be positive");
    }
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        reject_unknown(g, {"m", "phi_values", "l_values", "alpha", "beta", "lambda0"}, "grid");
        if (g.contains("m")) {
            cfg.grid.m_values.clear();
            for (const auto& v : g.at("m")) {
                if (!v.is_number_integer()) fail("ConfigError", "'grid.m' must hold integers");
                cfg.grid.m_values.push_back(v.get<long long>());
            }
        }
        if (g.contains("phi_values")) cfg.grid.phi_values = scalar_list(g.at("phi_values"), "grid.phi_values");
        if (g.contains("l_values")) cfg.grid.l_values = scalar_list(g.at("l_values"), "grid.l_values");
        if (g.contains("alpha")) cfg.grid.alpha_values = scalar_list(g.at("alpha"), "grid.alpha");
        if (g.contains("beta")) cfg.grid.beta_values = scalar_list(g.at("beta"), "grid.beta");
        if (g.contains("lambda0")) {
            cfg.grid.lambda0_values = scalar_list(g.at("lambda0"), "grid.lambda0");
            for (const Scalar& s : cfg.grid.lambda0_values)
                if (s.is_zero()) fail("ConfigError", "grid.lambda0 must exclude 0");
        }
    }
    if (j.contains("probes")) {
        if (!j.at("probes").is_array()) fail("ConfigError", "'probes' must be an array");
        for (const auto& p : j.at("probes")) {
            reject_unknown(p, {"module", "seed", "expect"}, "probe task");
            if (!p.contains("module") || !p.contains("seed"))
                fail("ConfigError", "probe task needs 'module' and 'seed'");
            ProbeTask task;
            task.module_name = p.at("module").get<std::string>();
            task.seed_expr = p.at("seed").get<std::string>();
            if (p.contains("expect")) task.expect = p.at("expect").get<std::string>();
            if (!cfg.modules.count(task.module_name))
                fail("ConfigError", "probe task references unknown module '" + task.module_name + "'");
            cfg.probes.push_back(std::move(task));
        }
    }
    if (j.contains("axiom_window")) cfg.axiom_window = int_field(j, "axiom_window", "config");
    if (j.contains("action_window")) cfg.action_window = int_field(j, "action_window", "config");
    if (cfg.axiom_window < 1 || cfg.action_window < 1)
        fail("ConfigError", "windows must be positive");
    if (j.contains("out")) cfg.out_path = j.at("out").get<std::string>();
    return cfg;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ConfigError", "cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("ConfigError", "invalid JSON in '" + path + "': " + e.what());
    }
    return from_json(j);
}

} // namespace mhv
