#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhv/config.hpp"
#include "mhv/errors.hpp"
#include "mhv/report.hpp"
#include "mhv/seed_parser.hpp"
#include "mhv/suites.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

using namespace mhv;
using nlohmann::json;

namespace {

BasisKey mono(std::initializer_list<std::pair<Generator, int>> factors) {
    PBWMonomial m;
    for (auto [g, e] : factors) m.factors.push_back({g, e});
    return BasisKey::mono_key(m);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("parse_seed basics") {
    auto phi = WhittakerFunctionD::make(1, {{1, Scalar(1)}}, {{1, Scalar(1)}}, Scalar(0), Scalar(1));
    auto W = make_whittaker_module(phi);

    Vector w = parse_seed("w", W);
    CHECK(w.coords().size() == 1);
    CHECK(w.coeff(mono({})) == Scalar(1));

    Vector v = parse_seed("h(-1/2)*w + 2*w", W);
    CHECK(v.coeff(mono({{Generator::h_twice(-1), 1}})) == Scalar(1));
    CHECK(v.coeff(mono({})) == Scalar(2));

    Vector deep = parse_seed("h(-3/2)^2 * d(0) * w", W);
    CHECK(deep.coeff(mono({{Generator::h_twice(-3), 2}, {Generator::d(0), 1}})) == Scalar(1));

    // d(1) lies in the inducing subalgebra: not a basis key
    CHECK_THROWS_WITH_AS(parse_seed("d(1)*w", W), doctest::Contains("KeyError"), MhvError);
    // out-of-order factors are not canonical keys
    CHECK_THROWS_WITH_AS(parse_seed("d(0)*h(-1/2)*w", W), doctest::Contains("KeyError"), MhvError);
    CHECK_THROWS_WITH_AS(parse_seed("t", W), doctest::Contains("KeyError"), MhvError);
    CHECK_THROWS_WITH_AS(parse_seed("h(-1/2)*w +", W), doctest::Contains("ParseError"), MhvError);
    CHECK_THROWS_WITH_AS(parse_seed("h(1/3)*w", W), doctest::Contains("ParseError"), MhvError);
}

TEST_CASE("parse_seed polynomial module") {
    auto om = make_omega(OmegaParams::make(Scalar(2), Scalar(1), Scalar(3)));
    Vector p = parse_seed("t^2 - 3/2 * t + 1", om);
    CHECK(p.coeff(BasisKey::poly(2)) == Scalar(1));
    CHECK(p.coeff(BasisKey::poly(1)) == Scalar(-3, 2));
    CHECK(p.coeff(BasisKey::poly(0)) == Scalar(1));
    CHECK(parse_seed("0", om).is_zero());
    CHECK_THROWS_WITH_AS(parse_seed("w", om), doctest::Contains("KeyError"), MhvError);
}

TEST_CASE("parse_seed tensor terms") {
    auto om = make_omega(OmegaParams::make(Scalar(2), Scalar(1), Scalar(3)));
    auto phi = WhittakerFunctionD::make(1, {{1, Scalar(1)}}, {{1, Scalar(1)}}, Scalar(0), Scalar(1));
    auto T = tensor(om, make_whittaker_module(phi));

    Vector tv = parse_seed("t^2 (x) d(0)*w", T);
    CHECK(tv.coords().size() == 1);
    CHECK(tv.coeff(BasisKey::pair(BasisKey::poly(2), mono({{Generator::d(0), 1}}))) == Scalar(1));

    Vector sum = parse_seed("t (x) w + 3 (x) h(-1/2)*w", T);
    CHECK(sum.coeff(BasisKey::pair(BasisKey::poly(1), mono({}))) == Scalar(1));
    CHECK(sum.coeff(BasisKey::pair(BasisKey::poly(0), mono({{Generator::h_twice(-1), 1}}))) ==
          Scalar(3));

    CHECK(parse_seed("0", T).is_zero());
    CHECK_THROWS_WITH_AS(parse_seed("t + w", T), doctest::Contains("ParseError"), MhvError);
}

TEST_CASE("render/parse round trip") {
    std::mt19937_64 rng(4242);
    auto phi = WhittakerFunctionD::make(1, {{1, Scalar(1)}}, {{1, Scalar(1)}}, Scalar(0), Scalar(1));
    auto W = make_whittaker_module(phi);
    auto om = make_omega(OmegaParams::make(Scalar(2), Scalar(1), Scalar(3)));
    auto T = tensor(om, W);

    std::vector<BasisKey> w_keys = {
        mono({}), mono({{Generator::h_twice(-1), 1}}),
        mono({{Generator::h_twice(-3), 2}, {Generator::d(0), 1}}),
        mono({{Generator::d(-1), 1}, {Generator::d(0), 2}})};

    for (int trial = 0; trial < 50; ++trial) {
        Vector v(W);
        for (const auto& k : w_keys) {
            long long num = static_cast<long long>(rng() % 9) - 4;
            long long den = 1 + static_cast<long long>(rng() % 3);
            v.add(k, Scalar(num, den));
        }
        CHECK(parse_seed(render_vector(v), W) == v);

        Vector p(om);
        for (long long j = 0; j <= 3; ++j)
            p.add(BasisKey::poly(j), Scalar(static_cast<long long>(rng() % 7) - 3));
        CHECK(parse_seed(render_vector(p), om) == p);

        Vector tv(T);
        for (long long j = 0; j <= 2; ++j)
            tv.add(BasisKey::pair(BasisKey::poly(j), w_keys[rng() % w_keys.size()]),
                   Scalar(static_cast<long long>(rng() % 5) - 2));
        CHECK(parse_seed(render_vector(tv), T) == tv);
    }
}

TEST_CASE("config parsing and validation") {
    json good = json::parse(R"({
      "suites": ["sugawara"],
      "caps": {"index_window": 4, "max_word_length": 3, "max_dimension": 100},
      "modules": {
        "om": {"type": "omega", "lambda0": "2", "alpha": "1", "beta": "3"},
        "W": {"type": "whittakerD", "m": 1, "d": {"1": "1", "2": "0"}, "h": {"1/2": "1"}, "c": "0", "l": "1"},
        "T": {"type": "tensor",
              "left": {"type": "omega", "lambda0": "1", "alpha": "0", "beta": "0"},
              "right": {"type": "whittakerH", "h": {"1/2": "1"}, "l": "1"}}
      },
      "probes": [{"module": "W", "seed": "w", "expect": "CyclicEvidence"}]
    })");
    Config cfg = Config::from_json(good);
    CHECK(cfg.suites == std::vector<std::string>{"sugawara"});
    CHECK(cfg.caps.index_window == 4);
    CHECK(cfg.modules.count("om") == 1);
    CHECK(cfg.modules.at("T")->kind() == ModuleKind::Tensor);
    CHECK(cfg.probes.size() == 1);

    json unknown_key = good;
    unknown_key["typo"] = 1;
    CHECK_THROWS_WITH_AS(Config::from_json(unknown_key), doctest::Contains("ConfigError"), MhvError);

    json bad_scalar = good;
    bad_scalar["modules"]["om"]["lambda0"] = "1.5";
    CHECK_THROWS_WITH_AS(Config::from_json(bad_scalar), doctest::Contains("ParseError"), MhvError);

    json bad_suite = good;
    bad_suite["suites"].push_back("nonsense");
    CHECK_THROWS_WITH_AS(Config::from_json(bad_suite), doctest::Contains("ConfigError"), MhvError);

    json zero_lambda = good;
    zero_lambda["modules"]["om"]["lambda0"] = "0";
    CHECK_THROWS_AS(Config::from_json(zero_lambda), MhvError);

    json unknown_probe_module = good;
    unknown_probe_module["probes"][0]["module"] = "missing";
    CHECK_THROWS_WITH_AS(Config::from_json(unknown_probe_module), doctest::Contains("ConfigError"),
                         MhvError);
}

TEST_CASE("empty report and verdicts") {
    Report empty;
    CHECK(empty.to_json().dump() == R"({"suites":[],"verdict":"pass"})");

    Report failing;
    SuiteResult s;
    s.name = "probe";
    s.check(false, "h(-1/2) * w generates a proper submodule");
    failing.suites.push_back(s);
    CHECK(failing.to_json()["verdict"] == "fail");
    CHECK(!failing.pass());
    CHECK(failing.to_json().dump().find("h(-1/2) * w") != std::string::npos);
}

TEST_CASE("report emission is byte-deterministic") {
    Config cfg = Config::from_json(json::parse(R"({
      "suites": ["sugawara", "iso"],
      "grid": {"m": [1], "phi_values": ["0", "1"], "l_values": ["0", "1"],
                "alpha": ["0", "1"], "beta": ["0"], "lambda0": ["1"]}
    })"));
    Report r1 = run_suites(cfg, 7, 1);
    Report r2 = run_suites(cfg, 7, 2);
    CHECK(r1.to_json() == r2.to_json());
    CHECK(r1.pass());

    std::string p1 = "/tmp/mhv_test_report_a.json";
    std::string p2 = "/tmp/mhv_test_report_b.json";
    emit_report(r1, p1);
    emit_report(r2, p2);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(!slurp(p1).empty());
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("probe suite honors expectations and exit-code contract") {
    json base = json::parse(R"({
      "suites": ["probe"],
      "modules": {"WH": {"type": "whittakerH", "h": {"1/2": "1"}, "l": "0"}},
      "probes": [{"module": "WH", "seed": "h(-1/2) * w", "expect": "certified-ProperWitness"}],
      "caps": {"index_window": 4, "max_word_length": 3, "max_dimension": 2000}
    })");
    Report good = run_suites(Config::from_json(base), 1, 1);
    CHECK(good.pass());

    base["probes"][0]["expect"] = "CyclicEvidence"; // wrong on purpose
    Report bad = run_suites(Config::from_json(base), 1, 1);
    CHECK(!bad.pass());
    CHECK(bad.to_json()["verdict"] == "fail");
}

TEST_CASE("witness basis rows re-parse in the seed grammar") {
    auto phi = WhittakerFunctionH::make({{1, Scalar(1)}}, Scalar(0));
    auto W = make_whittaker_module(phi);
    Vector seed = parse_seed("h(-1/2) * w", W);
    ProbeOutcome out = probe_submodule(seed, ProbeCaps{6, 4, 4000});
    REQUIRE(out.verdict == ProbeVerdict::ProperWitness);
    REQUIRE(!out.witness_basis.empty());
    for (const std::string& row : out.witness_basis) {
        Vector v = parse_seed(row, W);
        CHECK(!v.is_zero());
        CHECK(render_vector(v) == row);
    }
    // more rows exist than are rendered; the note records the truncation
    CHECK(out.dims_explored > static_cast<long long>(out.witness_basis.size()));
    CHECK(out.note.find("truncated") != std::string::npos);
}

TEST_CASE("probe outcomes serialize with the documented fields") {
    auto phi = WhittakerFunctionH::make({{1, Scalar(1)}}, Scalar(1));
    auto W = make_whittaker_module(phi);
    Vector seed = parse_seed("h(-1/2) * w", W);
    ProbeOutcome out = probe_submodule(seed, ProbeCaps{4, 3, 2000});
    json j = probe_outcome_to_json(out);
    CHECK(j.contains("verdict"));
    CHECK(j.contains("certified"));
    CHECK(j.contains("dims_explored"));
    CHECK(j.contains("words_explored"));
    CHECK(j["verdict"] == "CyclicEvidence");
    CHECK(j.contains("path"));
}
