#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhv/errors.hpp"
#include "mhv/probe.hpp"

using namespace mhv;

namespace {

Vector basis_vec(const ModulePtr& mod, const BasisKey& key) {
    Vector v(mod);
    v.add(key, Scalar(1));
    return v;
}

BasisKey mono(std::initializer_list<std::pair<Generator, int>> factors) {
    PBWMonomial m;
    for (auto [g, e] : factors) m.factors.push_back({g, e});
    return BasisKey::mono_key(m);
}

Vector replay(const Vector& seed, const std::vector<std::string>& path) {
    Vector v = seed;
    for (const std::string& s : path) v = act(Generator::parse(s), v);
    return v;
}

} // namespace

TEST_CASE("exact row span") {
    auto phi = WhittakerFunctionH::make({{1, Scalar(1)}}, Scalar(0));
    auto W = make_whittaker_module(phi);
    ExactRowSpan span;
    SparseCoords a{{mono({}), Scalar(2)}};
    SparseCoords b{{mono({}), Scalar(1)}, {mono({{Generator::h_twice(-1), 1}}), Scalar(3)}};
    CHECK(span.insert(a));
    CHECK(!span.insert(a));
    CHECK(span.insert(b));
    CHECK(span.dimension() == 2);
    // any combination of the two reduces to zero
    SparseCoords c{{mono({}), Scalar(5)}, {mono({{Generator::h_twice(-1), 1}}), Scalar(6)}};
    CHECK(span.contains(c));
    SparseCoords d{{mono({{Generator::h_twice(-3), 1}}), Scalar(1)}};
    CHECK(!span.contains(d));
}

TEST_CASE("probe finds cyclic evidence for irreducible H-Whittaker") {
    auto phi = WhittakerFunctionH::make({{1, Scalar(1)}}, Scalar(1));
    auto W = make_whittaker_module(phi);
    Vector seed = basis_vec(W, mono({{Generator::h_twice(-1), 1}}));
    ProbeOutcome out = probe_submodule(seed, ProbeCaps{6, 6, 4000});
    CHECK(out.verdict == ProbeVerdict::CyclicEvidence);
    CHECK(!out.certified); // the seed is not a Whittaker vector here
    REQUIRE(out.path.size() == 1);
    CHECK(out.path[0] == "h(1/2)");
    // the recorded path replays to a vector with nonzero vacuum coordinate
    Vector end = replay(seed, out.path);
    CHECK(!end.coeff(mono({})).is_zero());
}

TEST_CASE("probe certifies the proper witness for reducible H-Whittaker") {
    auto phi = WhittakerFunctionH::make({{1, Scalar(1)}}, Scalar(0));
    auto W = make_whittaker_module(phi);
    Vector seed = basis_vec(W, mono({{Generator::h_twice(-1), 1}}));
    ProbeOutcome out = probe_submodule(seed, ProbeCaps{4, 4, 4000});
    CHECK(out.verdict == ProbeVerdict::ProperWitness);
    CHECK(out.certified);
    CHECK(out.dims_explored > 1);
    CHECK(!out.witness_basis.empty());
}

TEST_CASE("probe certifies t-line witness in degenerate omega") {
    auto om = make_omega(OmegaParams::make(Scalar(1), Scalar(0), Scalar(0)));
    Vector seed = basis_vec(om, BasisKey::poly(1));
    ProbeOutcome out = probe_submodule(seed, ProbeCaps{6, 6, 4000});
    CHECK(out.verdict == ProbeVerdict::ProperWitness);
    CHECK(out.certified);
}

TEST_CASE("probe finds cyclic evidence in irreducible omega") {
    for (auto [a, b] : std::vector<std::pair<long long, long long>>{{1, 0}, {0, 1}, {1, 1}}) {
        auto om = make_omega(OmegaParams::make(Scalar(2), Scalar(a), Scalar(b)));
        Vector seed = basis_vec(om, BasisKey::poly(1));
        ProbeOutcome out = probe_submodule(seed, ProbeCaps{6, 6, 4000});
        CHECK(out.verdict == ProbeVerdict::CyclicEvidence);
        CHECK(out.path.size() == 1);
        Vector end = replay(seed, out.path);
        CHECK(!end.coeff(BasisKey::poly(0)).is_zero());
    }
}

TEST_CASE("probe reports inconclusive when the dimension cap bites") {
    auto phi = WhittakerFunctionH::make({{1, Scalar(1)}}, Scalar(0));
    auto W = make_whittaker_module(phi);
    Vector seed = basis_vec(W, mono({{Generator::h_twice(-1), 1}}));
    ProbeOutcome out = probe_submodule(seed, ProbeCaps{6, 6, 3});
    CHECK(out.verdict == ProbeVerdict::Inconclusive);
}

TEST_CASE("probe outcome is deterministic") {
    auto phi = WhittakerFunctionH::make({{1, Scalar(1)}}, Scalar(0));
    auto W = make_whittaker_module(phi);
    Vector seed = basis_vec(W, mono({{Generator::h_twice(-1), 1}}));
    ProbeOutcome a = probe_submodule(seed, ProbeCaps{3, 3, 4000});
    ProbeOutcome b = probe_submodule(seed, ProbeCaps{3, 3, 4000});
    CHECK(a.verdict == b.verdict);
    CHECK(a.dims_explored == b.dims_explored);
    CHECK(a.words_explored == b.words_explored);
    CHECK(a.witness_basis == b.witness_basis);
}

TEST_CASE("equivalent modules probe the same way") {
    // Twisting by an automorphism preserves (ir)reducibility; the probe
    // verdicts agree, only the certificate changes shape.
    AutomorphismSpec spec;
    spec.set(0, Scalar(1));
    spec.set(-1, Scalar(1, 2));

    auto red = WhittakerFunctionH::make({{1, Scalar(1)}}, Scalar(0));
    auto Wr = make_whittaker_module(red);
    auto Tr = twist_module(Wr, spec);
    Vector seed_r = basis_vec(Tr, mono({{Generator::h_twice(-1), 1}}));
    ProbeOutcome o1 = probe_submodule(seed_r, ProbeCaps{4, 3, 4000});
    CHECK(o1.verdict == ProbeVerdict::ProperWitness);

    auto irr = WhittakerFunctionH::make({{1, Scalar(1)}}, Scalar(1));
    auto Wi = make_whittaker_module(irr);
    auto Ti = twist_module(Wi, spec);
    Vector seed_i = basis_vec(Ti, mono({{Generator::h_twice(-1), 1}}));
    ProbeOutcome o2 = probe_submodule(seed_i, ProbeCaps{4, 3, 4000});
    CHECK(o2.verdict == ProbeVerdict::CyclicEvidence);
}

TEST_CASE("probe seed on the vacuum line short-circuits") {
    auto phi = WhittakerFunctionH::make({{1, Scalar(1)}}, Scalar(1));
    auto W = make_whittaker_module(phi);
    Vector seed = basis_vec(W, mono({}));
    ProbeOutcome out = probe_submodule(seed, ProbeCaps{6, 6, 4000});
    CHECK(out.verdict == ProbeVerdict::CyclicEvidence);
    CHECK(out.path.empty());
}
