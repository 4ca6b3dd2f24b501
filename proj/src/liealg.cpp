#include "mhv/liealg.hpp"

#include "mhv/errors.hpp"

#include <algorithm>

namespace mhv {

LieElement bracket(Generator x, Generator y) {
    LieElement out;
    if (x.is_central() || y.is_central()) return out;

    if (x.is_d() && y.is_d()) {
        long long m = x.twice / 2, n = y.twice / 2;
        out.add(Generator::d(m + n), Scalar(m - n));
        if (m + n == 0) out.add(Generator::c(), Scalar(m * m * m - m, 12));
        return out;
    }
    if (x.is_d() && y.is_h()) {
        // [d_m, h_r] = -r h_{m+r}
        out.add(Generator::h_twice(x.twice + y.twice), -half(y.twice));
        return out;
    }
    if (x.is_h() && y.is_d()) {
        out.add(Generator::h_twice(x.twice + y.twice), half(x.twice));
        return out;
    }
    // [h_r, h_s] = r delta_{r+s,0} l
    if (x.twice + y.twice == 0) out.add(Generator::l(), half(x.twice));
    return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    LieElement out;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms()) {
            LieElement b = bracket(gx, gy);
            b *= cx * cy;
            out += b;
        }
    return out;
}

LieElement jacobi_defect(Generator x, Generator y, Generator z) {
    LieElement ex(x), ey(y), ez(z);
    LieElement out = bracket(ex, bracket(ey, ez));
    out += bracket(ey, bracket(ez, ex));
    out += bracket(ez, bracket(ex, ey));
    return out;
}

SubalgebraSpec SubalgebraSpec::dmn(long long m, long long n) {
    if (m < 0 || n < 0) fail("BadIndex", "D^(m,-n) needs m, n >= 0");
    return {Variant::Dmn, m, n};
}

SubalgebraSpec SubalgebraSpec::dm_inf(long long m) {
    if (m < 0) fail("BadIndex", "D^(m,-inf) needs m >= 0");
    return {Variant::DmInf, m, 0};
}

SubalgebraSpec SubalgebraSpec::vm(long long m) {
    if (m < 0) fail("BadIndex", "V^(m) needs m >= 0");
    return {Variant::Vm, m, 0};
}

SubalgebraSpec SubalgebraSpec::hm(long long m) {
    if (m < 0) fail("BadIndex", "H^(m) needs m >= 0");
    return {Variant::Hm, m, 0};
}

bool SubalgebraSpec::contains(Generator g) const {
    switch (variant) {
        case Variant::Full:
            return true;
        case Variant::Virasoro:
            return g.is_d() || g.kind == GenKind::C;
        case Variant::Heisenberg:
            return g.is_h() || g.kind == GenKind::L;
        case Variant::Dmn:
            if (g.is_central()) return true;
            if (g.is_d()) return g.twice >= 2 * m;
            return g.twice >= 1 - 2 * n; // h_r with r >= -n + 1/2
        case Variant::DmInf:
            if (g.is_central() || g.is_h()) return true;
            return g.twice >= 2 * m;
        case Variant::Vm:
            if (g.kind == GenKind::C) return true;
            return g.is_d() && g.twice >= 2 * m;
        case Variant::Hm:
            if (g.kind == GenKind::L) return true;
            return g.is_h() && g.twice >= 2 * m + 1;
    }
    return false;
}

std::string SubalgebraSpec::str() const {
    switch (variant) {
        case Variant::Full: return "D";
        case Variant::Virasoro: return "Vir";
        case Variant::Heisenberg: return "Heis";
        case Variant::Dmn:
            return "D^(" + std::to_string(m) + "," + (n > 0 ? "-" : "") + std::to_string(n) + ")";
        case Variant::DmInf: return "D^(" + std::to_string(m) + ",-inf)";
        case Variant::Vm: return "V^(" + std::to_string(m) + ")";
        case Variant::Hm: return "H^(" + std::to_string(m) + ")";
    }
    return "?";
}

void AutomorphismSpec::set(long long i, const Scalar& value) {
    if (value.is_zero()) coeffs.erase(i);
    else coeffs[i] = value;
}

Scalar AutomorphismSpec::at(long long i) const {
    auto it = coeffs.find(i);
    return it == coeffs.end() ? Scalar(0) : it->second;
}

AutomorphismSpec AutomorphismSpec::negated() const {
    AutomorphismSpec out;
    for (const auto& [i, a] : coeffs) out.coeffs.emplace(i, -a);
    return out;
}

LieElement AutomorphismSpec::alpha_element() const {
    LieElement out;
    for (const auto& [i, a] : coeffs)
        out.add(Generator::h_twice(2 * i - 1), Scalar(2) * a / Scalar(2 * i - 1));
    return out;
}

LieElement apply_automorphism(const AutomorphismSpec& spec, Generator g) {
    LieElement out(g);
    if (g.is_central()) return out;
    if (g.is_h()) {
        // theta(h_r) = h_r + a_{-r+1/2} l
        out.add(Generator::l(), spec.at((1 - g.twice) / 2));
        return out;
    }
    long long n = g.twice / 2;
    Scalar l_part(0);
    for (const auto& [i, a] : spec.coeffs) {
        out.add(Generator::h_twice(2 * (n + i) - 1), a);
        l_part += a * spec.at(-n - i + 1);
    }
    out.add(Generator::l(), l_part / Scalar(2));
    return out;
}

LieElement apply_automorphism(const AutomorphismSpec& spec, const LieElement& x) {
    LieElement out;
    for (const auto& [g, c] : x.terms()) {
        LieElement img = apply_automorphism(spec, g);
        img *= c;
        out += img;
    }
    return out;
}

WhittakerFunctionD WhittakerFunctionD::make(long long m,
                                            std::map<long long, Scalar> d_values,
                                            std::map<long long, Scalar> h_twice_values,
                                            Scalar c_value, Scalar l_value) {
    if (m < 0) fail("BadIndex", "Whittaker function on D^(m,0) needs m >= 0");
    WhittakerFunctionD phi;
    phi.m = m;
    phi.c_value = std::move(c_value);
    phi.l_value = std::move(l_value);
    for (auto& [k, v] : d_values) {
        if (k < m || k > 2 * m)
            fail("BadIndex", "d-slot " + std::to_string(k) + " outside [m, 2m] for m=" + std::to_string(m));
        if (!v.is_zero()) phi.d_values.emplace(k, std::move(v));
    }
    for (auto& [t, v] : h_twice_values) {
        if (t % 2 == 0 || t < 1 || t > 2 * m - 1)
            fail("BadIndex", "h-slot 2r=" + std::to_string(t) + " outside [1/2, m-1/2] for m=" + std::to_string(m));
        if (!v.is_zero()) phi.h_twice_values.emplace(t, std::move(v));
    }
    return phi;
}

Scalar WhittakerFunctionD::d_value(long long k) const {
    if (k < m) fail("OutsideDomain", "d(" + std::to_string(k) + ") is not in D^(m,0)");
    if (k > 2 * m) return Scalar(0);
    auto it = d_values.find(k);
    return it == d_values.end() ? Scalar(0) : it->second;
}

Scalar WhittakerFunctionD::h_value_twice(long long t) const {
    if (t < 1) fail("OutsideDomain", "h with 2r=" + std::to_string(t) + " is not in D^(m,0)");
    if (t > 2 * m - 1) return Scalar(0);
    auto it = h_twice_values.find(t);
    return it == h_twice_values.end() ? Scalar(0) : it->second;
}

Scalar WhittakerFunctionD::eval(Generator g) const {
    switch (g.kind) {
        case GenKind::C: return c_value;
        case GenKind::L: return l_value;
        case GenKind::D: return d_value(g.twice / 2);
        case GenKind::H: return h_value_twice(g.twice);
    }
    return Scalar(0);
}

WhittakerFunctionH WhittakerFunctionH::make(std::map<long long, Scalar> h_twice_values, Scalar l_value) {
    WhittakerFunctionH phi;
    phi.l_value = std::move(l_value);
    for (auto& [t, v] : h_twice_values) {
        if (t % 2 == 0 || t < 1)
            fail("BadIndex", "h-slot 2r=" + std::to_string(t) + " outside H^(0)");
        if (!v.is_zero()) phi.h_twice_values.emplace(t, std::move(v));
    }
    return phi;
}

Scalar WhittakerFunctionH::h_value_twice(long long t) const {
    if (t < 1) fail("OutsideDomain", "h with 2r=" + std::to_string(t) + " is not in H^(0)");
    auto it = h_twice_values.find(t);
    return it == h_twice_values.end() ? Scalar(0) : it->second;
}

Scalar WhittakerFunctionH::eval(Generator g) const {
    switch (g.kind) {
        case GenKind::L: return l_value;
        case GenKind::H: return h_value_twice(g.twice);
        default: fail("OutsideDomain", g.str() + " is not in H^(0)");
    }
}

long long WhittakerFunctionH::max_support_twice() const {
    return h_twice_values.empty() ? 0 : h_twice_values.rbegin()->first;
}

WhittakerFunctionV WhittakerFunctionV::make(long long m, std::map<long long, Scalar> d_values, Scalar c_value) {
    if (m < 0) fail("BadIndex", "Whittaker function on V^(m) needs m >= 0");
    WhittakerFunctionV psi;
    psi.m = m;
    psi.c_value = std::move(c_value);
    for (auto& [k, v] : d_values) {
        if (k < m || k > 2 * m)
            fail("BadIndex", "d-slot " + std::to_string(k) + " outside [m, 2m] for m=" + std::to_string(m));
        if (!v.is_zero()) psi.d_values.emplace(k, std::move(v));
    }
    return psi;
}

Scalar WhittakerFunctionV::d_value(long long k) const {
    if (k < m) fail("OutsideDomain", "d(" + std::to_string(k) + ") is not in V^(m)");
    if (k > 2 * m) return Scalar(0);
    auto it = d_values.find(k);
    return it == d_values.end() ? Scalar(0) : it->second;
}

Scalar WhittakerFunctionV::eval(Generator g) const {
    switch (g.kind) {
        case GenKind::C: return c_value;
        case GenKind::D: return d_value(g.twice / 2);
        default: fail("OutsideDomain", g.str() + " is not in V^(m)");
    }
}

Scalar whittaker_eval(const WhittakerAny& phi, Generator g) {
    return std::visit([&](const auto& f) { return f.eval(g); }, phi);
}

SubalgebraSpec whittaker_domain(const WhittakerAny& phi) {
    return std::visit([](const auto& f) { return f.domain(); }, phi);
}

namespace {

std::vector<Generator> domain_generators(const SubalgebraSpec& domain, long long window_twice) {
    std::vector<Generator> out;
    for (long long t = -window_twice; t <= window_twice; ++t) {
        Generator g = (t % 2 == 0) ? Generator::d(t / 2) : Generator::h_twice(t);
        if (domain.contains(g)) out.push_back(g);
    }
    if (domain.contains(Generator::c())) out.push_back(Generator::c());
    if (domain.contains(Generator::l())) out.push_back(Generator::l());
    return out;
}

} // namespace

ValidationResult validate_raw_whittaker(const SubalgebraSpec& domain,
                                        const std::function<Scalar(Generator)>& eval,
                                        long long window) {
    ValidationResult result;
    auto gens = domain_generators(domain, 2 * window);
    for (Generator x : gens)
        for (Generator y : gens) {
            LieElement z = bracket(x, y);
            if (z.is_zero()) continue;
            Scalar value(0);
            Generator witness = z.terms().begin()->first;
            for (const auto& [g, coeff] : z.terms()) {
                Scalar v = eval(g) * coeff;
                if (!v.is_zero()) witness = g;
                value += v;
            }
            if (!value.is_zero()) result.violations.push_back({witness, value});
        }
    return result;
}

ValidationResult validate_whittaker(const WhittakerAny& phi) {
    SubalgebraSpec domain = whittaker_domain(phi);
    long long m = std::visit([](const auto& f) -> long long {
        if constexpr (requires { f.m; }) return f.m;
        else return 0;
    }, phi);
    long long window = 2 * m + 5;
    return validate_raw_whittaker(domain, [&](Generator g) { return whittaker_eval(phi, g); }, window);
}

WhittakerFunctionV derive_phi_prime(const WhittakerFunctionD& phi) {
    if (phi.l_value.is_zero())
        fail("ZeroCentralCharge", "phi' requires phi(l) != 0");
    std::map<long long, Scalar> d_values;
    Scalar inv2l = Scalar(1) / (Scalar(2) * phi.l_value);
    for (long long k = phi.m; k <= 2 * phi.m; ++k) {
        Scalar v = phi.d_value(k);
        for (long long i = 0; i < phi.m; ++i) {
            // h-indices i+1/2 and k-i-1/2, as twice-values
            v -= inv2l * phi.h_value_twice(2 * i + 1) * phi.h_value_twice(2 * (k - i) - 1);
        }
        if (k == 0) v -= Scalar(1, 16);
        d_values[k] = v;
    }
    return WhittakerFunctionV::make(phi.m, std::move(d_values), phi.c_value - Scalar(1));
}

AutomorphismSpec solve_twist_coefficients(const WhittakerFunctionD& phi) {
    if (!phi.l_value.is_zero())
        fail("WrongCase", "twist coefficients are solved in the phi(l)=0 case only");
    if (phi.m < 1)
        fail("UnsupportedM", "twist normalization needs m >= 1");
    // phi(h_{-1/2}) is declared zero; extend the typed values by that convention.
    auto h_ext = [&](long long t) -> Scalar {
        if (t < 1) return Scalar(0);
        return phi.h_value_twice(t);
    };
    Scalar diag = phi.h_value_twice(2 * phi.m - 1);
    if (diag.is_zero())
        fail("Singular", "phi(h_{m-1/2}) = 0: triangular system is singular");

    long long m = phi.m;
    // Row j (for d_{m+j}): phi(d_{m+j}) = sum_{k=j..m} phi(h_{m+j-k-1/2}) a_{-k}.
    // Back-substitute from the bottom row.
    std::map<long long, Scalar> a; // key: k, value: a_{-k}
    for (long long j = m; j >= 0; --j) {
        Scalar rhs = phi.d_value(m + j);
        for (long long k = j + 1; k <= m; ++k)
            rhs -= h_ext(2 * (m + j - k) - 1) * a[k];
        a[j] = rhs / diag;
    }
    AutomorphismSpec spec;
    for (const auto& [k, v] : a) spec.set(-k, v);
    return spec;
}

WhittakerFunctionD twist_whittaker(const WhittakerFunctionD& phi, const AutomorphismSpec& spec) {
    // phi extended by zero on h_r below the domain; d- and c/l-parts of
    // theta(x) never leave the domain for x in D^(m,0).
    auto h_ext = [&](long long t) -> Scalar {
        if (t < 1) return Scalar(0);
        return phi.h_value_twice(t);
    };
    auto pullback_d = [&](long long n) -> Scalar {
        Scalar v = (n <= 2 * phi.m) ? phi.d_value(n) : Scalar(0);
        Scalar l_part(0);
        for (const auto& [i, ai] : spec.coeffs) {
            v += ai * h_ext(2 * (n + i) - 1);
            l_part += ai * spec.at(-n - i + 1);
        }
        return v + l_part / Scalar(2) * phi.l_value;
    };
    auto pullback_h_twice = [&](long long t) -> Scalar {
        return h_ext(t) + spec.at((1 - t) / 2) * phi.l_value;
    };

    long long min_support = 0;
    for (const auto& [i, ai] : spec.coeffs) min_support = std::min(min_support, i);

    // Structurally-zero slots must stay zero under the pullback.
    long long d_top = std::max<long long>(2 * phi.m + 1,
                                          std::max(phi.m - min_support, 1 - 2 * min_support) + 1);
    for (long long j = 2 * phi.m + 1; j <= d_top; ++j)
        if (!pullback_d(j).is_zero())
            fail("SupportViolation",
                 "pullback nonzero at structurally-zero slot d(" + std::to_string(j) + ")");
    for (const auto& [i, ai] : spec.coeffs) {
        long long t = 1 - 2 * i; // h-slot reached by theta(h_r) with a_{-r+1/2} = a_i
        if (t > 2 * phi.m - 1 && !pullback_h_twice(t).is_zero())
            fail("SupportViolation",
                 "pullback nonzero at structurally-zero slot h(" + std::to_string(t) + "/2)");
    }

    std::map<long long, Scalar> d_values;
    for (long long k = phi.m; k <= 2 * phi.m; ++k) d_values[k] = pullback_d(k);
    std::map<long long, Scalar> h_values;
    for (long long t = 1; t <= 2 * phi.m - 1; t += 2) h_values[t] = pullback_h_twice(t);
    return WhittakerFunctionD::make(phi.m, std::move(d_values), std::move(h_values),
                                    phi.c_value, phi.l_value);
}

NormalizedWhittaker normalize_whittaker(const WhittakerFunctionD& phi) {
    AutomorphismSpec solved = solve_twist_coefficients(phi);
    AutomorphismSpec applied = solved.negated();
    return {twist_whittaker(phi, applied), applied};
}

} // namespace mhv
