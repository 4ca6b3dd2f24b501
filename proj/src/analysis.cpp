#include "mhv/analysis.hpp"

#include "mhv/errors.hpp"

#include <algorithm>

namespace mhv {

bool criterion_whittaker_H(const WhittakerFunctionH& phi) {
    return !phi.l_value.is_zero();
}

bool criterion_whittaker_D(const WhittakerFunctionD& phi) {
    if (phi.m < 1) fail("UnsupportedM", "criterion stated for m >= 1 (m = 0 is the Verma case)");
    Scalar h_top = phi.h_value_twice(2 * phi.m - 1);
    if (phi.l_value.is_zero()) return !h_top.is_zero();
    if (!phi.d_value(2 * phi.m).is_zero()) return true;
    Scalar q = Scalar(2) * phi.l_value * phi.d_value(2 * phi.m - 1) - h_top * h_top;
    return !q.is_zero();
}

bool criterion_virasoro_whittaker(const WhittakerFunctionV& psi) {
    if (psi.m < 1) fail("UnsupportedM", "criterion stated for m >= 1");
    return !psi.d_value(2 * psi.m).is_zero() || !psi.d_value(2 * psi.m - 1).is_zero();
}

bool criterion_omega(const OmegaParams& p) {
    return !p.alpha.is_zero() || !p.beta.is_zero();
}

bool criterion_tensor(const OmegaParams& p, const WhittakerFunctionD& phi) {
    return criterion_whittaker_D(phi) && criterion_omega(p);
}

bool iso_predicate_omega(const OmegaParams& a, const OmegaParams& b) {
    return a.lambda() == b.lambda() && a.alpha == b.alpha &&
           a.beta * a.lambda0 == b.beta * b.lambda0;
}

bool iso_predicate_tensor(const OmegaParams& p1, const WhittakerFunctionD& phi1,
                          const OmegaParams& p2, const WhittakerFunctionD& phi2) {
    if (!criterion_whittaker_D(phi1) || !criterion_whittaker_D(phi2))
        fail("HypothesisUnmet", "tensor isomorphism predicate assumes irreducible Whittaker factors");
    return iso_predicate_omega(p1, p2) && phi1 == phi2;
}

W0Degree W0Degree::of_key(const BasisKey& key, long long m) {
    if (key.kind != BasisKey::Kind::Mono)
        fail("BadKey", "W0 degree needs a monomial key");
    W0Degree deg = zero(m);
    for (const auto& [g, e] : key.mono.factors) {
        if (!g.is_d() || g.twice < 0 || g.twice >= 2 * m)
            fail("BadKey", "W0 keys are monomials in d_0 ... d_{m-1}; got " + g.str());
        deg.exponents[static_cast<std::size_t>(g.twice / 2)] = e;
    }
    return deg;
}

bool W0Degree::is_zero() const {
    return std::all_of(exponents.begin(), exponents.end(), [](long long e) { return e == 0; });
}

long long W0Degree::min_nonzero_position() const {
    for (std::size_t s = 0; s < exponents.size(); ++s)
        if (exponents[s] != 0) return static_cast<long long>(s);
    fail("BadKey", "zero tuple has no nonzero position");
}

W0Degree W0Degree::minus_epsilon(long long p) const {
    W0Degree out = *this;
    if (p < 0 || p >= static_cast<long long>(out.exponents.size()) || out.exponents[p] == 0)
        fail("BadIndex", "epsilon subtraction at an empty position");
    --out.exponents[static_cast<std::size_t>(p)];
    return out;
}

long long W0Degree::total() const {
    long long t = 0;
    for (long long e : exponents) t += e;
    return t;
}

std::string W0Degree::str() const {
    std::string out = "(";
    for (std::size_t s = 0; s < exponents.size(); ++s) {
        if (s) out += ",";
        out += std::to_string(exponents[s]);
    }
    return out + ")";
}

bool reverse_lex_less(const W0Degree& a, const W0Degree& b) {
    for (std::size_t s = 0; s < a.exponents.size(); ++s) {
        if (a.exponents[s] != b.exponents[s]) return a.exponents[s] < b.exponents[s];
    }
    return false;
}

namespace {

const InducedWhittakerModule& as_w0_module(const ModulePtr& mod) {
    if (!mod || mod->kind() != ModuleKind::Induced)
        fail("BadModule", "expected the W0 module");
    const auto& ind = static_cast<const InducedWhittakerModule&>(*mod);
    if (!(ind.ambient() == SubalgebraSpec::dmn(0, 0)) ||
        !std::holds_alternative<WhittakerFunctionD>(ind.phi()))
        fail("BadModule", "expected Ind_{D^(m,0)}^{D^(0,0)}");
    return ind;
}

} // namespace

W0Degree w0_degree(const Vector& v, long long m) {
    if (v.is_zero()) fail("BadKey", "degree of the zero vector is undefined");
    W0Degree best = W0Degree::of_key(v.coords().begin()->first, m);
    for (const auto& [key, c] : v.coords()) {
        W0Degree d = W0Degree::of_key(key, m);
        if (reverse_lex_less(best, d)) best = d;
    }
    return best;
}

Vector strip_step(const Vector& v, const WhittakerFunctionD& phi) {
    const auto& ind = as_w0_module(v.module());
    if (!(std::get<WhittakerFunctionD>(ind.phi()) == phi))
        fail("BadModule", "strip uses the module's own Whittaker function");
    if (!phi.l_value.is_zero()) fail("WrongCase", "strip operates in the phi(l) = 0 case");
    if (!phi.d_values.empty())
        fail("NotNormalized", "phi has a nonzero d-value at k >= m; twist-normalize first");
    if (phi.m < 1 || phi.h_value_twice(2 * phi.m - 1).is_zero())
        fail("Singular", "strip needs phi(h_{m-1/2}) != 0");
    if (v.is_zero()) fail("AlreadyVacuumLine", "vector lies on the vacuum line");

    W0Degree deg = w0_degree(v, phi.m);
    if (deg.is_zero()) fail("AlreadyVacuumLine", "vector lies on the vacuum line");
    long long p = deg.min_nonzero_position();
    Generator op = Generator::h_twice(2 * (phi.m - p) - 1);
    Vector out = act(op, v);
    Vector scaled = v;
    scaled *= phi.eval(op);
    out -= scaled;
    return out;
}

ReduceResult reduce_to_whittaker(const Vector& v, const WhittakerFunctionD& phi,
                                 long long max_steps) {
    const auto& ind = as_w0_module(v.module());
    (void)ind;
    Vector cur = v;
    ReduceResult result{Scalar(0), 0};
    if (cur.is_zero()) fail("BadKey", "cannot reduce the zero vector");
    while (true) {
        W0Degree deg = w0_degree(cur, phi.m);
        if (deg.is_zero()) {
            result.coefficient = cur.coords().begin()->second;
            return result;
        }
        if (result.steps >= max_steps) fail("StepLimit", "strip iteration exceeded max_steps");
        Vector next = strip_step(cur, phi);
        ++result.steps;
        if (next.is_zero() || !reverse_lex_less(w0_degree(next, phi.m), deg))
            fail("Stalled", "strip step failed to drop the degree");
        cur = next;
    }
}

bool whittaker_vector_check(const Vector& v, const WhittakerAny& phi, long long window) {
    if (v.is_zero()) return false;
    const ModulePtr& mod = v.module();
    SubalgebraSpec domain = whittaker_domain(phi);
    auto matches = [&](Generator g) {
        if (!mod->in_ambient(g)) return true; // generator absent from the acting algebra
        Vector expect = v;
        expect *= whittaker_eval(phi, g);
        return act(g, v) == expect;
    };
    for (long long t = -2 * window; t <= 2 * window; ++t) {
        Generator g = (t % 2 == 0) ? Generator::d(t / 2) : Generator::h_twice(t);
        if (!domain.contains(g)) continue;
        if (!matches(g)) return false;
    }
    if (domain.contains(Generator::c()) && !matches(Generator::c())) return false;
    if (domain.contains(Generator::l()) && !matches(Generator::l())) return false;
    return true;
}

namespace {

struct TensorView {
    const TensorModule* mod = nullptr;
    const OmegaModule* omega = nullptr;
    ModulePtr right;
};

TensorView as_omega_tensor(const ModulePtr& m) {
    if (!m || m->kind() != ModuleKind::Tensor)
        fail("BadModule", "expected Omega (x) V");
    const auto& t = static_cast<const TensorModule&>(*m);
    if (t.left()->kind() != ModuleKind::Omega)
        fail("BadModule", "expected the Omega factor on the left");
    return {&t, &static_cast<const OmegaModule&>(*t.left()), t.right()};
}

// Exact solve of a square system with vector right-hand sides.
std::vector<Vector> solve_linear(std::vector<std::vector<Scalar>> a, std::vector<Vector> rhs) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) fail("Singular", "linear system is singular");
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        Scalar inv = Scalar(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Scalar f = a[row][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            Vector tmp = rhs[col];
            tmp *= f;
            rhs[row] -= tmp;
        }
    }
    return rhs;
}

} // namespace

Vector extract_tensor_leader(const Vector& v) {
    TensorView view = as_omega_tensor(v.module());
    const OmegaParams& p = view.omega->params();
    if (p.alpha.is_zero() && p.beta.is_zero())
        fail("DegenerateParams", "extraction needs alpha != 0 or beta != 0");
    if (v.is_zero()) fail("BadKey", "cannot extract from the zero vector");

    long long s = 0;
    std::map<long long, Vector> slices;
    for (const auto& [key, c] : v.coords()) {
        if (key.kind != BasisKey::Kind::Pair || key.left->kind != BasisKey::Kind::Poly)
            fail("BadKey", "extraction expects keys t^i (x) (right basis)");
        long long i = key.left->poly_exp;
        s = std::max(s, i);
        auto [it, fresh] = slices.try_emplace(i, Vector(view.right));
        it->second.add(*key.right, c);
    }

    long long bound = 0;
    for (const auto& [i, slice] : slices)
        bound = std::max(bound, restricted_bound(slice));

    if (!p.beta.is_zero()) {
        // beta^{-1} lambda^{-r} h_r(v) = sum_a r^a w_a with w_s = 1 (x) v_s.
        std::vector<std::vector<Scalar>> a;
        std::vector<Vector> rhs;
        for (long long jj = 0; jj <= s; ++jj) {
            long long r_twice = 2 * bound + 1 + 2 * jj;
            Scalar r = half(r_twice);
            Vector u = act(Generator::h_twice(r_twice), v);
            u *= Scalar(1) / (p.beta * p.lambda_pow_twice(r_twice));
            rhs.push_back(std::move(u));
            std::vector<Scalar> row;
            for (long long aa = 0; aa <= s; ++aa) row.push_back(r.pow(aa));
            a.push_back(std::move(row));
        }
        return solve_linear(std::move(a), std::move(rhs)).back();
    }

    // beta = 0, alpha != 0: lambda^{-m} d_m(v) = sum_a m^a w_a with
    // w_{s+1} = alpha * (1 (x) v_s).
    std::vector<std::vector<Scalar>> a;
    std::vector<Vector> rhs;
    for (long long jj = 0; jj <= s + 1; ++jj) {
        long long m = std::max<long long>(bound, 1) + jj;
        Vector u = act(Generator::d(m), v);
        u *= Scalar(1) / p.lambda_pow_twice(2 * m);
        rhs.push_back(std::move(u));
        std::vector<Scalar> row;
        for (long long aa = 0; aa <= s + 1; ++aa) row.push_back(Scalar(m).pow(aa));
        a.push_back(std::move(row));
    }
    Vector top = solve_linear(std::move(a), std::move(rhs)).back();
    top *= Scalar(1) / p.alpha;
    return top;
}

OmegaLine generate_omega_line(const Vector& base, long long j_max) {
    TensorView view = as_omega_tensor(base.module());
    const OmegaParams& p = view.omega->params();
    if (p.alpha.is_zero() && p.beta.is_zero())
        fail("DegenerateParams", "line generation stated for (alpha, beta) != (0,0)");
    if (base.is_zero()) fail("BadKey", "cannot generate from the zero vector");

    Vector right_part(view.right);
    for (const auto& [key, c] : base.coords()) {
        if (key.kind != BasisKey::Kind::Pair || !(*key.left == BasisKey::poly(0)))
            fail("BadKey", "line generation starts from 1 (x) v");
        right_part.add(*key.right, c);
    }
    long long bound = std::max<long long>(restricted_bound(right_part), 1);

    OmegaLine line;
    line.vectors.push_back(base);
    for (long long j = 1; j <= j_max; ++j) {
        long long m = bound + (j - 1);
        Scalar mm(m);
        Vector u = act(Generator::d(m), line.vectors.back());
        u *= Scalar(1) / p.lambda_pow_twice(2 * m);
        OmegaLineStep step{j, m, {}};
        for (long long k = 0; k < j; ++k) {
            Scalar coeff = Scalar::binomial(j - 1, k - 1) * mm.pow(j - k) +
                           p.alpha * Scalar::binomial(j - 1, k) * mm.pow(j - k);
            if (coeff.is_zero()) continue;
            step.corrections.emplace(k, coeff);
            Vector tmp = line.vectors[static_cast<std::size_t>(k)];
            tmp *= coeff;
            u -= tmp;
        }
        // The construction is exact; every key must now carry t^j on the left.
        for (const auto& [key, c] : u.coords())
            if (key.left->poly_exp != j)
                fail("InternalError", "omega line step produced a stray t-degree");
        line.vectors.push_back(u);
        line.steps.push_back(std::move(step));
    }
    return line;
}

std::vector<Vector> replay_omega_line(const Vector& base, const std::vector<OmegaLineStep>& steps) {
    TensorView view = as_omega_tensor(base.module());
    const OmegaParams& p = view.omega->params();
    std::vector<Vector> out{base};
    for (const auto& step : steps) {
        Vector u = act(Generator::d(step.m_used), out.back());
        u *= Scalar(1) / p.lambda_pow_twice(2 * step.m_used);
        for (const auto& [k, coeff] : step.corrections) {
            if (k < 0 || k >= static_cast<long long>(out.size()))
                fail("BadKey", "replay recipe references a missing line vector");
            Vector tmp = out[static_cast<std::size_t>(k)];
            tmp *= coeff;
            u -= tmp;
        }
        out.push_back(std::move(u));
    }
    return out;
}

} // namespace mhv
