#include "mhv/modules.hpp"

#include "mhv/errors.hpp"

#include <algorithm>

namespace mhv {

OmegaParams OmegaParams::make(Scalar lambda0, Scalar alpha, Scalar beta) {
    if (lambda0.is_zero()) fail("BadParameter", "omega module needs lambda0 != 0");
    return {std::move(lambda0), std::move(alpha), std::move(beta)};
}

BasisKey BasisKey::poly(long long j) {
    if (j < 0) fail("BadIndex", "polynomial basis exponent must be >= 0");
    BasisKey k;
    k.kind = Kind::Poly;
    k.poly_exp = j;
    return k;
}

BasisKey BasisKey::mono_key(PBWMonomial m) {
    BasisKey k;
    k.kind = Kind::Mono;
    k.mono = std::move(m);
    return k;
}

BasisKey BasisKey::pair(BasisKey l, BasisKey r) {
    BasisKey k;
    k.kind = Kind::Pair;
    k.left = std::make_shared<const BasisKey>(std::move(l));
    k.right = std::make_shared<const BasisKey>(std::move(r));
    return k;
}

std::string BasisKey::str() const {
    switch (kind) {
        case Kind::Poly:
            if (poly_exp == 0) return "1";
            if (poly_exp == 1) return "t";
            return "t^" + std::to_string(poly_exp);
        case Kind::Mono: {
            if (mono.is_identity()) return "w";
            std::string out;
            for (const auto& [g, e] : mono.factors) {
                out += g.str();
                if (e > 1) out += "^" + std::to_string(e);
                out += " * ";
            }
            return out + "w";
        }
        case Kind::Pair:
            return left->str() + " (x) " + right->str();
    }
    return "?";
}

bool operator==(const BasisKey& a, const BasisKey& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case BasisKey::Kind::Poly: return a.poly_exp == b.poly_exp;
        case BasisKey::Kind::Mono: return a.mono == b.mono;
        case BasisKey::Kind::Pair: return *a.left == *b.left && *a.right == *b.right;
    }
    return false;
}

bool operator<(const BasisKey& a, const BasisKey& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    switch (a.kind) {
        case BasisKey::Kind::Poly: return a.poly_exp < b.poly_exp;
        case BasisKey::Kind::Mono: return a.mono < b.mono;
        case BasisKey::Kind::Pair:
            if (*a.left < *b.left) return true;
            if (*b.left < *a.left) return false;
            return *a.right < *b.right;
    }
    return false;
}

SparseCoords Module::act_basis(Generator g, const BasisKey& key) const {
    if (g.is_central()) {
        auto s = central_scalar(g.kind);
        if (!s) fail("OutsideAmbient", g.str() + " does not act on " + name());
        SparseCoords out;
        if (!s->is_zero()) out.emplace(key, *s);
        return out;
    }
    if (!in_ambient(g)) fail("OutsideAmbient", g.str() + " does not act on " + name());
    return act_noncentral(g, key);
}

SparseCoords Module::act_coords(Generator g, const SparseCoords& coords) const {
    SparseCoords out;
    for (const auto& [key, c] : coords) {
        for (const auto& [k2, c2] : act_basis(g, key)) {
            auto it = out.find(k2);
            if (it == out.end()) {
                Scalar v = c * c2;
                if (!v.is_zero()) out.emplace(k2, std::move(v));
            } else {
                it->second += c * c2;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

SparseCoords Module::act_coords(const LieElement& x, const SparseCoords& coords) const {
    SparseCoords out;
    for (const auto& [g, c] : x.terms()) {
        for (const auto& [key, c2] : act_coords(g, coords)) {
            auto it = out.find(key);
            if (it == out.end()) {
                Scalar v = c * c2;
                if (!v.is_zero()) out.emplace(key, std::move(v));
            } else {
                it->second += c * c2;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

Vector::Vector(ModulePtr module, SparseCoords coords)
    : module_(std::move(module)), coords_(std::move(coords)) {
    for (auto it = coords_.begin(); it != coords_.end();)
        it = it->second.is_zero() ? coords_.erase(it) : std::next(it);
}

void Vector::add(const BasisKey& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = coords_.find(key);
    if (it == coords_.end()) {
        coords_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) coords_.erase(it);
}

Scalar Vector::coeff(const BasisKey& key) const {
    auto it = coords_.find(key);
    return it == coords_.end() ? Scalar(0) : it->second;
}

namespace {

void require_same_module(const Vector& a, const Vector& b) {
    if (a.module() && b.module() && a.module() != b.module())
        fail("ModuleMismatch", "vectors belong to different modules");
}

} // namespace

Vector& Vector::operator+=(const Vector& o) {
    require_same_module(*this, o);
    if (!module_) module_ = o.module();
    for (const auto& [k, c] : o.coords_) add(k, c);
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    require_same_module(*this, o);
    if (!module_) module_ = o.module();
    for (const auto& [k, c] : o.coords_) add(k, -c);
    return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        coords_.clear();
        return *this;
    }
    for (auto& [k, c] : coords_) c *= s;
    return *this;
}

std::string Vector::str() const {
    if (coords_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : coords_) {
        Scalar a = c;
        if (first) {
            if (a.sign() < 0) { out += "-"; a = -a; }
            first = false;
        } else {
            out += (a.sign() < 0) ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        std::string ks = k.str();
        if (ks == "1") out += a.str();
        else if (a.is_one()) out += ks;
        else out += a.str() + " * " + ks;
    }
    return out;
}

Vector act(Generator g, const Vector& v) {
    if (!v.module()) fail("ModuleMismatch", "vector without a module");
    return Vector(v.module(), v.module()->act_coords(g, v.coords()));
}

Vector act(const LieElement& x, const Vector& v) {
    if (!v.module()) fail("ModuleMismatch", "vector without a module");
    return Vector(v.module(), v.module()->act_coords(x, v.coords()));
}

// --- Omega -------------------------------------------------------------------

std::string OmegaModule::name() const {
    return "omega(" + params_.lambda0.str() + "," + params_.alpha.str() + "," + params_.beta.str() + ")";
}

bool OmegaModule::valid_key(const BasisKey& key) const {
    return key.kind == BasisKey::Kind::Poly && key.poly_exp >= 0;
}

SparseCoords OmegaModule::act_noncentral(Generator g, const BasisKey& key) const {
    if (key.kind != BasisKey::Kind::Poly) fail("BadKey", "omega module key must be t^j");
    long long j = key.poly_exp;
    SparseCoords out;
    auto add = [&](long long exp, const Scalar& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = out.try_emplace(BasisKey::poly(exp), v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    if (g.is_d()) {
        // d_m(t^j) = lambda^m (t + m alpha)(t + m)^j
        long long m = g.twice / 2;
        Scalar lam = params_.lambda_pow_twice(g.twice);
        Scalar mm(m);
        for (long long k = 0; k <= j; ++k) {
            Scalar base = lam * Scalar::binomial(j, k) * mm.pow(j - k);
            add(k + 1, base);
            add(k, base * mm * params_.alpha);
        }
        return out;
    }
    // h_r(t^j) = beta lambda^r (t + r)^j
    Scalar coef = params_.beta * params_.lambda_pow_twice(g.twice);
    Scalar r = half(g.twice);
    for (long long k = 0; k <= j; ++k)
        add(k, coef * Scalar::binomial(j, k) * r.pow(j - k));
    return out;
}

// --- induced Whittaker ---------------------------------------------------------

namespace {

bool subalgebra_leq(const SubalgebraSpec& a, const SubalgebraSpec& b) {
    using V = SubalgebraSpec::Variant;
    if (b.variant == V::Full) return true;
    if (a == b) return true;
    switch (a.variant) {
        case V::Hm: return (b.variant == V::Heisenberg) || (b.variant == V::Hm && a.m >= b.m);
        case V::Vm: return (b.variant == V::Virasoro) || (b.variant == V::Vm && a.m >= b.m);
        case V::Dmn:
            if (b.variant == V::Dmn) return a.m >= b.m && a.n <= b.n;
            if (b.variant == V::DmInf) return a.m >= b.m;
            return false;
        case V::DmInf: return b.variant == V::DmInf && a.m >= b.m;
        default: return false;
    }
}

} // namespace

InducedWhittakerModule::InducedWhittakerModule(SubalgebraSpec sub, SubalgebraSpec ambient,
                                               WhittakerAny phi)
    : sub_(sub), ambient_(ambient), phi_(std::move(phi)), order_(OrderKey::splitting(sub)) {
    if (!(whittaker_domain(phi_) == sub_))
        fail("BadModule", "Whittaker function domain does not match the inducing subalgebra");
    if (!subalgebra_leq(sub_, ambient_))
        fail("BadModule", sub_.str() + " is not contained in " + ambient_.str());
}

bool InducedWhittakerModule::complement_contains(Generator g) const {
    return ambient_.contains(g) && !sub_.contains(g);
}

std::string InducedWhittakerModule::name() const {
    return "ind[" + sub_.str() + "->" + ambient_.str() + "]";
}

std::optional<Scalar> InducedWhittakerModule::central_scalar(GenKind k) const {
    Generator g = (k == GenKind::C) ? Generator::c() : Generator::l();
    if (!ambient_.contains(g)) return std::nullopt;
    // central elements of the ambient algebra always lie in the subalgebra
    return whittaker_eval(phi_, g);
}

bool InducedWhittakerModule::valid_key(const BasisKey& key) const {
    if (key.kind != BasisKey::Kind::Mono) return false;
    if (!key.mono.well_ordered(order_)) return false;
    for (const auto& [g, e] : key.mono.factors)
        if (!complement_contains(g)) return false;
    return true;
}

SparseCoords InducedWhittakerModule::act_noncentral(Generator g, const BasisKey& key) const {
    if (key.kind != BasisKey::Kind::Mono) fail("BadKey", "induced module key must be a monomial");
    std::vector<Generator> word;
    word.push_back(g);
    for (Generator f : key.mono.word()) word.push_back(f);
    UEAElement nf = normal_form(word, order_);

    SparseCoords out;
    for (const auto& [mono, c] : nf.terms()) {
        auto [complement, subpart] = split_monomial(mono, sub_, order_);
        Scalar value = c;
        for (const auto& [f, e] : subpart.factors) {
            value *= whittaker_eval(phi_, f).pow(e);
            if (value.is_zero()) break;
        }
        if (value.is_zero()) continue;
        auto [it, fresh] = out.try_emplace(BasisKey::mono_key(complement), value);
        if (!fresh) {
            it->second += value;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

namespace {

// Total "creation depth" of a monomial: sum over factors of exponent times
// ceil(-index), counting only negative indices. Repeated brackets can lower
// a positive probe index by at most this much.
long long creation_depth(const PBWMonomial& mono) {
    long long s = 0;
    for (const auto& [g, e] : mono.factors)
        if (g.twice < 0) s += e * ((-g.twice + 1) / 2);
    return s;
}

long long positive_support_bound(const WhittakerAny& phi) {
    return std::visit([](const auto& f) -> long long {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, WhittakerFunctionD>) return 2 * f.m;
        else if constexpr (std::is_same_v<T, WhittakerFunctionV>) return 2 * f.m;
        else return (f.max_support_twice() + 1) / 2;
    }, phi);
}

} // namespace

std::optional<long long> InducedWhittakerModule::structural_bound(const BasisKey& key) const {
    return creation_depth(key.mono) + positive_support_bound(phi_) + 1;
}

// --- Sugawara ------------------------------------------------------------------

SugawaraHModule::SugawaraHModule(WhittakerFunctionH phi)
    : phi_(std::move(phi)),
      inner_(SubalgebraSpec::hm(0), SubalgebraSpec::heisenberg(), phi_) {
    if (phi_.l_value.is_zero())
        fail("ZeroCentralCharge", "Sugawara operators divide by 2l; need phi(l) != 0");
}

std::string SugawaraHModule::name() const { return "sugawaraH"; }

std::optional<Scalar> SugawaraHModule::central_scalar(GenKind k) const {
    if (k == GenKind::C) return Scalar(1);
    return phi_.l_value;
}

SparseCoords SugawaraHModule::act_noncentral(Generator g, const BasisKey& key) const {
    if (g.is_h()) return inner_.act_basis(g, key);
    SparseCoords start;
    start.emplace(key, Scalar(1));
    return sugawara_coords(g.twice / 2, start);
}

SparseCoords SugawaraHModule::sugawara_coords(long long n, const SparseCoords& coords) const {
    if (coords.empty()) return {};
    long long depth_twice = 0;
    for (const auto& [key, c] : coords)
        for (const auto& [g, e] : key.mono.factors)
            depth_twice = std::max(depth_twice, -g.twice);
    long long range = depth_twice + 2 * std::llabs(n) + phi_.max_support_twice() + 2;
    if (range % 2 == 0) ++range;

    auto pair_term = [&](long long tk) -> SparseCoords {
        long long outer = (n == 0) ? -std::llabs(tk) : 2 * n - tk;
        long long inner_idx = (n == 0) ? std::llabs(tk) : tk;
        SparseCoords t1 = inner_.act_coords(Generator::h_twice(inner_idx), coords);
        if (t1.empty()) return {};
        return inner_.act_coords(Generator::h_twice(outer), t1);
    };

    SparseCoords sum;
    auto accumulate = [&](const SparseCoords& term) {
        for (const auto& [k, v] : term) {
            auto it = sum.find(k);
            if (it == sum.end()) sum.emplace(k, v);
            else {
                it->second += v;
                if (it->second.is_zero()) sum.erase(it);
            }
        }
    };
    for (long long tk = -range; tk <= range; tk += 2) accumulate(pair_term(tk));

    // Certified finiteness: the first terms past the computed range must
    // vanish identically, otherwise the range formula is wrong.
    for (long long tk : {range + 2, range + 4, -range - 2, -range - 4})
        if (!pair_term(tk).empty())
            fail("InternalError", "Sugawara summation range underestimated");

    Scalar scale = Scalar(1) / (Scalar(2) * phi_.l_value);
    SparseCoords out;
    for (auto& [k, v] : sum) {
        Scalar s = v * scale;
        if (!s.is_zero()) out.emplace(k, std::move(s));
    }
    if (n == 0) {
        Scalar shift(1, 16);
        for (const auto& [k, v] : coords) {
            auto it = out.find(k);
            if (it == out.end()) out.emplace(k, v * shift);
            else {
                it->second += v * shift;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::optional<long long> SugawaraHModule::structural_bound(const BasisKey& key) const {
    long long base = creation_depth(key.mono) + positive_support_bound(phi_) + 1;
    return 2 * base + 1;
}

// --- trivial-H lift ---------------------------------------------------------------

TrivialHLiftModule::TrivialHLiftModule(ModulePtr inner) : inner_(std::move(inner)) {
    if (!inner_) fail("BadModule", "lift of a null module");
    bool virasoro_like = false;
    if (inner_->kind() == ModuleKind::Induced) {
        const auto& ind = static_cast<const InducedWhittakerModule&>(*inner_);
        auto v = ind.ambient().variant;
        virasoro_like = (v == SubalgebraSpec::Variant::Virasoro || v == SubalgebraSpec::Variant::Vm);
    } else if (inner_->kind() == ModuleKind::Omega) {
        virasoro_like = static_cast<const OmegaModule&>(*inner_).params().beta.is_zero();
    }
    if (!virasoro_like)
        fail("BadModule", "trivial-H lift needs a Virasoro-type module, got " + inner_->name());
}

bool TrivialHLiftModule::in_ambient(Generator g) const {
    if (g.is_h() || g.is_central()) return true;
    return inner_->in_ambient(g);
}

std::optional<Scalar> TrivialHLiftModule::central_scalar(GenKind k) const {
    if (k == GenKind::L) return Scalar(0);
    return inner_->central_scalar(k);
}

SparseCoords TrivialHLiftModule::act_noncentral(Generator g, const BasisKey& key) const {
    if (g.is_h()) return {};
    return inner_->act_basis(g, key);
}

std::optional<long long> TrivialHLiftModule::structural_bound(const BasisKey& key) const {
    return inner_->structural_bound(key);
}

// --- twist ------------------------------------------------------------------------

TwistedModule::TwistedModule(ModulePtr inner, AutomorphismSpec spec)
    : inner_(std::move(inner)), spec_(std::move(spec)) {
    if (!inner_) fail("BadModule", "twist of a null module");
}

bool TwistedModule::in_ambient(Generator g) const {
    if (g.is_central()) return true;
    LieElement image = apply_automorphism(spec_, g);
    for (const auto& [t, c] : image.terms()) {
        if (t.is_central()) {
            if (!inner_->central_scalar(t.kind)) return false;
        } else if (!inner_->in_ambient(t)) {
            return false;
        }
    }
    return true;
}

SparseCoords TwistedModule::act_noncentral(Generator g, const BasisKey& key) const {
    SparseCoords start;
    start.emplace(key, Scalar(1));
    return inner_->act_coords(apply_automorphism(spec_, g), start);
}

std::optional<long long> TwistedModule::structural_bound(const BasisKey& key) const {
    auto b = inner_->structural_bound(key);
    if (!b) return std::nullopt;
    long long span = 0;
    for (const auto& [i, a] : spec_.coeffs) span = std::max(span, std::llabs(i));
    return *b + span + 1;
}

// --- tensor -----------------------------------------------------------------------

TensorModule::TensorModule(ModulePtr left, ModulePtr right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (!left_ || !right_) fail("BadModule", "tensor of a null module");
}

std::optional<Scalar> TensorModule::central_scalar(GenKind k) const {
    auto a = left_->central_scalar(k);
    auto b = right_->central_scalar(k);
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

std::optional<BasisKey> TensorModule::vacuum() const {
    auto a = left_->vacuum();
    auto b = right_->vacuum();
    if (!a || !b) return std::nullopt;
    return BasisKey::pair(*a, *b);
}

bool TensorModule::valid_key(const BasisKey& key) const {
    return key.kind == BasisKey::Kind::Pair && left_->valid_key(*key.left) &&
           right_->valid_key(*key.right);
}

SparseCoords TensorModule::act_noncentral(Generator g, const BasisKey& key) const {
    if (key.kind != BasisKey::Kind::Pair) fail("BadKey", "tensor module key must be a pair");
    SparseCoords out;
    auto add = [&](BasisKey k, const Scalar& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = out.try_emplace(std::move(k), v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [k2, c] : left_->act_basis(g, *key.left))
        add(BasisKey::pair(k2, *key.right), c);
    for (const auto& [k2, c] : right_->act_basis(g, *key.right))
        add(BasisKey::pair(*key.left, k2), c);
    return out;
}

std::optional<long long> TensorModule::structural_bound(const BasisKey& key) const {
    if (key.kind != BasisKey::Kind::Pair) fail("BadKey", "tensor module key must be a pair");
    auto a = left_->structural_bound(*key.left);
    auto b = right_->structural_bound(*key.right);
    if (!a || !b) return std::nullopt;
    return std::max(*a, *b);
}

// --- factories ----------------------------------------------------------------------

ModulePtr make_omega(OmegaParams params) {
    return std::make_shared<OmegaModule>(std::move(params));
}

ModulePtr make_whittaker_module(const WhittakerFunctionD& phi) {
    return std::make_shared<InducedWhittakerModule>(SubalgebraSpec::dmn(phi.m, 0),
                                                    SubalgebraSpec::full(), phi);
}

ModulePtr make_whittaker_module(const WhittakerFunctionH& phi) {
    return std::make_shared<InducedWhittakerModule>(SubalgebraSpec::hm(0),
                                                    SubalgebraSpec::heisenberg(), phi);
}

ModulePtr make_whittaker_module(const WhittakerFunctionV& psi) {
    return std::make_shared<InducedWhittakerModule>(SubalgebraSpec::vm(psi.m),
                                                    SubalgebraSpec::virasoro(), psi);
}

ModulePtr make_w0_module(const WhittakerFunctionD& phi) {
    return std::make_shared<InducedWhittakerModule>(SubalgebraSpec::dmn(phi.m, 0),
                                                    SubalgebraSpec::dmn(0, 0), phi);
}

ModulePtr make_line_module(const WhittakerFunctionV& psi) {
    return std::make_shared<InducedWhittakerModule>(SubalgebraSpec::vm(psi.m),
                                                    SubalgebraSpec::vm(psi.m), psi);
}

ModulePtr make_sugawara_module(const WhittakerFunctionH& phi) {
    return std::make_shared<SugawaraHModule>(phi);
}

ModulePtr lift_trivial_H(ModulePtr inner) {
    return std::make_shared<TrivialHLiftModule>(std::move(inner));
}

ModulePtr tensor(ModulePtr left, ModulePtr right) {
    return std::make_shared<TensorModule>(std::move(left), std::move(right));
}

ModulePtr twist_module(ModulePtr inner, AutomorphismSpec spec) {
    return std::make_shared<TwistedModule>(std::move(inner), std::move(spec));
}

// --- restricted bound ------------------------------------------------------------------

long long restricted_bound(const Vector& v) {
    const ModulePtr& mod = v.module();
    if (!mod) fail("ModuleMismatch", "vector without a module");
    if (v.is_zero()) return 0;

    long long bound = 0;
    for (const auto& [key, c] : v.coords()) {
        auto b = mod->structural_bound(key);
        if (!b) fail("NotRestricted", mod->name() + " is not a restricted module");
        bound = std::max(bound, *b);
    }

    auto annihilated_at = [&](long long i) {
        Generator di = Generator::d(i);
        if (mod->in_ambient(di) && !act(di, v).is_zero()) return false;
        Generator hi = Generator::h_twice(2 * i - 1);
        return !mod->in_ambient(hi) || act(hi, v).is_zero();
    };

    for (long long i = bound + 1; i <= bound + 2; ++i)
        if (!annihilated_at(i))
            fail("InternalError", "structural annihilation bound underestimated");

    long long n = 0;
    for (long long i = 0; i <= bound; ++i)
        if (!annihilated_at(i)) n = i + 1;
    return n;
}

// --- decomposition map -------------------------------------------------------------------

namespace {

const InducedWhittakerModule& as_full_whittaker_D(const ModulePtr& mod) {
    if (!mod || mod->kind() != ModuleKind::Induced)
        fail("BadModule", "expected a D-Whittaker module");
    const auto& ind = static_cast<const InducedWhittakerModule&>(*mod);
    if (!(ind.ambient() == SubalgebraSpec::full()) ||
        !std::holds_alternative<WhittakerFunctionD>(ind.phi()))
        fail("BadModule", "expected Ind_{D^(m,0)}^{D} with a D-flavor Whittaker function");
    return ind;
}

} // namespace

ModulePtr make_pi_target(const ModulePtr& whittaker_module) {
    const auto& ind = as_full_whittaker_D(whittaker_module);
    const auto& phi = std::get<WhittakerFunctionD>(ind.phi());
    if (phi.l_value.is_zero())
        fail("ZeroCentralCharge", "decomposition needs phi(l) != 0");
    WhittakerFunctionH phi_h = WhittakerFunctionH::make(phi.h_twice_values, phi.l_value);
    WhittakerFunctionV phi_prime = derive_phi_prime(phi);
    return tensor(make_sugawara_module(phi_h), lift_trivial_H(make_line_module(phi_prime)));
}

Vector pi_map(const Vector& v, const ModulePtr& target) {
    as_full_whittaker_D(v.module());
    if (!target || target->kind() != ModuleKind::Tensor)
        fail("BadModule", "decomposition target must be the Sugawara tensor module");
    BasisKey line_vacuum = BasisKey::mono_key(PBWMonomial::identity());

    Vector out(target);
    for (const auto& [key, c] : v.coords()) {
        for (const auto& [g, e] : key.mono.factors)
            if (!g.is_h())
                fail("NotInHSpan", "key " + key.str() + " contains a non-Heisenberg factor");
        out.add(BasisKey::pair(key, line_vacuum), c);
    }
    return out;
}

} // namespace mhv
