#pragma once

#include "mhv/uea.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace mhv {

// Parameters of the polynomial module Omega(lambda, alpha, beta) on C[t].
// lambda is lambda0^2 and lambda^r means lambda0^{2r} for half-integer r, so
// lambda0 is part of the module's identity: opposite signs of lambda0 give
// different h-actions unless beta compensates.
struct OmegaParams {
    Scalar lambda0;
    Scalar alpha;
    Scalar beta;

    static OmegaParams make(Scalar lambda0, Scalar alpha, Scalar beta);

    Scalar lambda() const { return lambda0 * lambda0; }
    Scalar lambda_pow_twice(long long twice) const { return lambda0.pow(twice); }

    friend bool operator==(const OmegaParams&, const OmegaParams&) = default;
};

// Canonical basis label of a realized module: a polynomial degree for Omega,
// a complement PBW monomial for induced modules, a pair for tensors.
struct BasisKey {
    enum class Kind { Poly, Mono, Pair };

    Kind kind{Kind::Mono};
    long long poly_exp{0};
    PBWMonomial mono;
    std::shared_ptr<const BasisKey> left;
    std::shared_ptr<const BasisKey> right;

    static BasisKey poly(long long j);
    static BasisKey mono_key(PBWMonomial m);
    static BasisKey pair(BasisKey l, BasisKey r);

    std::string str() const; // "t^2", "h(-1/2)^2 * w", "t (x) w"

    friend bool operator==(const BasisKey& a, const BasisKey& b);
    friend bool operator<(const BasisKey& a, const BasisKey& b);
};

using SparseCoords = std::map<BasisKey, Scalar>;

enum class ModuleKind { Omega, Induced, Sugawara, Lift, Twisted, Tensor };

class Module;
using ModulePtr = std::shared_ptr<const Module>;

// Immutable module description plus its exact basis action. All actions are
// pure; vectors are plain values, so everything is safe to share across
// worker threads.
class Module {
public:
    virtual ~Module() = default;

    virtual ModuleKind kind() const = 0;
    virtual std::string name() const = 0;
    virtual bool in_ambient(Generator g) const = 0;
    virtual std::optional<Scalar> central_scalar(GenKind k) const = 0;
    virtual std::optional<BasisKey> vacuum() const = 0;
    virtual bool valid_key(const BasisKey& key) const = 0;

    // Action of a non-central generator on one basis vector.
    virtual SparseCoords act_noncentral(Generator g, const BasisKey& key) const = 0;

    // Structural annihilation bound: least B such that d_i and h_{i-1/2} kill
    // the basis vector for every i > B, or nullopt when no bound exists.
    virtual std::optional<long long> structural_bound(const BasisKey& key) const = 0;

    SparseCoords act_basis(Generator g, const BasisKey& key) const;
    SparseCoords act_coords(Generator g, const SparseCoords& coords) const;
    SparseCoords act_coords(const LieElement& x, const SparseCoords& coords) const;
};

class Vector {
public:
    Vector() = default;
    explicit Vector(ModulePtr module) : module_(std::move(module)) {}
    Vector(ModulePtr module, SparseCoords coords);

    const ModulePtr& module() const { return module_; }
    const SparseCoords& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    void add(const BasisKey& key, const Scalar& coeff);
    Scalar coeff(const BasisKey& key) const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& s);
    friend Vector operator+(Vector a, const Vector& b) { a += b; return a; }
    friend Vector operator-(Vector a, const Vector& b) { a -= b; return a; }
    friend Vector operator*(const Scalar& s, Vector v) { v *= s; return v; }

    friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }

    std::string str() const;

private:
    ModulePtr module_;
    SparseCoords coords_;
};

Vector act(Generator g, const Vector& v);
Vector act(const LieElement& x, const Vector& v);

// --- concrete modules -------------------------------------------------------

class OmegaModule final : public Module {
public:
    explicit OmegaModule(OmegaParams params) : params_(std::move(params)) {}

    const OmegaParams& params() const { return params_; }

    ModuleKind kind() const override { return ModuleKind::Omega; }
    std::string name() const override;
    bool in_ambient(Generator) const override { return true; }
    std::optional<Scalar> central_scalar(GenKind) const override { return Scalar(0); }
    std::optional<BasisKey> vacuum() const override { return BasisKey::poly(0); }
    bool valid_key(const BasisKey& key) const override;
    SparseCoords act_noncentral(Generator g, const BasisKey& key) const override;
    std::optional<long long> structural_bound(const BasisKey&) const override { return std::nullopt; }

private:
    OmegaParams params_;
};

// Ind_{sub}^{ambient} C w_phi. Basis: PBW monomials in the complement of sub
// inside ambient, under the splitting order. The action rewrites g * mono to
// normal form and evaluates phi multiplicatively on the subalgebra factor.
// With sub == ambient this degenerates to the one-dimensional phi-line.
class InducedWhittakerModule final : public Module {
public:
    InducedWhittakerModule(SubalgebraSpec sub, SubalgebraSpec ambient, WhittakerAny phi);

    const SubalgebraSpec& sub() const { return sub_; }
    const SubalgebraSpec& ambient() const { return ambient_; }
    const WhittakerAny& phi() const { return phi_; }
    const OrderKey& order() const { return order_; }
    bool complement_contains(Generator g) const;

    ModuleKind kind() const override { return ModuleKind::Induced; }
    std::string name() const override;
    bool in_ambient(Generator g) const override { return ambient_.contains(g); }
    std::optional<Scalar> central_scalar(GenKind k) const override;
    std::optional<BasisKey> vacuum() const override { return BasisKey::mono_key(PBWMonomial::identity()); }
    bool valid_key(const BasisKey& key) const override;
    SparseCoords act_noncentral(Generator g, const BasisKey& key) const override;
    std::optional<long long> structural_bound(const BasisKey& key) const override;

private:
    SubalgebraSpec sub_;
    SubalgebraSpec ambient_;
    WhittakerAny phi_;
    OrderKey order_;
};

// The Heisenberg Whittaker module W_phi carrying the full algebra action:
// h_r acts as induced, c acts by 1, l by phi(l), and
//   d_n   -> (1/2l) sum_{k in Z+1/2} h_{n-k} h_k              (n != 0)
//   d_0   -> (1/2l) sum_{k in Z+1/2} h_{-|k|} h_{|k|} + 1/16.
// The k-range is computed from the vector and phi's support; boundary terms
// are evaluated and asserted zero rather than silently truncated.
class SugawaraHModule final : public Module {
public:
    explicit SugawaraHModule(WhittakerFunctionH phi);

    const WhittakerFunctionH& phi() const { return phi_; }

    ModuleKind kind() const override { return ModuleKind::Sugawara; }
    std::string name() const override;
    bool in_ambient(Generator) const override { return true; }
    std::optional<Scalar> central_scalar(GenKind k) const override;
    std::optional<BasisKey> vacuum() const override { return inner_.vacuum(); }
    bool valid_key(const BasisKey& key) const override { return inner_.valid_key(key); }
    SparseCoords act_noncentral(Generator g, const BasisKey& key) const override;
    std::optional<long long> structural_bound(const BasisKey& key) const override;

    SparseCoords sugawara_coords(long long n, const SparseCoords& coords) const;

private:
    WhittakerFunctionH phi_;
    InducedWhittakerModule inner_;
};

// A Virasoro-type module viewed over the full algebra with H and l acting by
// zero; d and c are delegated.
class TrivialHLiftModule final : public Module {
public:
    explicit TrivialHLiftModule(ModulePtr inner);

    const ModulePtr& inner() const { return inner_; }

    ModuleKind kind() const override { return ModuleKind::Lift; }
    std::string name() const override { return inner_->name() + "^D"; }
    bool in_ambient(Generator g) const override;
    std::optional<Scalar> central_scalar(GenKind k) const override;
    std::optional<BasisKey> vacuum() const override { return inner_->vacuum(); }
    bool valid_key(const BasisKey& key) const override { return inner_->valid_key(key); }
    SparseCoords act_noncentral(Generator g, const BasisKey& key) const override;
    std::optional<long long> structural_bound(const BasisKey& key) const override;

private:
    ModulePtr inner_;
};

// Action precomposed with theta_spec: x acts as the inner action of theta(x).
class TwistedModule final : public Module {
public:
    TwistedModule(ModulePtr inner, AutomorphismSpec spec);

    const ModulePtr& inner() const { return inner_; }
    const AutomorphismSpec& spec() const { return spec_; }

    ModuleKind kind() const override { return ModuleKind::Twisted; }
    std::string name() const override { return "twist(" + inner_->name() + ")"; }
    bool in_ambient(Generator g) const override;
    std::optional<Scalar> central_scalar(GenKind k) const override { return inner_->central_scalar(k); }
    std::optional<BasisKey> vacuum() const override { return inner_->vacuum(); }
    bool valid_key(const BasisKey& key) const override { return inner_->valid_key(key); }
    SparseCoords act_noncentral(Generator g, const BasisKey& key) const override;
    std::optional<long long> structural_bound(const BasisKey& key) const override;

private:
    ModulePtr inner_;
    AutomorphismSpec spec_;
};

// Diagonal action x(u (x) v) = xu (x) v + u (x) xv; central elements act by
// the sum of the two central scalars.
class TensorModule final : public Module {
public:
    TensorModule(ModulePtr left, ModulePtr right);

    const ModulePtr& left() const { return left_; }
    const ModulePtr& right() const { return right_; }

    ModuleKind kind() const override { return ModuleKind::Tensor; }
    std::string name() const override { return left_->name() + " (x) " + right_->name(); }
    bool in_ambient(Generator g) const override { return left_->in_ambient(g) && right_->in_ambient(g); }
    std::optional<Scalar> central_scalar(GenKind k) const override;
    std::optional<BasisKey> vacuum() const override;
    bool valid_key(const BasisKey& key) const override;
    SparseCoords act_noncentral(Generator g, const BasisKey& key) const override;
    std::optional<long long> structural_bound(const BasisKey& key) const override;

private:
    ModulePtr left_;
    ModulePtr right_;
};

// --- factories ---------------------------------------------------------------

ModulePtr make_omega(OmegaParams params);
ModulePtr make_whittaker_module(const WhittakerFunctionD& phi); // Ind_{D^(m,0)}^{D}
ModulePtr make_whittaker_module(const WhittakerFunctionH& phi); // Ind_{H^(0)}^{H}
ModulePtr make_whittaker_module(const WhittakerFunctionV& psi); // Ind_{V^(m)}^{Vir}
ModulePtr make_w0_module(const WhittakerFunctionD& phi);        // Ind_{D^(m,0)}^{D^(0,0)}
ModulePtr make_line_module(const WhittakerFunctionV& psi);      // one-dimensional psi-line
ModulePtr make_sugawara_module(const WhittakerFunctionH& phi);  // needs phi(l) != 0
ModulePtr lift_trivial_H(ModulePtr inner);
ModulePtr tensor(ModulePtr left, ModulePtr right);
ModulePtr twist_module(ModulePtr inner, AutomorphismSpec spec);

// --- derived operations --------------------------------------------------------

// Least N >= 0 with act(d_i, v) = 0 and act(h_{i-1/2}, v) = 0 for all i >= N,
// found by direct computation below a structural bound (the bound itself is
// sanity-checked by evaluating just past it). Omega factors make a module
// non-restricted and raise NotRestricted.
long long restricted_bound(const Vector& v);

// Target of the decomposition map: SugawaraH(phi|_H) (x) (phi'-line)^D.
ModulePtr make_pi_target(const ModulePtr& whittaker_module);

// Basis-to-basis decomposition map on the pure-h span of W_{phi_m}:
// h-monomial * w  ->  h-monomial * w (x) w'. Raises NotInHSpan when a key
// contains a d-factor.
Vector pi_map(const Vector& v, const ModulePtr& target);

} // namespace mhv
