#pragma once

#include "mhv/lie_element.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mhv {

// Structure constants:
//   [d_m, d_n] = (m-n) d_{m+n} + ((m^3-m)/12) delta_{m+n,0} c
//   [d_m, h_r] = -r h_{m+r}
//   [h_r, h_s] = r delta_{r+s,0} l
//   c, l central.
LieElement bracket(Generator x, Generator y);
LieElement bracket(const LieElement& x, const LieElement& y);

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; identically zero, kept as a checkable
// defect for the axiom suite.
LieElement jacobi_defect(Generator x, Generator y, Generator z);

// The subalgebra families used by the module constructions, plus the three
// ambient algebras. Membership is decidable per generator.
struct SubalgebraSpec {
    enum class Variant { Dmn, DmInf, Vm, Hm, Virasoro, Heisenberg, Full };

    Variant variant{Variant::Full};
    long long m{0};
    long long n{0};

    static SubalgebraSpec dmn(long long m, long long n);
    static SubalgebraSpec dm_inf(long long m);
    static SubalgebraSpec vm(long long m);
    static SubalgebraSpec hm(long long m);
    static SubalgebraSpec virasoro() { return {Variant::Virasoro, 0, 0}; }
    static SubalgebraSpec heisenberg() { return {Variant::Heisenberg, 0, 0}; }
    static SubalgebraSpec full() { return {Variant::Full, 0, 0}; }

    bool contains(Generator g) const;
    std::string str() const;

    friend bool operator==(const SubalgebraSpec&, const SubalgebraSpec&) = default;
};

// Finitely supported coefficient family {a_i} of the automorphism
// theta = exp(ad alpha) with alpha = sum_i (2 a_i / (2i-1)) h_{i-1/2}.
// The closed-form action on generators is
//   theta(d_n) = d_n + sum_i a_i h_{n+i-1/2} + (1/2) sum_i a_i a_{-n-i+1} l
//   theta(h_r) = h_r + a_{-r+1/2} l,   theta(c) = c, theta(l) = l.
struct AutomorphismSpec {
    std::map<long long, Scalar> coeffs; // i -> a_i, zeros dropped

    void set(long long i, const Scalar& value);
    Scalar at(long long i) const;
    bool empty() const { return coeffs.empty(); }
    AutomorphismSpec negated() const;

    // The element alpha itself; reconstructible for display only.
    LieElement alpha_element() const;
};

LieElement apply_automorphism(const AutomorphismSpec& spec, Generator g);
LieElement apply_automorphism(const AutomorphismSpec& spec, const LieElement& x);

// Whittaker function on D^(m,0): free slots are d_k (m <= k <= 2m),
// h_r (1/2 <= r <= m-1/2), c and l. Everything else in the domain vanishes
// because the function kills the derived subalgebra; the type enforces it.
struct WhittakerFunctionD {
    long long m{0};
    std::map<long long, Scalar> d_values;        // k -> value
    std::map<long long, Scalar> h_twice_values;  // 2r -> value
    Scalar c_value{0};
    Scalar l_value{0};

    static WhittakerFunctionD make(long long m,
                                   std::map<long long, Scalar> d_values,
                                   std::map<long long, Scalar> h_twice_values,
                                   Scalar c_value, Scalar l_value);

    Scalar d_value(long long k) const;        // 0 for k > 2m, error for k < m
    Scalar h_value_twice(long long t) const;  // 0 for r > m-1/2, error for r < 1/2
    Scalar eval(Generator g) const;
    SubalgebraSpec domain() const { return SubalgebraSpec::dmn(m, 0); }

    friend bool operator==(const WhittakerFunctionD&, const WhittakerFunctionD&) = default;
};

// Whittaker function on H^(0): finitely supported h-values (r >= 1/2) plus l.
// Finite support keeps the induced module restricted and makes every Sugawara
// sum terminate.
struct WhittakerFunctionH {
    std::map<long long, Scalar> h_twice_values;
    Scalar l_value{0};

    static WhittakerFunctionH make(std::map<long long, Scalar> h_twice_values, Scalar l_value);

    Scalar h_value_twice(long long t) const;
    Scalar eval(Generator g) const;
    long long max_support_twice() const; // 0 when no h-support
    SubalgebraSpec domain() const { return SubalgebraSpec::hm(0); }

    friend bool operator==(const WhittakerFunctionH&, const WhittakerFunctionH&) = default;
};

// Whittaker function on V^(m): d_k (m <= k <= 2m) plus c.
struct WhittakerFunctionV {
    long long m{0};
    std::map<long long, Scalar> d_values;
    Scalar c_value{0};

    static WhittakerFunctionV make(long long m, std::map<long long, Scalar> d_values, Scalar c_value);

    Scalar d_value(long long k) const;
    Scalar eval(Generator g) const;
    SubalgebraSpec domain() const { return SubalgebraSpec::vm(m); }

    friend bool operator==(const WhittakerFunctionV&, const WhittakerFunctionV&) = default;
};

using WhittakerAny = std::variant<WhittakerFunctionD, WhittakerFunctionH, WhittakerFunctionV>;

Scalar whittaker_eval(const WhittakerAny& phi, Generator g);
SubalgebraSpec whittaker_domain(const WhittakerAny& phi);

struct WhittakerViolation {
    Generator generator;
    Scalar value;
};

struct ValidationResult {
    std::vector<WhittakerViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Re-derives the commutator span of the domain over an index window computed
// from the function and asserts the function vanishes on it. The typed
// representations make this vacuous; the raw overload exists so untyped
// functionals can be screened the same way.
ValidationResult validate_whittaker(const WhittakerAny& phi);
ValidationResult validate_raw_whittaker(const SubalgebraSpec& domain,
                                        const std::function<Scalar(Generator)>& eval,
                                        long long window);

// phi'(c) = phi(c) - 1,
// phi'(d_k) = phi(d_k) - (1/2l) sum_{i=0}^{m-1} phi(h_{i+1/2}) phi(h_{k-i-1/2})
//             - delta_{0,k}/16          for m <= k <= 2m, 0 above.
// Requires phi(l) != 0.
WhittakerFunctionV derive_phi_prime(const WhittakerFunctionD& phi);

// Solves the upper-triangular system
//   phi(d_{m+j}) = sum_{k=j}^{m} phi(h_{m+j-k-1/2}) a_{-k},  j = 0..m,
// with the convention phi(h_{-1/2}) = 0, for the support {0,-1,...,-m}.
// Requires phi(l) = 0 (WrongCase), phi(h_{m-1/2}) != 0 (Singular) and m >= 1.
AutomorphismSpec solve_twist_coefficients(const WhittakerFunctionD& phi);

// Pullback phi . theta_spec restricted to D^(m,0), evaluating phi by zero
// on h_r below the domain (the h_{-1/2} convention above). Raises
// SupportViolation if the pullback is nonzero at a structurally-zero slot.
WhittakerFunctionD twist_whittaker(const WhittakerFunctionD& phi, const AutomorphismSpec& spec);

// The composed normalization: twisting by the negated solved coefficients
// kills every d-slot m <= k <= 2m while fixing h-values, c and l. The minus
// sign lives here, so callers only ever see the pair that satisfies the
// vanishing post-condition.
struct NormalizedWhittaker {
    WhittakerFunctionD phi;
    AutomorphismSpec spec; // the coefficient family actually applied (already negated)
};
NormalizedWhittaker normalize_whittaker(const WhittakerFunctionD& phi);

} // namespace mhv
