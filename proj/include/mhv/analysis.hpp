#pragma once

#include "mhv/modules.hpp"

#include <vector>

namespace mhv {

// Irreducibility of the Heisenberg Whittaker module W_phi: phi(l) != 0.
bool criterion_whittaker_H(const WhittakerFunctionH& phi);

// Irreducibility of W_{phi_m} over the full algebra, m >= 1:
//   phi(l) != 0:  phi(d_{2m}) != 0  or  2 phi(l) phi(d_{2m-1}) - phi(h_{m-1/2})^2 != 0
//   phi(l)  = 0:  phi(h_{m-1/2}) != 0.
// The m = 0 Verma case is out of scope and raises UnsupportedM.
bool criterion_whittaker_D(const WhittakerFunctionD& phi);

// Irreducibility of the Virasoro Whittaker module, m >= 1:
// (psi(d_{2m}), psi(d_{2m-1})) != (0,0).
bool criterion_virasoro_whittaker(const WhittakerFunctionV& psi);

// Irreducibility of Omega(lambda, alpha, beta): (alpha, beta) != (0,0).
bool criterion_omega(const OmegaParams& p);

// Irreducibility of Omega (x) W_{phi_m}: both factor criteria.
bool criterion_tensor(const OmegaParams& p, const WhittakerFunctionD& phi);

// Omega modules are isomorphic iff their generator actions coincide:
// lambda equal, alpha equal, and beta*lambda0 equal.
bool iso_predicate_omega(const OmegaParams& a, const OmegaParams& b);

// Tensor isomorphism, assuming both Whittaker factors irreducible
// (HypothesisUnmet otherwise). Whittaker factors are compared by strict
// (m, phi) equality; no intrinsic criterion is known, so this proxy is
// flagged in reports.
bool iso_predicate_tensor(const OmegaParams& p1, const WhittakerFunctionD& phi1,
                          const OmegaParams& p2, const WhittakerFunctionD& phi2);

// Exponent tuple (i_0, ..., i_{m-1}) of a d-monomial basis vector of W_0,
// ordered reverse-lexicographically: the first differing coordinate from the
// low-index end decides.
struct W0Degree {
    std::vector<long long> exponents;

    static W0Degree zero(long long m) { return {std::vector<long long>(m, 0)}; }
    static W0Degree of_key(const BasisKey& key, long long m);

    bool is_zero() const;
    long long min_nonzero_position() const; // error when zero
    W0Degree minus_epsilon(long long p) const;
    long long total() const;
    std::string str() const;

    friend bool operator==(const W0Degree&, const W0Degree&) = default;
};

bool reverse_lex_less(const W0Degree& a, const W0Degree& b);

// Maximal exponent tuple in the support of v (reverse-lex).
W0Degree w0_degree(const Vector& v, long long m);

// One degree-stripping step in W_0 for a normalized phi (l = 0, all d-values
// zero, phi(h_{m-1/2}) != 0): with i = deg(v) and p the lowest nonzero
// position, returns (h_{m-p-1/2} - phi(h_{m-p-1/2})) v, whose degree is
// exactly i - epsilon_p.
Vector strip_step(const Vector& v, const WhittakerFunctionD& phi);

struct ReduceResult {
    Scalar coefficient; // v reduced to coefficient * w
    long long steps = 0;
};

// Iterated strip until the vacuum line is reached. Raises Stalled if a step
// fails to drop the degree (which would contradict the strip law) and
// StepLimit when max_steps is exhausted.
ReduceResult reduce_to_whittaker(const Vector& v, const WhittakerFunctionD& phi,
                                 long long max_steps);

// act(x, v) == phi(x) * v for every generator of phi's domain with index
// up to the window (central elements included where the module carries them).
bool whittaker_vector_check(const Vector& v, const WhittakerAny& phi, long long window);

// For v = sum_{i<=s} t^i (x) v_i in Omega (x) V with v_s != 0, recovers
// 1 (x) v_s through module actions alone: normalized h_r applications at s+1
// distinct r >= N (case beta != 0) or d_m applications at s+2 distinct
// m >= N (case beta = 0, alpha != 0), followed by an exact Vandermonde solve.
Vector extract_tensor_leader(const Vector& v);

struct OmegaLineStep {
    long long j = 0;
    long long m_used = 0;
    std::map<long long, Scalar> corrections; // index k -> coefficient of t^k (x) v
};

struct OmegaLine {
    std::vector<Vector> vectors; // vectors[j] = t^j (x) v
    std::vector<OmegaLineStep> steps;
};

// From base = 1 (x) v, produces t^j (x) v for j <= j_max, each as an explicit
// recorded combination of one d_m application to the previous line vector and
// corrections by lower ones:
//   t^j (x) v = lambda^{-m} d_m(t^{j-1} (x) v)
//               - sum_{k<j} [C(j-1,k-1) + alpha C(j-1,k)] m^{j-k} t^k (x) v.
OmegaLine generate_omega_line(const Vector& base, long long j_max);

// Re-executes a recorded recipe; callers compare against the expected line.
std::vector<Vector> replay_omega_line(const Vector& base, const std::vector<OmegaLineStep>& steps);

} // namespace mhv
