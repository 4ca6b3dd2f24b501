#pragma once

#include "mhv/liealg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mhv {

// Total order on generators driving PBW normal ordering. The default order
// puts the central elements first (c, then l) and sorts all d/h generators by
// index value ascending; d- and h-indices interleave and never coincide.
// A splitting order additionally puts every generator of one subalgebra
// after every complement generator, so induced-module actions can read the
// Whittaker eigenvalues off the right factor of each monomial.
struct OrderKey {
    std::optional<SubalgebraSpec> split;

    static OrderKey standard() { return {}; }
    static OrderKey splitting(SubalgebraSpec sub) { return {sub}; }

    bool is_splitting_for(const SubalgebraSpec& sub) const {
        return split.has_value() && *split == sub;
    }

    // (block, tier, index): block separates complement (0) from subalgebra (1),
    // tier keeps central elements in front of each block.
    std::tuple<int, int, long long> key(Generator g) const;
    bool less(Generator a, Generator b) const { return key(a) < key(b); }
};

// Ordered monomial: factors strictly increasing in the order, exponents >= 1.
// The empty monomial is the identity. c and l are kept as genuine commuting
// factors; modules evaluate them at action time.
struct PBWMonomial {
    std::vector<std::pair<Generator, int>> factors;

    static PBWMonomial identity() { return {}; }
    static PBWMonomial single(Generator g, int exp = 1) { return {{{g, exp}}}; }

    bool is_identity() const { return factors.empty(); }
    long long degree() const;
    bool well_ordered(const OrderKey& order) const;
    std::vector<Generator> word() const; // expanded generator sequence

    std::string str() const; // "h(-3/2)^2 * d(0)", identity renders as "1"

    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

// Element of the enveloping algebra in normal form: monomial -> coefficient,
// zero coefficients never stored.
class UEAElement {
public:
    UEAElement() = default;
    static UEAElement zero() { return {}; }
    static UEAElement one() { return term(PBWMonomial::identity(), Scalar(1)); }
    static UEAElement term(PBWMonomial mono, Scalar coeff);

    void add(const PBWMonomial& mono, const Scalar& coeff);
    bool is_zero() const { return terms_.empty(); }
    const std::map<PBWMonomial, Scalar>& terms() const { return terms_; }
    Scalar coeff(const PBWMonomial& mono) const;

    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator*=(const Scalar& s);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { a += b; return a; }
    friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    std::map<PBWMonomial, Scalar> terms_;
};

enum class RewriteStrategy { LeftToRight, RightToLeft };

struct RewriteStats {
    std::uint64_t steps = 0;
};

// Upper bound on elementary rewrite steps for a word of the given length:
// sorting one word takes at most L(L-1)/2 adjacent swaps, and each swap can
// branch into at most two words one letter shorter.
std::uint64_t rewrite_step_bound(std::size_t word_length);

// Repeatedly replaces an adjacent out-of-order pair x*y by y*x + [x,y] until
// every word is sorted. The result is independent of which pair is picked;
// the strategy parameter exists so the confluence suite can drive both ends.
UEAElement normal_form(const std::vector<Generator>& word, const OrderKey& order,
                       RewriteStrategy strategy = RewriteStrategy::LeftToRight,
                       RewriteStats* stats = nullptr);

UEAElement multiply(const UEAElement& a, const UEAElement& b, const OrderKey& order);

// Factor a monomial as (complement part) * (subalgebra part). Requires the
// order to be a splitting order for the subalgebra.
std::pair<PBWMonomial, PBWMonomial> split_monomial(const PBWMonomial& mono,
                                                   const SubalgebraSpec& sub,
                                                   const OrderKey& order);

} // namespace mhv
