#pragma once

#include "mhv/generator.hpp"
#include "mhv/scalar.hpp"

#include <map>
#include <string>

namespace mhv {

// Finite linear combination of basis generators with exact coefficients.
// Zero coefficients are never stored.
class LieElement {
public:
    LieElement() = default;
    explicit LieElement(Generator g) { add(g, Scalar(1)); }

    void add(Generator g, const Scalar& coeff);
    bool is_zero() const { return terms_.empty(); }
    const std::map<Generator, Scalar>& terms() const { return terms_; }
    Scalar coeff(Generator g) const;

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Scalar& s);
    friend LieElement operator+(LieElement a, const LieElement& b) { a += b; return a; }
    friend LieElement operator-(LieElement a, const LieElement& b) { a -= b; return a; }
    friend LieElement operator*(const Scalar& s, LieElement x) { x *= s; return x; }

    friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    std::map<Generator, Scalar> terms_;
};

} // namespace mhv
