#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mhv {

// Exact rational number, arbitrary precision. Always kept canonical:
// gcd(|num|, den) = 1 and den >= 1. All coefficients, module parameters
// and report scalars go through this type; there is no floating point
// anywhere in the library.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long long n) : v_(static_cast<long>(n)) {
        static_assert(sizeof(long) == sizeof(long long), "needs 64-bit long");
    }
    Scalar(long long num, long long den);

    // Accepts "p" or "p/q" with optional leading sign, nothing else.
    static Scalar parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Canonical form: "p" when den == 1, else "p/q".
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

    // Integer power; negative exponents require a nonzero base.
    Scalar pow(long long e) const;

    static Scalar binomial(long long n, long long k);

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// r/2 as an exact scalar, for half-integer indices stored as twice-values.
inline Scalar half(long long twice) { return Scalar(twice, 2); }

} // namespace mhv
