#include "mhv/scalar.hpp"

#include "mhv/errors.hpp"

#include <cctype>
#include <ostream>

namespace mhv {

Scalar::Scalar(long long num, long long den) {
    if (den == 0) fail("DivisionByZero", "rational with zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    auto bad = [&] { fail("ParseError", "not an exact rational literal: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    auto read_int = [&]() -> std::string {
        std::string out;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') out.push_back(text[i]); // mpz rejects a leading '+'
            ++i;
        }
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i++]);
            ++digits;
        }
        if (digits == 0) bad();
        return out;
    };
    std::string num = read_int();
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int();
    }
    if (i != text.size()) bad();

    Scalar s;
    mpz_class n(num), d(den);
    if (d == 0) fail("DivisionByZero", "rational with zero denominator: '" + std::string(text) + "'");
    s.v_ = mpq_class(n, d);
    s.v_.canonicalize();
    return s;
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.v_ = -v_;
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) fail("DivisionByZero", "scalar division by zero");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::pow(long long e) const {
    if (e == 0) return Scalar(1);
    bool invert = e < 0;
    unsigned long long ue = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ull
                                   : static_cast<unsigned long long>(e);
    if (invert && is_zero()) fail("DivisionByZero", "0 raised to a negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(ue));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(ue));
    Scalar r;
    r.v_ = invert ? mpq_class(den, num) : mpq_class(num, den);
    r.v_.canonicalize();
    return r;
}

Scalar Scalar::binomial(long long n, long long k) {
    if (k < 0 || k > n) return Scalar(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    Scalar r;
    r.v_ = mpq_class(b);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace mhv
