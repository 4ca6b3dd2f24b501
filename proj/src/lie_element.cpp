#include "mhv/lie_element.hpp"

namespace mhv {

void LieElement::add(Generator g, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar LieElement::coeff(Generator g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar(0) : it->second;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, c] : terms_) c *= s;
    return *this;
}

std::string LieElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (first) {
            if (c.is_one()) out += g.str();
            else if (c == Scalar(-1)) out += "-" + g.str();
            else out += c.str() + "*" + g.str();
            first = false;
            continue;
        }
        Scalar a = c;
        out += (a.sign() < 0) ? " - " : " + ";
        if (a.sign() < 0) a = -a;
        if (a.is_one()) out += g.str();
        else out += a.str() + "*" + g.str();
    }
    return out;
}

} // namespace mhv
