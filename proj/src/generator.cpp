#include "mhv/generator.hpp"

#include "mhv/errors.hpp"

#include <cstdlib>

namespace mhv {

Generator Generator::h_twice(long long t) {
    if (t % 2 == 0) fail("BadIndex", "h-generator index must be a strict half-integer");
    return {GenKind::H, t};
}

long long Generator::d_index() const {
    if (kind != GenKind::D) fail("BadIndex", "d_index on non-d generator");
    return twice / 2;
}

std::string Generator::str() const {
    switch (kind) {
        case GenKind::C: return "c";
        case GenKind::L: return "l";
        case GenKind::D: return "d(" + std::to_string(twice / 2) + ")";
        case GenKind::H: return "h(" + std::to_string(twice) + "/2)";
    }
    return "?";
}

Generator Generator::parse(std::string_view text) {
    auto bad = [&] { fail("ParseError", "not a generator: '" + std::string(text) + "'"); };
    if (text == "c") return c();
    if (text == "l") return l();
    if (text.size() < 4 || text[1] != '(' || text.back() != ')') bad();
    std::string inner(text.substr(2, text.size() - 3));
    if (text[0] == 'd') {
        Scalar v = Scalar::parse(inner);
        if (!v.is_integer()) bad();
        return d(std::stoll(inner));
    }
    if (text[0] == 'h') {
        auto slash = inner.find('/');
        if (slash == std::string::npos || inner.substr(slash + 1) != "2") bad();
        long long num = std::stoll(inner.substr(0, slash));
        if (num % 2 == 0) bad();
        return h_twice(num);
    }
    bad();
    return c();
}

} // namespace mhv
