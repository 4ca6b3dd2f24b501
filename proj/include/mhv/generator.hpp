#pragma once

#include "mhv/scalar.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mhv {

// Basis symbols of the mirror Heisenberg-Virasoro algebra: d_m (m integer),
// h_r (r a strict half-integer), and the two central elements c, l.
// Indices are stored as twice-values so every index computation stays in
// integers: D carries twice = 2m (even), H carries twice = 2r (odd).
enum class GenKind : std::uint8_t { C = 0, L = 1, D = 2, H = 3 };

struct Generator {
    GenKind kind{GenKind::C};
    long long twice{0};

    static Generator c() { return {GenKind::C, 0}; }
    static Generator l() { return {GenKind::L, 0}; }
    static Generator d(long long m) { return {GenKind::D, 2 * m}; }
    static Generator h_twice(long long t); // t must be odd

    bool is_central() const { return kind == GenKind::C || kind == GenKind::L; }
    bool is_d() const { return kind == GenKind::D; }
    bool is_h() const { return kind == GenKind::H; }
    long long d_index() const;       // D only
    Scalar index() const { return half(twice); }

    std::string str() const;         // "d(3)", "h(-1/2)", "c", "l"
    static Generator parse(std::string_view text);

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

} // namespace mhv
