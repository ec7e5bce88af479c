#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace cuspedge {

/// Monomial in up to three variables. Slot order is (u, v, w); two-variable
/// jets (x, y) use slots 0 and 1 with slot 2 identically zero.
struct Monomial {
    std::array<int, 3> e{0, 0, 0};

    constexpr Monomial() = default;
    constexpr Monomial(int a, int b, int c) : e{a, b, c} {}

    constexpr int degree() const { return e[0] + e[1] + e[2]; }

    constexpr bool operator==(const Monomial& o) const { return e == o.e; }
    constexpr bool operator!=(const Monomial& o) const { return e != o.e; }

    constexpr bool divides(const Monomial& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
    }

    constexpr Monomial operator*(const Monomial& o) const {
        return {e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]};
    }

    /// Quotient; caller must ensure o.divides(*this).
    constexpr Monomial operator/(const Monomial& o) const {
        return {e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]};
    }

    /// "u^2*v" style rendering with vars = "uvw" or "xy".
    std::string str(const char* vars = "uvw") const;
};

/// Graded lexicographic order with u > v > w: lower total degree first, ties
/// broken lexicographically with the u-exponent most significant. This is the
/// canonical term order used everywhere (serialization, bases, pivots).
struct GrlexLess {
    constexpr bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        // Within a degree, u-heavier monomials come first.
        if (a.e[0] != b.e[0]) return a.e[0] > b.e[0];
        if (a.e[1] != b.e[1]) return a.e[1] > b.e[1];
        return a.e[2] > b.e[2];
    }
};

} // namespace cuspedge
