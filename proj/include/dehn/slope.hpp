#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "dehn/arith.hpp"

namespace dehn {

// An unoriented essential simple closed curve on the torus, encoded as a
// coprime pair (a, b) with (a, b) and (-a, -b) identified. The stored
// representative is canonical: b > 0, or b == 0 and a == 1.
class Slope {
public:
    // Requires gcd(|a|,|b|) = 1 and (a, b) != (0, 0); fixes the sign.
    Slope(Int a, Int b);

    // Divides out the gcd first, then canonicalizes.
    static Slope reduced(Int a, Int b);

    Int a() const { return a_; }
    Int b() const { return b_; }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend std::strong_ordering operator<=>(const Slope&, const Slope&) = default;

private:
    Int a_;
    Int b_;
};

// "a/b" with the canonical representative, e.g. "18/49", "-9/1", "1/0".
std::string to_string(const Slope& r);

// Literal grammar: [-]?DIGITS "/" [-]?DIGITS. A non-coprime pair is
// rejected unless allow_reduce is set, in which case the gcd is divided
// out. "0/0" is always rejected.
Slope parse_slope(std::string_view text, bool allow_reduce = false);

// Minimal geometric intersection number |a1*b2 - b1*a2|.
Int distance(const Slope& r1, const Slope& r2);

// The class of (-a, b).
Slope negate(const Slope& r);

// The two slopes equidistant from r1 and r2: the difference slope
// (a1-a2)/(b1-b2) first, the sum slope (a1+a2)/(b1+b2) second, each
// reduced. Requires r1 != r2 (otherwise every slope through the pencil
// is equidistant).
std::pair<Slope, Slope> equidistant_slopes(const Slope& r1, const Slope& r2);

// A 2x2 integer matrix of determinant +1 or -1, acting on slopes.
class UnimodularMap {
public:
    UnimodularMap(Int m11, Int m12, Int m21, Int m22);

    static UnimodularMap identity() { return {1, 0, 0, 1}; }

    Int m11() const { return m11_; }
    Int m12() const { return m12_; }
    Int m21() const { return m21_; }
    Int m22() const { return m22_; }

    Int det() const;
    UnimodularMap inverse() const;

    friend UnimodularMap operator*(const UnimodularMap& lhs, const UnimodularMap& rhs);
    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

private:
    Int m11_, m12_, m21_, m22_;
};

// The class of (m11*a + m12*b, m21*a + m22*b); coprimality is preserved.
Slope apply_map(const UnimodularMap& m, const Slope& r);

// A determinant +1 map whose second column is the canonical representative
// (a, b) of r; the first column (a*, b*) solves a*b - b*a = 1. For b > 0
// the representative with b* in [0, b) is chosen; for r = 1/0 the solution
// is forced to (a*, b*) = (0, -1).
UnimodularMap complete_to_unimodular(const Slope& r);

}  // namespace dehn
