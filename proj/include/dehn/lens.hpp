#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "dehn/arith.hpp"

namespace dehn {

// An oriented lens space L(p,q) in canonical form: p >= 0, and for p >= 2
// the residue q lies in (0, p) with gcd(p,q) = 1. L(0,1) is S^2 x S^1 and
// L(1,0) is S^3. Reversing orientation sends q to p - q.
class LensSpace {
public:
    // Normalizes L(-P,-Q) = L(P,Q) and reduces Q mod P. Requires
    // gcd(|P|,|Q|) = 1 (which for P = 0 forces Q = +-1).
    LensSpace(Int p, Int q);

    Int p() const { return p_; }
    Int q() const { return q_; }

    friend bool operator==(const LensSpace&, const LensSpace&) = default;
    friend std::strong_ordering operator<=>(const LensSpace&, const LensSpace&) = default;

private:
    Int p_;
    Int q_;
};

// "L(p,q)" in canonical form.
std::string to_string(const LensSpace& lens);

// Literal grammar: "L(P,Q)" with optional signs, e.g. "L(49,-18)".
LensSpace parse_lens(std::string_view text);

// The oppositely oriented copy L(p, p-q).
LensSpace reverse(const LensSpace& lens);

// Orientation-preserving homeomorphism: p1 = p2 and q2 = q1 or
// q1*q2 = 1 mod p. Degenerates to p1 = p2 for p <= 1.
bool is_oriented_homeo(const LensSpace& lhs, const LensSpace& rhs);

// Homeomorphism in either orientation: q2 in {+-q1, +-q1^-1} mod p.
bool is_homeo(const LensSpace& lhs, const LensSpace& rhs);

// Admits an orientation-reversing self-homeomorphism.
bool is_amphicheiral(const LensSpace& lens);

// Homotopy equivalence: q1*q2 = +-n^2 mod p for some n (oriented variant
// accepts +n^2 only). Squares are enumerated over n = 0..p-1.
bool is_homotopy_equivalent(const LensSpace& lhs, const LensSpace& rhs, bool oriented = false);

// The residue x in [0, p) with q*x = 1 mod p. Requires p >= 1 and
// gcd(q, p) = 1.
Int mod_inverse(Int q, Int p);

}  // namespace dehn
