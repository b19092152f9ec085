#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dehn/arith.hpp"
#include "dehn/lens.hpp"
#include "dehn/slope.hpp"

namespace dehn {

// One factor W_n^e, where W_n is the product of the first n-1 standard
// braid generators.
struct BraidToken {
    Int index;     // 2 <= index <= strands
    Int exponent;  // nonzero

    friend bool operator==(const BraidToken&, const BraidToken&) = default;
};

// A word in the W_n tokens, read left to right, in the braid group on
// `strands` strands (= winding number of the closure in the solid torus).
class BraidWord {
public:
    BraidWord(Int strands, std::vector<BraidToken> tokens);

    Int strands() const { return strands_; }
    const std::vector<BraidToken>& tokens() const { return tokens_; }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    Int strands_;
    std::vector<BraidToken> tokens_;
};

// "W3^-1 W7^3"; a ^1 exponent is omitted.
std::string to_string(const BraidWord& word);

// Literal: whitespace-separated "W<n>[^<e>]" tokens. Strand count is
// explicit, or inferred as the largest token index when strands = 0.
BraidWord parse_braid(std::string_view text, Int strands = 0);

// Image under the projection to the symmetric group, with W_n mapped to
// the n-cycle (1 2 ... n) fixing n+1..N and tokens composed left to
// right. Entry i is the image of strand i+1.
std::vector<Int> permutation_of(const BraidWord& word);

// True iff the closure is a single circle (the permutation is an N-cycle).
bool is_knot(const BraidWord& word);

// Homology class of the closure in the solid torus: the strand count.
Int winding_number(const BraidWord& word);

// One member of the braid family built on the Pythagorean triples
// (s, t, u) = (2k+1, 2k(k+1), 2k^2+2k+1).
struct FamilyRecord {
    Int k;
    Int s;
    Int t;
    Int u;
    BraidWord word;  // Ws^1 Wt^-s on t strands
    std::pair<LensSpace, LensSpace> pair_plus;   // L(u+s, s+2) and its reverse
    std::pair<LensSpace, LensSpace> pair_minus;  // L(u-s, s-2) and its reverse
    // The family manifolds are amphicheiral graph manifolds and the slope
    // pairs are equivalent, so these are not exotic examples.
    bool family_is_non_example = true;
};

FamilyRecord type_iv_family(Int k);

// A braid in a solid torus together with the slopes that fill back to a
// solid torus (classification data, not derived here).
struct SolidTorusConstruction {
    BraidWord word;
    std::vector<Slope> special_slopes;
    Int winding;
};

// The 1-bridge braid W3^-1 W7^3 with its three refilling slopes
// 1/0, 18/1, 19/1.
SolidTorusConstruction w3_w7_construction();

}  // namespace dehn
