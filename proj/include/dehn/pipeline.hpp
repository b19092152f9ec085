#pragma once

#include <string>
#include <vector>

namespace dehn {

struct CheckLine {
    std::string label;
    bool pass;
};

// Recomputes and checks every derived fact of the built-in W3^-1 W7^3
// construction: Gordon meridians, equidistant outers, the distance-49
// reflective fill pair, its unoriented type, and the modular witness.
std::vector<CheckLine> verify_reference_example();

}  // namespace dehn
