#pragma once

#include "dehn/lens.hpp"
#include "dehn/slope.hpp"

namespace dehn {

// Dehn filling of T^2 x [0,1] along r1 = a/b and r2 = c/d: the lens space
// L(bc - ad, a*d - b*c) with (a*, b*) the unimodular completion of r1.
// Its order p always equals distance(r1, r2); equal slopes give L(0,1).
LensSpace fill_two_sided(const Slope& r1, const Slope& r2);

// Same, with an explicit completion: astar*b - bstar*a must equal 1.
// The canonical result does not depend on the completion chosen.
LensSpace fill_two_sided(const Slope& r1, const Slope& r2, Int astar, Int bstar);

struct GordonMeridian {
    Slope meridian;
    Int reduction;  // gcd divided out of (p, k^2 q); 1 in the coprime case
};

// Meridian p/(k^2 q) of the solid torus produced by p/q surgery on a knot
// of winding number k in a solid torus. The pair reduces only when
// gcd(p, k) > 1; the factor is surfaced rather than dropped.
GordonMeridian gordon_meridian(const Slope& surgery, Int winding);

// Lens space from attaching a solid torus along `outer` on the outside of
// the solid torus whose refilled meridian is `meridian`.
inline LensSpace lens_from_construction(const Slope& meridian, const Slope& outer) {
    return fill_two_sided(meridian, outer);
}

}  // namespace dehn
