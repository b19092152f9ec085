#include "dehn/filling.hpp"

#include <stdexcept>

namespace dehn {

LensSpace fill_two_sided(const Slope& r1, const Slope& r2, Int astar, Int bstar) {
    const Int a = r1.a(), b = r1.b();
    const Int c = r2.a(), d = r2.b();
    if (checked_sub(checked_mul(astar, b), checked_mul(bstar, a)) != 1)
        throw std::domain_error("completion must satisfy a*b - b*a = 1");
    Int p = checked_sub(checked_mul(b, c), checked_mul(a, d));
    Int q = checked_sub(checked_mul(astar, d), checked_mul(bstar, c));
    return LensSpace(p, q);
}

LensSpace fill_two_sided(const Slope& r1, const Slope& r2) {
    UnimodularMap m = complete_to_unimodular(r1);
    return fill_two_sided(r1, r2, m.m11(), m.m21());
}

GordonMeridian gordon_meridian(const Slope& surgery, Int winding) {
    if (winding < 1) throw std::domain_error("winding number must be positive");
    Int denom = checked_mul(checked_mul(winding, winding), surgery.b());
    Int g = gcd_abs(surgery.a(), denom);
    return {Slope::reduced(surgery.a(), denom), g};
}

}  // namespace dehn
