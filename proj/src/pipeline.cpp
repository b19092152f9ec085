#include "dehn/pipeline.hpp"

#include <vector>

#include "dehn/braid.hpp"
#include "dehn/filling.hpp"
#include "dehn/search.hpp"

namespace dehn {

std::vector<CheckLine> verify_reference_example() {
    std::vector<CheckLine> lines;
    auto check = [&](std::string label, bool pass) {
        lines.push_back({std::move(label), pass});
    };

    SolidTorusConstruction cons = w3_w7_construction();
    check("braid " + to_string(cons.word) + " closes to a knot", is_knot(cons.word));
    check("winding=7", winding_number(cons.word) == 7 && cons.winding == 7);

    const std::vector<Slope> expected_slopes{Slope(1, 0), Slope(18, 1), Slope(19, 1)};
    check("special slopes: 1/0 18/1 19/1", cons.special_slopes == expected_slopes);

    GordonMeridian g0 = gordon_meridian(cons.special_slopes[0], cons.winding);
    GordonMeridian g1 = gordon_meridian(cons.special_slopes[1], cons.winding);
    GordonMeridian g2 = gordon_meridian(cons.special_slopes[2], cons.winding);
    check("meridians: 1/0 18/49 19/49",
          g0.meridian == Slope(1, 0) && g1.meridian == Slope(18, 49) &&
              g2.meridian == Slope(19, 49) && g0.reduction == 1 && g1.reduction == 1 &&
              g2.reduction == 1);

    auto [outer_diff, outer_sum] = equidistant_slopes(g1.meridian, g2.meridian);
    check("equidistant outers: 1/0 37/98",
          outer_diff == Slope(1, 0) && outer_sum == Slope(37, 98));

    check("distance=49", distance(g1.meridian, outer_diff) == 49 &&
                             distance(g2.meridian, outer_diff) == 49);

    LensSpace f1 = lens_from_construction(g1.meridian, outer_diff);
    LensSpace f2 = lens_from_construction(g2.meridian, outer_diff);
    check("fills at 1/0 have order 49", f1.p() == 49 && f2.p() == 49);

    Classification c = classify_pair(f1, f2);
    check("pair=reflective", c == Classification::reflectively);
    check("pair is not orientation-preservingly homeomorphic", !is_oriented_homeo(f1, f2));
    check("each fill is L(49,18) up to orientation",
          is_homeo(f1, LensSpace(49, 18)) && is_homeo(f2, LensSpace(49, 18)));

    bool witness = ((f1.q() == 30 && f2.q() == 31) || (f1.q() == 31 && f2.q() == 30)) &&
                   mul_mod(f1.q(), f2.q(), 49) == 48;
    check("witness 30*31=-1 mod 49", witness);

    return lines;
}

}  // namespace dehn
