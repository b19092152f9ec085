#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dehn/filling.hpp"

namespace dehn {

// truly:        the fills admit an orientation-preserving homeomorphism
// reflectively: an orientation-reversing one
enum class Classification { truly, reflectively, both, neither };

std::string_view to_string(Classification c);

Classification classify_pair(const LensSpace& l1, const LensSpace& l2);

// One evaluated cosmetic-filling candidate. Family-derived reports carry
// no meridian/outer slopes (that data is not derived here).
struct CandidateReport {
    std::optional<std::pair<Slope, Slope>> meridians;
    std::optional<Slope> outer;
    std::pair<LensSpace, LensSpace> fills{LensSpace(0, 1), LensSpace(0, 1)};
    Int dist = 0;  // the p of both fills
    Classification classification = Classification::neither;
    bool family_is_non_example = false;
    std::string provenance;
};

// One JSON object on a single line, keys in fixed order: meridian1,
// meridian2, outer, fill1, fill2, dist, classification, provenance.
std::string to_json_line(const CandidateReport& report);

// First violated report invariant, if any: dist consistency, fills
// reproducibility, classification consistency.
std::optional<std::string> report_violation(const CandidateReport& report);

// For each of the two equidistant outer slopes (difference slope first,
// sum slope second), fill both meridians and classify. Requires m1 != m2.
std::vector<CandidateReport> evaluate_construction(const Slope& m1, const Slope& m2,
                                                   std::string_view provenance = "construction");

// Evaluates every unordered pair of canonical slopes with |numerator| <=
// max_p and denominator <= max_den; keeps reports with dist <= max_p and
// classification != neither, sorted by (dist, meridians, outer).
std::vector<CandidateReport> scan_meridians(Int max_p, Int max_den);

// All unordered pairs {q, q'} with 0 < q < q' < p, q*q' = 1 mod p.
// Sorted by the smaller member. Requires p >= 2.
std::vector<std::pair<Int, Int>> heegaard_swap_pairs(Int p);

// Reports for pair_plus and pair_minus of type_iv_family(k), k = 1..k_max.
std::vector<CandidateReport> scan_type_iv(Int k_max);

}  // namespace dehn
