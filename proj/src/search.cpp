#include "dehn/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "dehn/braid.hpp"

namespace dehn {

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::truly: return "truly";
        case Classification::reflectively: return "reflectively";
        case Classification::both: return "both";
        case Classification::neither: return "neither";
    }
    throw std::logic_error("bad classification value");
}

Classification classify_pair(const LensSpace& l1, const LensSpace& l2) {
    bool truly = is_oriented_homeo(l1, l2);
    bool reflectively = is_oriented_homeo(l1, reverse(l2));
    if (truly && reflectively) return Classification::both;
    if (truly) return Classification::truly;
    if (reflectively) return Classification::reflectively;
    return Classification::neither;
}

std::string to_json_line(const CandidateReport& report) {
    nlohmann::ordered_json j;
    auto slope_or_null = [](const std::optional<Slope>& s) {
        return s ? nlohmann::ordered_json(to_string(*s)) : nlohmann::ordered_json(nullptr);
    };
    j["meridian1"] = slope_or_null(
        report.meridians ? std::optional<Slope>(report.meridians->first) : std::nullopt);
    j["meridian2"] = slope_or_null(
        report.meridians ? std::optional<Slope>(report.meridians->second) : std::nullopt);
    j["outer"] = slope_or_null(report.outer);
    j["fill1"] = to_string(report.fills.first);
    j["fill2"] = to_string(report.fills.second);
    j["dist"] = report.dist;
    j["classification"] = to_string(report.classification);
    j["provenance"] = report.provenance;
    if (report.family_is_non_example) j["family_is_non_example"] = true;
    return j.dump();
}

std::optional<std::string> report_violation(const CandidateReport& report) {
    if (report.fills.first.p() != report.dist || report.fills.second.p() != report.dist)
        return "fill order differs from dist";
    if (classify_pair(report.fills.first, report.fills.second) != report.classification)
        return "classification disagrees with the fills";
    if (report.meridians.has_value() != report.outer.has_value())
        return "meridians and outer must be present together";
    if (report.meridians) {
        const auto& [m1, m2] = *report.meridians;
        if (distance(m1, *report.outer) != report.dist ||
            distance(m2, *report.outer) != report.dist)
            return "outer slope is not equidistant at dist";
        if (lens_from_construction(m1, *report.outer) != report.fills.first ||
            lens_from_construction(m2, *report.outer) != report.fills.second)
            return "fills do not reproduce from the slopes";
    }
    return std::nullopt;
}

std::vector<CandidateReport> evaluate_construction(const Slope& m1, const Slope& m2,
                                                   std::string_view provenance) {
    if (m1 == m2) throw std::domain_error("meridians must be distinct slopes");
    auto [diff, sum] = equidistant_slopes(m1, m2);
    std::vector<CandidateReport> reports;
    for (const Slope& outer : {diff, sum}) {
        CandidateReport r;
        r.meridians = {m1, m2};
        r.outer = outer;
        r.fills = {lens_from_construction(m1, outer), lens_from_construction(m2, outer)};
        r.dist = distance(m1, outer);
        r.classification = classify_pair(r.fills.first, r.fills.second);
        r.provenance = provenance;
        reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<CandidateReport> scan_meridians(Int max_p, Int max_den) {
    if (max_p < 1 || max_den < 1) throw std::domain_error("scan bounds must be >= 1");

    std::vector<Slope> slopes;
    slopes.emplace_back(1, 0);
    for (Int b = 1; b <= max_den; ++b)
        for (Int a = -max_p; a <= max_p; ++a)
            if (gcd_abs(a, b) == 1) slopes.emplace_back(a, b);
    std::sort(slopes.begin(), slopes.end());

    std::string provenance =
        "scan:max-p=" + std::to_string(max_p) + ",max-den=" + std::to_string(max_den);

    std::vector<CandidateReport> out;
    for (size_t i = 0; i < slopes.size(); ++i) {
        for (size_t j = i + 1; j < slopes.size(); ++j) {
            const Slope& m1 = slopes[i];
            const Slope& m2 = slopes[j];
            // dist of the two candidate reports is distance(m1,m2) divided
            // by the gcd reducing each outer; skip pairs where both exceed
            // the bound before filling anything
            Int d = distance(m1, m2);
            Int g_diff = gcd_abs(m1.a() - m2.a(), m1.b() - m2.b());
            Int g_sum = gcd_abs(m1.a() + m2.a(), m1.b() + m2.b());
            if (d / g_diff > max_p && d / g_sum > max_p) continue;
            for (CandidateReport& r : evaluate_construction(m1, m2, provenance)) {
                if (r.dist > max_p || r.classification == Classification::neither) continue;
                out.push_back(std::move(r));
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const CandidateReport& x, const CandidateReport& y) {
        return std::tuple(x.dist, x.meridians->first, x.meridians->second, *x.outer) <
               std::tuple(y.dist, y.meridians->first, y.meridians->second, *y.outer);
    });
    return out;
}

std::vector<std::pair<Int, Int>> heegaard_swap_pairs(Int p) {
    if (p < 2) throw std::domain_error("heegaard swap pairs need p >= 2");
    std::vector<std::pair<Int, Int>> pairs;
    for (Int q = 1; q < p; ++q) {
        if (gcd_abs(q, p) != 1) continue;
        Int inv = mod_inverse(q, p);
        if (inv > q) pairs.emplace_back(q, inv);
    }
    return pairs;
}

std::vector<CandidateReport> scan_type_iv(Int k_max) {
    if (k_max < 1) throw std::domain_error("family bound must be >= 1");
    std::vector<CandidateReport> out;
    for (Int k = 1; k <= k_max; ++k) {
        FamilyRecord rec = type_iv_family(k);
        auto emit = [&](const std::pair<LensSpace, LensSpace>& fills, const char* tag) {
            CandidateReport r;
            r.fills = fills;
            r.dist = fills.first.p();
            r.classification = classify_pair(fills.first, fills.second);
            r.family_is_non_example = true;
            r.provenance = "type-iv:k=" + std::to_string(k) + ":" + tag;
            out.push_back(std::move(r));
        };
        emit(rec.pair_plus, "plus");
        emit(rec.pair_minus, "minus");
    }
    return out;
}

}  // namespace dehn
