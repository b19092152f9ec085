#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dehn/braid.hpp"
#include "dehn/filling.hpp"
#include "dehn/pipeline.hpp"
#include "dehn/search.hpp"

namespace {

using dehn::Int;
using ojson = nlohmann::ordered_json;

std::pair<Int, Int> parse_k_range(const std::string& text) {
    auto parse_one = [&](const std::string& part) {
        try {
            size_t used = 0;
            Int v = std::stoll(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            return v;
        } catch (const std::out_of_range&) {
            throw dehn::overflow_error("range bound out of range: " + part);
        } catch (const std::invalid_argument&) {
            throw dehn::parse_error("bad range bound: " + part);
        }
    };
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        Int k = parse_one(text);
        return {k, k};
    }
    Int lo = parse_one(text.substr(0, dots));
    Int hi = parse_one(text.substr(dots + 2));
    if (lo > hi) throw dehn::parse_error("empty range: " + text);
    return {lo, hi};
}

std::string cycle_notation(const std::vector<Int>& perm) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == static_cast<Int>(i + 1)) continue;
        out += '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            first = false;
            out += std::to_string(j + 1);
            j = static_cast<size_t>(perm[j] - 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

ojson family_json(const dehn::FamilyRecord& rec) {
    ojson j;
    j["k"] = rec.k;
    j["s"] = rec.s;
    j["t"] = rec.t;
    j["u"] = rec.u;
    j["word"] = to_string(rec.word);
    j["strands"] = rec.word.strands();
    j["plus"] = {to_string(rec.pair_plus.first), to_string(rec.pair_plus.second)};
    j["minus"] = {to_string(rec.pair_minus.first), to_string(rec.pair_minus.second)};
    j["family_is_non_example"] = rec.family_is_non_example;
    return j;
}

void print_report_text(const dehn::CandidateReport& r) {
    std::cout << "dist=" << r.dist;
    if (r.meridians)
        std::cout << " meridians=" << to_string(r.meridians->first) << ','
                  << to_string(r.meridians->second);
    if (r.outer) std::cout << " outer=" << to_string(*r.outer);
    std::cout << " fills=" << to_string(r.fills.first) << ',' << to_string(r.fills.second)
              << " classification=" << to_string(r.classification) << " [" << r.provenance
              << "]\n";
}

void print_reports(const std::vector<dehn::CandidateReport>& reports, bool as_json) {
    for (const auto& r : reports) {
        if (as_json)
            std::cout << to_json_line(r) << '\n';
        else
            print_report_text(r);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dehn-filling, lens-space, and cosmetic-surgery calculator"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- slope ----
    auto* slope = app.add_subcommand("slope", "slope arithmetic on the boundary torus");
    slope->require_subcommand(1);
    static std::string s_a, s_b;
    static bool s_reduce = false, s_json = false;

    auto* sdist = slope->add_subcommand("distance", "geometric intersection number");
    sdist->add_option("A", s_a, "slope literal a/b")->required();
    sdist->add_option("B", s_b, "slope literal a/b")->required();
    sdist->add_flag("--reduce", s_reduce, "accept non-reduced literals");
    sdist->add_flag("--json", s_json, "machine-readable output");
    sdist->callback([&] {
        Int d = distance(dehn::parse_slope(s_a, s_reduce), dehn::parse_slope(s_b, s_reduce));
        if (s_json)
            std::cout << ojson{{"distance", d}}.dump() << '\n';
        else
            std::cout << d << '\n';
    });

    auto* sequi = slope->add_subcommand("equidistant", "the two slopes equidistant from A and B");
    sequi->add_option("A", s_a, "slope literal a/b")->required();
    sequi->add_option("B", s_b, "slope literal a/b")->required();
    sequi->add_flag("--reduce", s_reduce, "accept non-reduced literals");
    sequi->add_flag("--json", s_json, "machine-readable output");
    sequi->callback([&] {
        auto [diff, sum] =
            equidistant_slopes(dehn::parse_slope(s_a, s_reduce), dehn::parse_slope(s_b, s_reduce));
        if (s_json)
            std::cout << ojson{{"difference", to_string(diff)}, {"sum", to_string(sum)}}.dump()
                      << '\n';
        else
            std::cout << to_string(diff) << ' ' << to_string(sum) << '\n';
    });

    auto* sneg = slope->add_subcommand("negate", "the class of -a/b");
    sneg->add_option("A", s_a, "slope literal a/b")->required();
    sneg->add_flag("--reduce", s_reduce, "accept non-reduced literals");
    sneg->add_flag("--json", s_json, "machine-readable output");
    sneg->callback([&] {
        dehn::Slope r = negate(dehn::parse_slope(s_a, s_reduce));
        if (s_json)
            std::cout << ojson{{"slope", to_string(r)}}.dump() << '\n';
        else
            std::cout << to_string(r) << '\n';
    });

    // ---- fill ----
    auto* fill = app.add_subcommand("fill", "two-sided Dehn filling of T^2 x [0,1]");
    static std::string f_a, f_b;
    static bool f_reduce = false, f_json = false;
    fill->add_option("R1", f_a, "slope literal a/b")->required();
    fill->add_option("R2", f_b, "slope literal a/b")->required();
    fill->add_flag("--reduce", f_reduce, "accept non-reduced literals");
    fill->add_flag("--json", f_json, "machine-readable output");
    fill->callback([&] {
        dehn::LensSpace lens =
            fill_two_sided(dehn::parse_slope(f_a, f_reduce), dehn::parse_slope(f_b, f_reduce));
        if (f_json)
            std::cout << ojson{{"lens", to_string(lens)}}.dump() << '\n';
        else
            std::cout << to_string(lens) << '\n';
    });

    // ---- meridian ----
    auto* meridian =
        app.add_subcommand("meridian", "meridian p/(k^2 q) of the refilled solid torus");
    static std::string m_s;
    static Int m_winding = 0;
    static bool m_reduce = false, m_json = false;
    meridian->add_option("SURGERY", m_s, "surgery slope p/q")->required();
    meridian->add_option("--winding", m_winding, "winding number k >= 1")->required();
    meridian->add_flag("--reduce", m_reduce, "accept non-reduced literals");
    meridian->add_flag("--json", m_json, "machine-readable output");
    meridian->callback([&] {
        dehn::GordonMeridian g =
            gordon_meridian(dehn::parse_slope(m_s, m_reduce), m_winding);
        if (m_json) {
            std::cout << ojson{{"meridian", to_string(g.meridian)}, {"reduction", g.reduction}}
                             .dump()
                      << '\n';
        } else {
            std::cout << to_string(g.meridian) << '\n';
            if (g.reduction > 1)
                std::cerr << "note: slope pair reduced by gcd " << g.reduction << '\n';
        }
    });

    // ---- lens ----
    auto* lens = app.add_subcommand("lens", "oriented lens space classification");
    lens->require_subcommand(1);
    static std::string l_1, l_2;
    static bool l_oriented = false, l_json = false;

    auto* lclass = lens->add_subcommand("classify", "truly/reflectively/both/neither");
    lclass->add_option("L1", l_1, "lens literal L(p,q)")->required();
    lclass->add_option("L2", l_2, "lens literal L(p,q)")->required();
    lclass->add_flag("--json", l_json, "machine-readable output");
    lclass->callback([&] {
        auto c = classify_pair(dehn::parse_lens(l_1), dehn::parse_lens(l_2));
        if (l_json)
            std::cout << ojson{{"classification", to_string(c)}}.dump() << '\n';
        else
            std::cout << to_string(c) << '\n';
    });

    auto* lamphi = lens->add_subcommand("amphicheiral",
                                        "admits an orientation-reversing self-homeomorphism");
    lamphi->add_option("L", l_1, "lens literal L(p,q)")->required();
    lamphi->add_flag("--json", l_json, "machine-readable output");
    lamphi->callback([&] {
        bool a = is_amphicheiral(dehn::parse_lens(l_1));
        if (l_json)
            std::cout << ojson{{"amphicheiral", a}}.dump() << '\n';
        else
            std::cout << (a ? "true" : "false") << '\n';
    });

    auto* lhtpy = lens->add_subcommand("homotopy", "homotopy equivalence (qq' = +-n^2 mod p)");
    lhtpy->add_option("L1", l_1, "lens literal L(p,q)")->required();
    lhtpy->add_option("L2", l_2, "lens literal L(p,q)")->required();
    lhtpy->add_flag("--oriented", l_oriented, "orientation-preserving only (+n^2)");
    lhtpy->add_flag("--json", l_json, "machine-readable output");
    lhtpy->callback([&] {
        bool h = is_homotopy_equivalent(dehn::parse_lens(l_1), dehn::parse_lens(l_2), l_oriented);
        if (l_json)
            std::cout << ojson{{"homotopy_equivalent", h}, {"oriented", l_oriented}}.dump()
                      << '\n';
        else
            std::cout << (h ? "true" : "false") << '\n';
    });

    // ---- braid ----
    auto* braid = app.add_subcommand("braid", "braid words in the solid torus");
    braid->require_subcommand(1);
    static std::string b_word;
    static Int b_strands = 0;
    static bool b_json = false;

    auto add_braid_common = [&](CLI::App* cmd) {
        cmd->add_option("WORD", b_word, "braid word, e.g. \"W3^-1 W7^3\"")->required();
        cmd->add_option("--strands", b_strands, "strand count (default: largest token index)");
        cmd->add_flag("--json", b_json, "machine-readable output");
    };

    auto* bperm = braid->add_subcommand("perm", "image in the symmetric group");
    add_braid_common(bperm);
    bperm->callback([&] {
        auto perm = permutation_of(dehn::parse_braid(b_word, b_strands));
        if (b_json)
            std::cout << ojson{{"permutation", perm}, {"cycles", cycle_notation(perm)}}.dump()
                      << '\n';
        else
            std::cout << cycle_notation(perm) << '\n';
    });

    auto* bknot = braid->add_subcommand("knot", "whether the closure is a single circle");
    add_braid_common(bknot);
    bknot->callback([&] {
        bool k = is_knot(dehn::parse_braid(b_word, b_strands));
        if (b_json)
            std::cout << ojson{{"knot", k}}.dump() << '\n';
        else
            std::cout << (k ? "true" : "false") << '\n';
    });

    auto* bwind = braid->add_subcommand("winding", "homology class in the solid torus");
    add_braid_common(bwind);
    bwind->callback([&] {
        Int w = winding_number(dehn::parse_braid(b_word, b_strands));
        if (b_json)
            std::cout << ojson{{"winding", w}}.dump() << '\n';
        else
            std::cout << w << '\n';
    });

    // ---- family ----
    auto* family = app.add_subcommand("family", "braid families with cosmetic fill pairs");
    family->require_subcommand(1);
    static std::string fam_range;
    static bool fam_json = false;
    auto* ftype4 = family->add_subcommand("type-iv", "Pythagorean family on (2k+1, 2k(k+1))");
    ftype4->add_option("--k", fam_range, "index k or range A..B")->required();
    ftype4->add_flag("--json", fam_json, "machine-readable output");
    ftype4->callback([&] {
        auto [lo, hi] = parse_k_range(fam_range);
        for (Int k = lo; k <= hi; ++k) {
            dehn::FamilyRecord rec = dehn::type_iv_family(k);
            if (fam_json) {
                std::cout << family_json(rec).dump() << '\n';
            } else {
                std::cout << "k=" << rec.k << " s=" << rec.s << " t=" << rec.t << " u=" << rec.u
                          << " plus=" << to_string(rec.pair_plus.first) << ','
                          << to_string(rec.pair_plus.second)
                          << " minus=" << to_string(rec.pair_minus.first) << ','
                          << to_string(rec.pair_minus.second) << " word=" << to_string(rec.word)
                          << '\n';
            }
        }
    });

    // ---- search ----
    auto* search = app.add_subcommand("search", "enumerate cosmetic filling candidates");
    search->require_subcommand(1);
    static Int sm_max_p = 0, sm_max_den = 0, st_k_max = 0;
    static bool se_json = false;

    auto* smeridians = search->add_subcommand(
        "meridians", "scan meridian pairs; keep non-trivially classified reports");
    smeridians->add_option("--max-p", sm_max_p, "bound on meridian numerators and fill order")
        ->required();
    smeridians->add_option("--max-den", sm_max_den, "bound on meridian denominators")->required();
    smeridians->add_flag("--json", se_json, "JSON lines output");
    smeridians->callback([&] { print_reports(dehn::scan_meridians(sm_max_p, sm_max_den), se_json); });

    auto* stype4 = search->add_subcommand("type-iv", "reports for the type IV family pairs");
    stype4->add_option("--k-max", st_k_max, "largest family index")->required();
    stype4->add_flag("--json", se_json, "JSON lines output");
    stype4->callback([&] { print_reports(dehn::scan_type_iv(st_k_max), se_json); });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "recompute and check built-in examples");
    static std::string v_target;
    static bool v_json = false;
    verify->add_option("TARGET", v_target, "what to verify (paper-example)")->required();
    verify->add_flag("--json", v_json, "machine-readable output");
    verify->callback([&] {
        if (v_target != "paper-example")
            throw dehn::parse_error("unknown verify target: " + v_target);
        auto lines = dehn::verify_reference_example();
        bool all = true;
        for (const auto& line : lines) all = all && line.pass;
        if (v_json) {
            ojson checks = ojson::array();
            for (const auto& line : lines)
                checks.push_back(ojson{{"label", line.label}, {"pass", line.pass}});
            std::cout << ojson{{"pass", all}, {"checks", checks}}.dump() << '\n';
        } else {
            for (const auto& line : lines)
                std::cout << (line.pass ? "ok " : "FAIL ") << line.label << '\n';
            std::cout << (all ? "PASS" : "FAIL") << " verify paper-example (" << lines.size()
                      << " checks)" << '\n';
        }
        if (!all) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dehn::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dehn::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
