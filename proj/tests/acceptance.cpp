// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its runtime budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "dehn/braid.hpp"
#include "dehn/filling.hpp"
#include "dehn/pipeline.hpp"
#include "dehn/search.hpp"

using namespace dehn;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(DEHN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "could not spawn the CLI");
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::mt19937_64 rng(0xacce97u);

Slope random_slope(Int bound) {
    std::uniform_int_distribution<Int> dist(-bound, bound);
    for (;;) {
        Int a = dist(rng);
        Int b = dist(rng);
        if (a == 0 && b == 0) continue;
        return Slope::reduced(a, b);
    }
}

UnimodularMap random_unimodular() {
    std::uniform_int_distribution<Int> shear(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    UnimodularMap m = UnimodularMap::identity();
    for (int i = 0; i < 6; ++i) {
        Int e = shear(rng);
        UnimodularMap s = coin(rng) ? UnimodularMap(1, e, 0, 1) : UnimodularMap(1, 0, e, 1);
        m = m * s;
    }
    if (coin(rng)) m = m * UnimodularMap(1, 0, 0, -1);
    return m;
}

std::vector<Slope> slopes_in_box(Int bound) {
    std::vector<Slope> out;
    out.emplace_back(1, 0);
    for (Int b = 1; b <= bound; ++b)
        for (Int a = -bound; a <= bound; ++a)
            if (gcd_abs(a, b) == 1) out.emplace_back(a, b);
    return out;
}

std::vector<Int> units(Int p) {
    if (p == 0) return {1};
    if (p == 1) return {0};
    std::vector<Int> out;
    for (Int q = 1; q < p; ++q)
        if (gcd_abs(p, q) == 1) out.push_back(q);
    return out;
}

// --- criterion 1: reference example end to end --------------------------

void criterion_reference_example() {
    SolidTorusConstruction cons = w3_w7_construction();
    require(winding_number(cons.word) == 7, "winding number is not 7");
    require(is_knot(cons.word), "reference braid does not close to a knot");
    require(cons.special_slopes ==
                std::vector<Slope>{Slope(1, 0), Slope(18, 1), Slope(19, 1)},
            "special slopes differ");

    Slope m1 = gordon_meridian(Slope(18, 1), 7).meridian;
    Slope m2 = gordon_meridian(Slope(19, 1), 7).meridian;
    require(m1 == Slope(18, 49) && m2 == Slope(19, 49), "meridians differ");
    require(gordon_meridian(Slope(1, 0), 7).meridian == Slope(1, 0),
            "1/0 meridian is not fixed");

    auto [outer1, outer2] = equidistant_slopes(m1, m2);
    require(outer1 == Slope(1, 0) && outer2 == Slope(37, 98), "equidistant outers differ");

    LensSpace f1 = lens_from_construction(m1, outer1);
    LensSpace f2 = lens_from_construction(m2, outer1);
    require(f1.p() == 49 && f2.p() == 49, "fill order is not 49");
    require(classify_pair(f1, f2) == Classification::reflectively,
            "pair is not reflectively cosmetic");
    require(!is_oriented_homeo(f1, f2), "pair must not be orientation-preservingly homeo");
    require(is_homeo(f1, LensSpace(49, 18)) && is_homeo(f2, LensSpace(49, 18)),
            "fills are not L(49,18) up to orientation");
    require(mul_mod(f1.q(), f2.q(), 49) == 48, "q1*q2 != -1 mod 49");

    CliResult cli = run_cli("verify paper-example");
    require(cli.exit_code == 0, "CLI verify exited " + std::to_string(cli.exit_code));
    for (const char* needle : {"distance=49", "pair=reflective", "witness 30*31=-1 mod 49"})
        require(cli.out.find(needle) != std::string::npos,
                std::string("CLI verify output lacks \"") + needle + "\"");
}

// --- criterion 2: the 37/98 outer ----------------------------------------

void criterion_other_outer() {
    LensSpace f1 = lens_from_construction(Slope(18, 49), Slope(37, 98));
    LensSpace f2 = lens_from_construction(Slope(19, 49), Slope(37, 98));

    // unoriented types match {L(49,32), L(49,20)} exactly
    require(f1 == LensSpace(49, 32), "first fill is not L(49,32)");
    require(is_homeo(f2, LensSpace(49, 20)), "second fill is not L(49,20) up to orientation");
    require(f2 == LensSpace(49, 20) || f2 == LensSpace(49, 29),
            "second fill residue is not +-20 mod 49");

    require(!is_homeo(f1, f2), "pair must not be homeomorphic");
    require(!is_oriented_homeo(f1, f2), "pair must not be oriented-homeomorphic");
    require(is_homotopy_equivalent(f1, f2), "pair must be homotopy equivalent");

    // witness: 12^2 = 144 = -3 = -(32*20) mod 49
    require(mul_mod(32, 20, 49) == 3, "32*20 != 3 mod 49");
    require(mul_mod(12, 12, 49) == 49 - 3, "12^2 != -3 mod 49");

    // orientation-preserving refinement, convention-robust form
    require(is_homotopy_equivalent(f1, f2, true) ||
                is_homotopy_equivalent(f1, reverse(f2), true),
            "no orientation of the pair is oriented-homotopy-equivalent");
}

// --- criterion 3: type IV family to k = 10^4 ------------------------------

void criterion_family() {
    for (Int k = 1; k <= 10000; ++k) {
        FamilyRecord r = type_iv_family(k);
        require(r.s * r.s + r.t * r.t == r.u * r.u, "not a Pythagorean triple at k=" +
                                                        std::to_string(k));
        require(r.u + r.s == 2 * (k + 1) * (k + 1), "u+s != 2(k+1)^2 at k=" + std::to_string(k));
        require(r.u - r.s == 2 * k * k, "u-s != 2k^2 at k=" + std::to_string(k));
        require(r.pair_plus.first == LensSpace(2 * (k + 1) * (k + 1), 2 * k + 3),
                "plus pair differs at k=" + std::to_string(k));
        require(r.pair_plus.second == reverse(r.pair_plus.first),
                "plus pair is not a reversed copy at k=" + std::to_string(k));
        require(r.pair_minus.first == LensSpace(2 * k * k, 2 * k - 1),
                "minus pair differs at k=" + std::to_string(k));
        require(r.pair_minus.second == reverse(r.pair_minus.first),
                "minus pair is not a reversed copy at k=" + std::to_string(k));
    }
}

// --- criterion 4: Heegaard swap pairs -------------------------------------

void criterion_heegaard() {
    auto p17 = heegaard_swap_pairs(17);
    bool has29 = false;
    for (auto [q, qp] : p17) has29 = has29 || (q == 2 && qp == 9);
    require(has29, "{2,9} missing from p=17");

    for (Int p = 2; p <= 500; ++p) {
        auto pairs = heegaard_swap_pairs(p);
        std::set<Int> in_pairs;
        for (auto [q, qp] : pairs) {
            require(0 < q && q < qp && qp < p, "pair out of range at p=" + std::to_string(p));
            require(mul_mod(q, qp, p) == 1, "pair not inverse at p=" + std::to_string(p));
            require(in_pairs.insert(q).second && in_pairs.insert(qp).second,
                    "unit repeated across pairs at p=" + std::to_string(p));
        }
        for (Int q = 1; q < p; ++q) {
            if (gcd_abs(q, p) != 1) continue;
            bool self_inverse = mul_mod(q, q, p) == 1;
            bool paired = in_pairs.count(q) > 0;
            require(self_inverse != paired,
                    "unit " + std::to_string(q) + " not partitioned at p=" + std::to_string(p));
        }
    }
}

// --- criterion 5: oracle property suites ----------------------------------

void criterion_properties() {
    // (a) fill order equals slope distance
    for (int i = 0; i < 10000; ++i) {
        Slope r1 = random_slope(1000000);
        Slope r2 = random_slope(1000000);
        require(fill_two_sided(r1, r2).p() == distance(r1, r2),
                "fill order != distance for " + to_string(r1) + ", " + to_string(r2));
    }
    auto box12 = slopes_in_box(12);
    for (const Slope& r1 : box12)
        for (const Slope& r2 : box12)
            require(fill_two_sided(r1, r2).p() == distance(r1, r2),
                    "fill order != distance for " + to_string(r1) + ", " + to_string(r2));

    // (b) completion-choice independence for k in {-3..3}
    auto box8 = slopes_in_box(8);
    auto check_completions = [](const Slope& r1, const Slope& r2) {
        UnimodularMap m = complete_to_unimodular(r1);
        LensSpace base = fill_two_sided(r1, r2);
        for (Int k = -3; k <= 3; ++k) {
            LensSpace alt =
                fill_two_sided(r1, r2, m.m11() + k * r1.a(), m.m21() + k * r1.b());
            if (alt != base)
                throw Failure("completion choice changed the fill for " + to_string(r1) + ", " +
                              to_string(r2));
        }
    };
    for (const Slope& r1 : box8)
        for (const Slope& r2 : box8) check_completions(r1, r2);
    for (int i = 0; i < 1000; ++i) check_completions(random_slope(100000), random_slope(100000));

    // (c) unimodular equivariance, oriented/reversed by determinant sign
    int plus_seen = 0, minus_seen = 0;
    for (int i = 0; i < 1000; ++i) {
        UnimodularMap m = random_unimodular();
        Slope r1 = random_slope(10000);
        Slope r2 = random_slope(10000);
        LensSpace base = fill_two_sided(r1, r2);
        LensSpace moved = fill_two_sided(apply_map(m, r1), apply_map(m, r2));
        if (m.det() == 1) {
            ++plus_seen;
            require(is_oriented_homeo(moved, base), "det +1 map changed the oriented type");
        } else {
            ++minus_seen;
            require(is_oriented_homeo(moved, reverse(base)),
                    "det -1 map is not the reversed type");
        }
    }
    require(plus_seen > 100 && minus_seen > 100, "determinant sample is lopsided");

    // (d) homeomorphism predicates are equivalence relations for p <= 60
    for (Int p = 0; p <= 60; ++p) {
        std::vector<LensSpace> all;
        for (Int q : units(p)) all.emplace_back(p, q);
        const size_t n = all.size();
        std::vector<std::vector<bool>> oh(n, std::vector<bool>(n));
        std::vector<std::vector<bool>> uh(n, std::vector<bool>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                oh[i][j] = is_oriented_homeo(all[i], all[j]);
                uh[i][j] = is_homeo(all[i], all[j]);
            }
        for (size_t i = 0; i < n; ++i) {
            require(oh[i][i] && uh[i][i], "not reflexive at p=" + std::to_string(p));
            for (size_t j = 0; j < n; ++j) {
                require(oh[i][j] == oh[j][i] && uh[i][j] == uh[j][i],
                        "not symmetric at p=" + std::to_string(p));
                if (is_oriented_homeo(all[i], all[j]))
                    require(is_homotopy_equivalent(all[i], all[j], true),
                            "oriented homeo without oriented homotopy at p=" + std::to_string(p));
                for (size_t k = 0; k < n; ++k) {
                    if (oh[i][j] && oh[j][k])
                        require(oh[i][k], "oriented homeo not transitive at p=" +
                                              std::to_string(p));
                    if (uh[i][j] && uh[j][k])
                        require(uh[i][k], "homeo not transitive at p=" + std::to_string(p));
                }
            }
        }
    }

    // (e) L against its reverse is reflective (or both) for p <= 60
    for (Int p = 0; p <= 60; ++p)
        for (Int q : units(p)) {
            LensSpace l(p, q);
            Classification c = classify_pair(l, reverse(l));
            require(c == Classification::reflectively || c == Classification::both,
                    "reverse pair not reflective at " + to_string(l));
        }
}

// --- criterion 6: distinct distances from the meridian ---------------------

void criterion_meridian_distances() {
    Int d1 = distance(Slope(9, 1), Slope(1, 0));
    Int d2 = distance(Slope(9, 2), Slope(1, 0));
    require(d1 == 1, "distance(9/1, 1/0) != 1");
    require(d2 == 2, "distance(9/2, 1/0) != 2");
    require(d1 != d2, "the two surgery slopes are not separated from the meridian");
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "reference example end-to-end (verify paper-example)", 1.0,
         criterion_reference_example},
        {2, "outer 37/98 fill pair: homotopy equivalent, not homeomorphic", 1.0,
         criterion_other_outer},
        {3, "type IV family identities and lens pairs for k <= 10^4", 5.0, criterion_family},
        {4, "Heegaard swap pairs and unit partition for p <= 500", 5.0, criterion_heegaard},
        {5, "oracle property suites (fill/distance, completions, equivariance, relations)", 30.0,
         criterion_properties},
        {6, "Mathieu slopes 9/1 and 9/2 lie at distances 1 and 2 from the meridian", 30.0,
         criterion_meridian_distances},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = true;
        try {
            c.body();
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && elapsed > c.budget_seconds) {
            pass = false;
            detail = "over budget: " + std::to_string(elapsed) + "s > " +
                     std::to_string(c.budget_seconds) + "s";
        }
        failures += pass ? 0 : 1;
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title,
                    elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
