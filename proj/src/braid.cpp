#include "dehn/braid.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dehn {

BraidWord::BraidWord(Int strands, std::vector<BraidToken> tokens)
    : strands_(strands), tokens_(std::move(tokens)) {
    if (strands_ < 1) throw std::domain_error("braid index must be positive");
    for (const BraidToken& t : tokens_) {
        if (t.index < 2 || t.index > strands_)
            throw std::domain_error("token index W" + std::to_string(t.index) +
                                    " outside 2.." + std::to_string(strands_));
        if (t.exponent == 0) throw std::domain_error("token exponent must be nonzero");
    }
}

std::string to_string(const BraidWord& word) {
    std::ostringstream os;
    bool first = true;
    for (const BraidToken& t : word.tokens()) {
        if (!first) os << ' ';
        first = false;
        os << 'W' << t.index;
        if (t.exponent != 1) os << '^' << t.exponent;
    }
    return os.str();
}

BraidWord parse_braid(std::string_view text, Int strands) {
    std::vector<BraidToken> tokens;
    Int max_index = 0;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'W' && tok[0] != 'w'))
            throw parse_error("braid token must be W<n>[^<e>]: " + tok);
        const char* first = tok.data() + 1;
        const char* last = tok.data() + tok.size();
        Int index = 0;
        auto [ptr, ec] = std::from_chars(first, last, index);
        if (ec != std::errc() || ptr == first) throw parse_error("bad braid token: " + tok);
        Int exponent = 1;
        if (ptr != last) {
            if (*ptr != '^') throw parse_error("bad braid token: " + tok);
            ++ptr;
            auto [eptr, eec] = std::from_chars(ptr, last, exponent);
            if (eec != std::errc() || eptr != last) throw parse_error("bad braid token: " + tok);
        }
        tokens.push_back({index, exponent});
        max_index = std::max(max_index, index);
    }
    if (strands == 0) {
        if (tokens.empty())
            throw parse_error("strand count cannot be inferred from an empty word");
        strands = max_index;
    }
    return BraidWord(strands, std::move(tokens));
}

std::vector<Int> permutation_of(const BraidWord& word) {
    const Int n_strands = word.strands();
    std::vector<Int> perm(static_cast<size_t>(n_strands));
    std::iota(perm.begin(), perm.end(), Int{1});
    for (const BraidToken& t : word.tokens()) {
        // W_n^e shifts 1..n cyclically by e
        Int shift = mod_floor(t.exponent, t.index);
        for (Int& v : perm)
            if (v <= t.index) v = (v - 1 + shift) % t.index + 1;
    }
    return perm;
}

bool is_knot(const BraidWord& word) {
    std::vector<Int> perm = permutation_of(word);
    Int length = 0;
    Int cur = 1;
    do {
        cur = perm[static_cast<size_t>(cur - 1)];
        ++length;
    } while (cur != 1);
    return length == word.strands();
}

Int winding_number(const BraidWord& word) {
    return word.strands();
}

FamilyRecord type_iv_family(Int k) {
    if (k < 1) throw std::domain_error("family index must be positive");
    Int s = checked_add(checked_mul(2, k), 1);
    Int t = checked_mul(checked_mul(2, k), checked_add(k, 1));
    Int u = checked_add(checked_mul(checked_mul(2, k), k), checked_add(checked_mul(2, k), 1));

    BraidWord word(t, {{s, 1}, {t, checked_neg(s)}});
    LensSpace plus(checked_add(u, s), checked_add(s, 2));
    LensSpace minus(checked_sub(u, s), checked_sub(s, 2));
    return {k, s, t, u, std::move(word), {plus, reverse(plus)}, {minus, reverse(minus)}};
}

SolidTorusConstruction w3_w7_construction() {
    return {BraidWord(7, {{3, -1}, {7, 3}}),
            {Slope(1, 0), Slope(18, 1), Slope(19, 1)},
            7};
}

}  // namespace dehn
