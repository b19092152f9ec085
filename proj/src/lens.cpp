#include "dehn/lens.hpp"

#include <charconv>
#include <stdexcept>

namespace dehn {

namespace {

bool congruent(Int x, Int y, Int p) {
    return p == 0 ? x == y : mod_floor(x - y, p) == 0;
}

}  // namespace

LensSpace::LensSpace(Int p, Int q) : p_(p), q_(q) {
    if (p_ < 0) {
        p_ = checked_neg(p_);
        q_ = checked_neg(q_);
    }
    if (gcd_abs(p_, q_) != 1)
        throw std::domain_error("lens parameters must be coprime: (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
    q_ = p_ == 0 ? 1 : mod_floor(q_, p_);
}

std::string to_string(const LensSpace& lens) {
    return "L(" + std::to_string(lens.p()) + "," + std::to_string(lens.q()) + ")";
}

LensSpace parse_lens(std::string_view text) {
    auto fail = [&] { throw parse_error("lens literal must be L(P,Q): " + std::string(text)); };
    size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c) fail();
        ++pos;
    };
    auto number = [&] {
        skip_spaces();
        Int value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range)
            throw overflow_error("lens parameter out of range: " + std::string(text));
        if (ec != std::errc()) fail();
        pos = static_cast<size_t>(ptr - text.data());
        skip_spaces();
        return value;
    };

    expect('L');
    expect('(');
    Int p = number();
    expect(',');
    Int q = number();
    expect(')');
    if (pos != text.size()) fail();
    return LensSpace(p, q);
}

LensSpace reverse(const LensSpace& lens) {
    if (lens.p() == 0) return lens;
    return LensSpace(lens.p(), lens.p() - lens.q());
}

bool is_oriented_homeo(const LensSpace& lhs, const LensSpace& rhs) {
    if (lhs.p() != rhs.p()) return false;
    Int p = lhs.p();
    if (p <= 1) return true;
    return lhs.q() == rhs.q() || mul_mod(lhs.q(), rhs.q(), p) == 1;
}

bool is_homeo(const LensSpace& lhs, const LensSpace& rhs) {
    if (lhs.p() != rhs.p()) return false;
    Int p = lhs.p();
    if (p <= 1) return true;
    Int q1 = lhs.q();
    Int q2 = rhs.q();
    Int inv = mod_inverse(q1, p);
    return q2 == q1 || congruent(q2, p - q1, p) || q2 == inv || congruent(q2, p - inv, p);
}

bool is_amphicheiral(const LensSpace& lens) {
    return is_oriented_homeo(lens, reverse(lens));
}

bool is_homotopy_equivalent(const LensSpace& lhs, const LensSpace& rhs, bool oriented) {
    if (lhs.p() != rhs.p()) return false;
    Int p = lhs.p();
    if (p == 0) return true;
    Int target = mul_mod(lhs.q(), rhs.q(), p);
    for (Int n = 0; n < p; ++n) {
        Int square = mul_mod(n, n, p);
        if (square == target) return true;
        if (!oriented && (p - square) % p == target) return true;
    }
    return false;
}

Int mod_inverse(Int q, Int p) {
    if (p < 1) throw std::domain_error("modulus must be >= 1");
    if (p == 1) return 0;
    Int qr = mod_floor(q, p);
    Bezout bz = extended_gcd(qr, p);
    if (bz.g != 1)
        throw std::domain_error(std::to_string(q) + " is not a unit mod " + std::to_string(p));
    return mod_floor(bz.x, p);
}

}  // namespace dehn
