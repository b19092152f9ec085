#include "dehn/slope.hpp"

#include <charconv>
#include <stdexcept>

namespace dehn {

namespace {

Int parse_component(std::string_view text) {
    Int value = 0;
    if (text.empty()) throw parse_error("empty slope component");
    // from_chars accepts a leading '-' but we must rule out lone "-",
    // "+", and embedded junk ourselves
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw overflow_error("slope component out of range: " + std::string(text));
    if (ec != std::errc() || ptr != last)
        throw parse_error("bad slope component: " + std::string(text));
    return value;
}

}  // namespace

Slope::Slope(Int a, Int b) : a_(a), b_(b) {
    if (a_ == 0 && b_ == 0) throw std::domain_error("slope 0/0 is not a curve");
    if (gcd_abs(a_, b_) != 1)
        throw std::domain_error("slope pair must be coprime: " + std::to_string(a_) + "/" +
                                std::to_string(b_));
    if (b_ < 0 || (b_ == 0 && a_ < 0)) {
        a_ = checked_neg(a_);
        b_ = checked_neg(b_);
    }
}

Slope Slope::reduced(Int a, Int b) {
    if (a == 0 && b == 0) throw std::domain_error("slope 0/0 is not a curve");
    Int g = gcd_abs(a, b);
    return Slope(a / g, b / g);
}

std::string to_string(const Slope& r) {
    return std::to_string(r.a()) + "/" + std::to_string(r.b());
}

Slope parse_slope(std::string_view text, bool allow_reduce) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        throw parse_error("slope literal must be a/b: " + std::string(text));
    Int a = parse_component(text.substr(0, slash));
    Int b = parse_component(text.substr(slash + 1));
    if (a == 0 && b == 0) throw parse_error("slope 0/0 is not a curve");
    if (gcd_abs(a, b) != 1) {
        if (!allow_reduce)
            throw parse_error("slope " + std::string(text) +
                              " is not reduced (pass the reduce flag to accept it)");
        return Slope::reduced(a, b);
    }
    return Slope(a, b);
}

Int distance(const Slope& r1, const Slope& r2) {
    return checked_abs(
        checked_sub(checked_mul(r1.a(), r2.b()), checked_mul(r1.b(), r2.a())));
}

Slope negate(const Slope& r) {
    return Slope(checked_neg(r.a()), r.b());
}

std::pair<Slope, Slope> equidistant_slopes(const Slope& r1, const Slope& r2) {
    if (r1 == r2)
        throw std::domain_error("equidistant slopes of equal classes are not a finite set");
    Slope diff = Slope::reduced(checked_sub(r1.a(), r2.a()), checked_sub(r1.b(), r2.b()));
    Slope sum = Slope::reduced(checked_add(r1.a(), r2.a()), checked_add(r1.b(), r2.b()));
    return {diff, sum};
}

UnimodularMap::UnimodularMap(Int m11, Int m12, Int m21, Int m22)
    : m11_(m11), m12_(m12), m21_(m21), m22_(m22) {
    Int d = det();
    if (d != 1 && d != -1)
        throw std::domain_error("matrix determinant must be +1 or -1, got " + std::to_string(d));
}

Int UnimodularMap::det() const {
    return checked_sub(checked_mul(m11_, m22_), checked_mul(m12_, m21_));
}

UnimodularMap UnimodularMap::inverse() const {
    Int d = det();  // adjugate over +-1
    return UnimodularMap(d * m22_, d * checked_neg(m12_), d * checked_neg(m21_), d * m11_);
}

UnimodularMap operator*(const UnimodularMap& lhs, const UnimodularMap& rhs) {
    return UnimodularMap(
        checked_add(checked_mul(lhs.m11_, rhs.m11_), checked_mul(lhs.m12_, rhs.m21_)),
        checked_add(checked_mul(lhs.m11_, rhs.m12_), checked_mul(lhs.m12_, rhs.m22_)),
        checked_add(checked_mul(lhs.m21_, rhs.m11_), checked_mul(lhs.m22_, rhs.m21_)),
        checked_add(checked_mul(lhs.m21_, rhs.m12_), checked_mul(lhs.m22_, rhs.m22_)));
}

Slope apply_map(const UnimodularMap& m, const Slope& r) {
    return Slope(checked_add(checked_mul(m.m11(), r.a()), checked_mul(m.m12(), r.b())),
                 checked_add(checked_mul(m.m21(), r.a()), checked_mul(m.m22(), r.b())));
}

UnimodularMap complete_to_unimodular(const Slope& r) {
    const Int a = r.a();
    const Int b = r.b();
    if (b == 0) return UnimodularMap(0, 1, -1, 0);  // r = 1/0 forces b* = -1

    // x*a + y*b = 1, so (a*, b*) = (y, -x) solves a*b - b*a = 1; shift by
    // multiples of (a, b) until b* lands in [0, b)
    Bezout bz = extended_gcd(a, b);
    Int bstar = mod_floor(checked_neg(bz.x), b);
    // exact by construction: a* = (1 + b*·a) / b
    Int astar = checked_add(Int{1}, checked_mul(bstar, a)) / b;
    return UnimodularMap(astar, a, bstar, b);
}

}  // namespace dehn
