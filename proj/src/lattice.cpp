#include "delpezzo/lattice.hpp"

namespace delpezzo {

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    detail::require_same_surface(surface, o.surface);
    a += o.a;
    for (size_t i = 0; i < b.size(); ++i) b[i] += o.b[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    detail::require_same_surface(surface, o.surface);
    a -= o.a;
    for (size_t i = 0; i < b.size(); ++i) b[i] -= o.b[i];
    return *this;
}

bool DivisorClass::is_zero() const {
    if (a != 0) return false;
    for (const auto& c : b)
        if (c != 0) return false;
    return true;
}

RationalDivisorClass& RationalDivisorClass::operator+=(const RationalDivisorClass& o) {
    detail::require_same_surface(surface, o.surface);
    a += o.a;
    for (size_t i = 0; i < b.size(); ++i) b[i] += o.b[i];
    return *this;
}

RationalDivisorClass& RationalDivisorClass::operator-=(const RationalDivisorClass& o) {
    detail::require_same_surface(surface, o.surface);
    a -= o.a;
    for (size_t i = 0; i < b.size(); ++i) b[i] -= o.b[i];
    return *this;
}

bool RationalDivisorClass::is_zero() const {
    if (a != 0) return false;
    for (const auto& c : b)
        if (c != 0) return false;
    return true;
}

std::optional<DivisorClass> RationalDivisorClass::to_integral() const {
    if (denominator(a) != 1) return std::nullopt;
    std::vector<Int> ib;
    ib.reserve(b.size());
    for (const auto& c : b) {
        if (denominator(c) != 1) return std::nullopt;
        ib.push_back(numerator(c));
    }
    return DivisorClass(surface, numerator(a), std::move(ib));
}

Int intersect(const DivisorClass& x, const DivisorClass& y) {
    detail::require_same_surface(x.surface, y.surface);
    Int r = x.a * y.a;
    for (size_t i = 0; i < x.b.size(); ++i) r -= x.b[i] * y.b[i];
    return r;
}

Rat intersect(const RationalDivisorClass& x, const RationalDivisorClass& y) {
    detail::require_same_surface(x.surface, y.surface);
    Rat r = x.a * y.a;
    for (size_t i = 0; i < x.b.size(); ++i) r -= x.b[i] * y.b[i];
    return r;
}

DivisorClass canonical_class(Surface s) {
    return DivisorClass(s, -3, std::vector<Int>(s.blowup_points(), -1));
}

Int anticanonical_degree(const DivisorClass& c) {
    Int r = 3 * c.a;
    for (const auto& bi : c.b) r -= bi;
    return r;
}

Rat arithmetic_genus(const DivisorClass& c) {
    Int k_dot = intersect(canonical_class(c.surface), c);
    return Rat(1) + Rat(self_intersection(c) + k_dot, 2);
}

Int euler_characteristic(const DivisorClass& d) {
    Int k_dot = intersect(d, canonical_class(d.surface));
    Int twice = self_intersection(d) - k_dot;
    // D^2 - D.K is even for every integral D, so this division is exact.
    return 1 + twice / 2;
}

std::optional<Int> proportional_to_canonical(const DivisorClass& c) {
    if (c.a <= 0 || c.a % 3 != 0) return std::nullopt;
    Int k = c.a / 3;
    for (const auto& bi : c.b)
        if (bi != k) return std::nullopt;
    return k;
}

}  // namespace delpezzo
