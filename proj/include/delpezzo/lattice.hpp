#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace delpezzo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Degree-d del Pezzo surface, realised as the blow-up of the plane at
/// 9-d general points.  Picard rank is 10-d; the intersection form on the
/// standard basis (H, E_1, ..., E_{9-d}) is diag(1, -1, ..., -1).
class Surface {
public:
    explicit Surface(int degree) : degree_(degree) {
        if (degree < 1 || degree > 7)
            throw std::domain_error("unsupported degree " + std::to_string(degree) +
                                    ": only del Pezzo surfaces of degree 1..7 are handled");
    }

    int degree() const { return degree_; }
    int blowup_points() const { return 9 - degree_; }
    int rank() const { return 10 - degree_; }

    friend bool operator==(const Surface& x, const Surface& y) { return x.degree_ == y.degree_; }
    friend bool operator!=(const Surface& x, const Surface& y) { return !(x == y); }

private:
    int degree_;
};

/// Integral divisor class a*H - sum_i b_i E_i.  The stored b is the
/// multiplicity vector, so the exceptional class E_i itself carries
/// b_i = -1 and everything matches the enumeration equations
/// 3a - sum b_i = m, a^2 - sum b_i^2 = n with no sign juggling.
struct DivisorClass {
    Surface surface;
    Int a;
    std::vector<Int> b;

    DivisorClass(Surface s, Int a_, std::vector<Int> b_)
        : surface(s), a(std::move(a_)), b(std::move(b_)) {
        if (static_cast<int>(b.size()) != surface.blowup_points())
            throw std::invalid_argument("divisor class needs exactly " +
                                        std::to_string(surface.blowup_points()) +
                                        " blow-up coefficients");
    }

    static DivisorClass zero(Surface s) {
        return DivisorClass(s, 0, std::vector<Int>(s.blowup_points(), 0));
    }
    static DivisorClass hyperplane(Surface s) {
        return DivisorClass(s, 1, std::vector<Int>(s.blowup_points(), 0));
    }
    /// The class of the i-th exceptional curve (0-based index).
    static DivisorClass exceptional(Surface s, int i) {
        std::vector<Int> b(s.blowup_points(), 0);
        b.at(i) = -1;
        return DivisorClass(s, 0, std::move(b));
    }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
    friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
    friend DivisorClass operator*(const Int& k, DivisorClass x) {
        x.a *= k;
        for (auto& c : x.b) c *= k;
        return x;
    }
    friend DivisorClass operator-(DivisorClass x) {
        x.a = -x.a;
        for (auto& c : x.b) c = -c;
        return x;
    }

    bool is_zero() const;

    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.surface == y.surface && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const DivisorClass& x, const DivisorClass& y) { return !(x == y); }
    /// Lexicographic by (a, b); used for deterministic set ordering.
    friend bool operator<(const DivisorClass& x, const DivisorClass& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

/// Same coordinates with exact rational entries; carries adjoint classes
/// -(K + eps*D) and Zariski positive parts.  No floating point anywhere.
struct RationalDivisorClass {
    Surface surface;
    Rat a;
    std::vector<Rat> b;

    RationalDivisorClass(Surface s, Rat a_, std::vector<Rat> b_)
        : surface(s), a(std::move(a_)), b(std::move(b_)) {
        if (static_cast<int>(b.size()) != surface.blowup_points())
            throw std::invalid_argument("divisor class needs exactly " +
                                        std::to_string(surface.blowup_points()) +
                                        " blow-up coefficients");
    }
    RationalDivisorClass(const DivisorClass& c)  // NOLINT: implicit widening is intended
        : surface(c.surface), a(c.a), b(c.b.begin(), c.b.end()) {}

    static RationalDivisorClass zero(Surface s) {
        return RationalDivisorClass(s, Rat(0), std::vector<Rat>(s.blowup_points(), Rat(0)));
    }

    RationalDivisorClass& operator+=(const RationalDivisorClass& o);
    RationalDivisorClass& operator-=(const RationalDivisorClass& o);
    friend RationalDivisorClass operator+(RationalDivisorClass x, const RationalDivisorClass& y) { return x += y; }
    friend RationalDivisorClass operator-(RationalDivisorClass x, const RationalDivisorClass& y) { return x -= y; }
    friend RationalDivisorClass operator*(const Rat& k, RationalDivisorClass x) {
        x.a *= k;
        for (auto& c : x.b) c *= k;
        return x;
    }

    bool is_zero() const;
    /// Integral coordinates, if all denominators are 1.
    std::optional<DivisorClass> to_integral() const;

    friend bool operator==(const RationalDivisorClass& x, const RationalDivisorClass& y) {
        return x.surface == y.surface && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const RationalDivisorClass& x, const RationalDivisorClass& y) { return !(x == y); }
};

/// Intersection pairing x.a*y.a - sum_i x.b_i*y.b_i.
Int intersect(const DivisorClass& x, const DivisorClass& y);
Rat intersect(const RationalDivisorClass& x, const RationalDivisorClass& y);

inline Int self_intersection(const DivisorClass& c) { return intersect(c, c); }
inline Rat self_intersection(const RationalDivisorClass& c) { return intersect(c, c); }

/// K = -3H + E_1 + ... + E_{9-d}, i.e. a = -3 and every b_i = -1.
DivisorClass canonical_class(Surface s);

/// m = -K.C = 3a - sum b_i.
Int anticanonical_degree(const DivisorClass& c);

/// p_a = 1 + (C^2 + K.C)/2, returned exactly; half-integers are a valid
/// result and are used by the enumeration as a parity filter.
Rat arithmetic_genus(const DivisorClass& c);

/// Riemann-Roch: chi(D) = 1 + (D^2 - D.K)/2 for integral D.
Int euler_characteristic(const DivisorClass& d);

/// Returns k >= 1 with C = -k*K when C is a multiple of the anticanonical
/// class, nothing otherwise.
std::optional<Int> proportional_to_canonical(const DivisorClass& c);

namespace detail {
inline void require_same_surface(const Surface& x, const Surface& y) {
    if (!(x == y))
        throw std::invalid_argument("divisor classes live on different surfaces");
}
}  // namespace detail

}  // namespace delpezzo
