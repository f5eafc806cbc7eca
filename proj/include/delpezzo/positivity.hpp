#pragma once

#include <optional>
#include <string>

#include "delpezzo/enumerate.hpp"
#include "delpezzo/lattice.hpp"

namespace delpezzo {

/// Weight eps = 1 - 1/m attached to a boundary of multiplicity m >= 2;
/// m absent means multiplicity infinity and eps = 1.
struct CampanaWeight {
    std::optional<Int> multiplicity;
    Rat epsilon;

    static CampanaWeight from_multiplicity(const Int& m) {
        if (m < 2) throw std::domain_error("Campana multiplicity must be >= 2");
        return CampanaWeight{m, Rat(1) - Rat(1, m)};
    }
    static CampanaWeight infinite() { return CampanaWeight{std::nullopt, Rat(1)}; }
};

enum class Positivity {
    AmpleAllEps,      // -(K + eps D) ample for every eps in (0,1)
    NefBigAtHalf,     // nef and big exactly at eps = 1/2, the smallest weight
    NefNotBigAtHalf,  // nef at eps = 1/2 with square zero
    NeverNef,         // not nef for any Campana weight
    Degenerate,       // mu <= 0: no irreducible boundary behaves like this
};

std::string to_string(Positivity v);

struct PositivityVerdict {
    Int mu;                                  // max of D.E over (-1)-curves E
    std::optional<Rat> nef_threshold;        // 1/mu; empty means +infinity
    Positivity verdict;
    Rat adjoint_self_intersection_at_half;   // (-(K + D/2))^2
};

/// -(K + eps*D) as an exact rational class.
RationalDivisorClass adjoint_class(const DivisorClass& d, const Rat& eps);

/// L is nef iff L.E >= 0 for every (-1)-curve E (degree <= 7).
bool is_nef(const RationalDivisorClass& l);

/// Ample is the strict version: L.E > 0 for every (-1)-curve E.
bool is_ample(const RationalDivisorClass& l);

/// For nef L, big means L^2 > 0.  Calling this on a non-nef class is a
/// contract violation.
bool is_big_given_nef(const RationalDivisorClass& l);

Int max_neg_intersection(const DivisorClass& d);

/// -(K + eps*D) is nef exactly for eps <= 1/mu; empty result means every
/// eps works (mu <= 0).
std::optional<Rat> nef_threshold(const DivisorClass& d);

PositivityVerdict classify_boundary(const DivisorClass& d);

/// Dual-cone membership: D.G >= 0 against every nef-cone generator.
bool is_pseudoeffective(const DivisorClass& d);

}  // namespace delpezzo
