#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "delpezzo/lattice.hpp"

namespace delpezzo {

/// Query for all integral classes with anticanonical degree m and
/// self-intersection n.  Infeasible queries (m^2 < d*n fails Hodge index)
/// are legal and simply return nothing.
struct EnumerationQuery {
    Surface surface;
    Int m;
    Int n;
};

/// One curve class up to permutation of the blow-up indices: the
/// representative has its multiplicity vector sorted non-increasing and
/// orbit_size counts the distinct permutations.
struct CurveFamily {
    Surface surface;
    DivisorClass representative;
    Int orbit_size;
    Int m;
    Int n;
};

/// Closed interval of coefficients a compatible with the Cauchy-Schwarz
/// bound (3a - m)^2 <= (9-d)(a^2 - n); empty when there is no real root.
struct CoefficientBounds {
    bool empty = true;
    Int lo;
    Int hi;
};

CoefficientBounds coefficient_bounds(const EnumerationQuery& q);

/// Every integral solution of 3a - sum b_i = m, a^2 - sum b_i^2 = n,
/// deduplicated, in lexicographic order.
std::vector<DivisorClass> enumerate_raw(const EnumerationQuery& q);

/// The (-1)-curve classes (m = 1, n = -1); computed once per degree and
/// shared read-only.
const std::vector<DivisorClass>& neg_curve_classes(Surface s);

/// Nef means meeting every (-1)-curve non-negatively; valid for degree <= 7
/// where those curves generate the effective cone.
bool is_nef_class(const DivisorClass& c);

/// Classes of irreducible curves with the given invariants: a solution is
/// kept when it is a (-1)-curve class or nef, and its arithmetic genus is a
/// non-negative integer.  Grouped into canonical forms with orbit sizes,
/// ordered by representative.
std::vector<CurveFamily> irreducible_families(const EnumerationQuery& q);

/// Smooth conic fiber classes: irreducible families with m = 2, n = 0,
/// expanded back to individual classes.
std::vector<DivisorClass> conic_classes(Surface s);

/// Generators of the nef cone: smooth conics together with the nef classes
/// with m = 3, n = 1 (hyperplane pullbacks).  Cached per degree.
const std::vector<DivisorClass>& nef_cone_generators(Surface s);

/// Representative with b sorted non-increasing, plus the multinomial count
/// of distinct index permutations.
std::pair<DivisorClass, Int> canonical_form(const DivisorClass& c);

/// All distinct permutations of the multiplicity vector, sorted.
std::vector<DivisorClass> expand_orbit(const DivisorClass& representative);

}  // namespace delpezzo
