#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/enumerate.hpp"
#include "delpezzo/lattice.hpp"

namespace delpezzo {

/// Structural description of a curve family, matching the classification
/// tables: either a distinguished class on the surface itself or the
/// pullback of a known class along a contraction to a higher-degree
/// target.  Enumerator order doubles as the reporting precedence when a
/// cell admits several descriptions.
enum class TagKind {
    NegCurve,
    Conic,
    AntiCanonicalMultiple,   // C = -k*K
    HyperplanePullback,      // C = pullback of a line from the plane
    QuadricClassPullback,    // C = pullback of a (p,q) class from P1 x P1
    AntiCanonicalPullback,   // C = pullback of -K' from a target of degree d'
    BlowupClassPullback,     // C = pullback of c*H' - e*E from the one-point blow-up
    MinusKPlusConic,         // C + K is (the pullback of) a smooth conic
    MinusKPlus2Conic,        // C + K is (the pullback of) twice a conic
    MinusKPlusHyperplane,    // C + K is the pullback of a line
    MinusKPlusQuadric,       // C + K is the pullback of a (1,1) class
    MinusKPlusBlowupClass,   // C + K is the pullback of 2H' - E
    NoCurve,
    Unclassified,
};

struct StructuralTag {
    TagKind kind = TagKind::Unclassified;
    int multiple = 0;       // k for AntiCanonicalMultiple
    int target_degree = 0;  // degree of the contraction target; equals d when direct
    int p = 0, q = 0;       // quadric bidegree, p >= q >= 1
    int c = 0, e = 0;       // blow-up class coefficients, c > e >= 1

    friend bool operator==(const StructuralTag& x, const StructuralTag& y) {
        return x.kind == y.kind && x.multiple == y.multiple &&
               x.target_degree == y.target_degree && x.p == y.p && x.q == y.q &&
               x.c == y.c && x.e == y.e;
    }
    friend bool operator<(const StructuralTag& x, const StructuralTag& y) {
        auto key = [](const StructuralTag& t) {
            return std::tuple(static_cast<int>(t.kind), t.multiple, t.target_degree,
                              t.p, t.q, t.c, t.e);
        };
        return key(x) < key(y);
    }
};

/// Invariants of the image of C under contraction of a disjoint set S of
/// (-1)-curves: with c_i = C.N_i, the target has degree d + |S| and the
/// image has m' = m + sum c_i, n' = n + sum c_i^2.
struct ContractionInvariants {
    int contracted_count;
    int target_degree;
    Int m_target;
    Int n_target;
};

/// Writes D as a sum of pairwise-disjoint (-1)-curves when possible.
/// D = 0 yields the empty list; absence of a decomposition is a valid
/// answer, not an error.  Any such decomposition is unique: its members
/// are exactly the (-1)-curves meeting D negatively.
std::optional<std::vector<DivisorClass>> disjoint_neg_decomposition(const DivisorClass& d);

ContractionInvariants contracted_invariants(const DivisorClass& c,
                                            const std::vector<DivisorClass>& s);

/// Decision procedure for one family; every branch is verified
/// arithmetically and the first match wins.  Unclassified is a reportable
/// outcome, not an error.
StructuralTag structural_tag(const CurveFamily& family);

/// All families of a (d, m, n) cell together with the per-family tags and
/// the cell tag (minimum under the reporting precedence; NoCurve when the
/// cell is empty).
struct CellClassification {
    std::vector<CurveFamily> families;
    std::vector<StructuralTag> family_tags;
    StructuralTag cell_tag;
};

CellClassification classify_cell(Surface s, const Int& m, const Int& n);

/// Self-intersections compatible with the Hodge-index bound n <= m^2/d,
/// genus integrality (n = m mod 2) and non-negative genus (n >= m-2).
std::vector<Int> feasible_self_intersections(int degree, const Int& m);

std::string to_string(TagKind k);

/// Human-readable rendering, e.g. "C in |2pi^*H' - pi^*E|, X' = P^2 blown
/// up at one point".
std::string describe(const StructuralTag& tag, int surface_degree);

}  // namespace delpezzo
