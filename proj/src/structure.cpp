#include "delpezzo/structure.hpp"

#include <algorithm>

#include "delpezzo/positivity.hpp"
#include "delpezzo/zariski.hpp"

namespace delpezzo {

namespace {

bool all_even(const DivisorClass& c) {
    if (c.a % 2 != 0) return false;
    for (const auto& bi : c.b)
        if (bi % 2 != 0) return false;
    return true;
}

DivisorClass halve(const DivisorClass& c) {
    std::vector<Int> hb;
    hb.reserve(c.b.size());
    for (const auto& bi : c.b) hb.push_back(bi / 2);
    return DivisorClass(c.surface, c.a / 2, std::move(hb));
}

bool is_neg_curve_class(const DivisorClass& c) {
    return anticanonical_degree(c) == 1 && self_intersection(c) == -1;
}

// Positive integers p >= q with p + q = s and p*q = t.
std::optional<std::pair<int, int>> split_sum_product(const Int& s, const Int& t) {
    if (s < 2 || t < 1) return std::nullopt;
    const Int disc = s * s - 4 * t;
    if (disc < 0) return std::nullopt;
    const Int root = boost::multiprecision::sqrt(disc);
    if (root * root != disc) return std::nullopt;
    if ((s + root) % 2 != 0) return std::nullopt;
    const Int p = (s + root) / 2;
    const Int q = (s - root) / 2;
    if (q < 1) return std::nullopt;
    return std::pair{static_cast<int>(p), static_cast<int>(q)};
}

// Class c*H' - e*E on the one-point blow-up with 3c - e = m and
// c^2 - e^2 = n, demanding c > e >= 1.
std::optional<std::pair<int, int>> blowup_class(const Int& m, const Int& n) {
    const Int disc = m * m - 8 * n;
    if (disc < 0) return std::nullopt;
    const Int root = boost::multiprecision::sqrt(disc);
    if (root * root != disc) return std::nullopt;
    for (const Int& num : {3 * m + root, 3 * m - root}) {
        if (num % 8 != 0) continue;
        const Int c = num / 8;
        const Int e = 3 * c - m;
        if (c > e && e >= 1 && c * c - e * e == n)
            return std::pair{static_cast<int>(c), static_cast<int>(e)};
    }
    return std::nullopt;
}

StructuralTag direct(TagKind kind, int degree) {
    StructuralTag t;
    t.kind = kind;
    t.target_degree = degree;
    return t;
}

}  // namespace

std::optional<std::vector<DivisorClass>> disjoint_neg_decomposition(const DivisorClass& d) {
    std::vector<DivisorClass> parts;
    if (d.is_zero()) return parts;
    for (const auto& e : neg_curve_classes(d.surface)) {
        const Int v = intersect(d, e);
        if (v >= 0) continue;
        if (v != -1) return std::nullopt;  // a component would need multiplicity > 1
        parts.push_back(e);
    }
    if (parts.empty()) return std::nullopt;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (intersect(parts[i], parts[j]) != 0) return std::nullopt;
    DivisorClass sum = DivisorClass::zero(d.surface);
    for (const auto& p : parts) sum += p;
    if (!(sum == d)) return std::nullopt;
    return parts;
}

ContractionInvariants contracted_invariants(const DivisorClass& c,
                                            const std::vector<DivisorClass>& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (!is_neg_curve_class(s[i]))
            throw std::invalid_argument("contraction set must consist of (-1)-curve classes");
        for (size_t j = i + 1; j < s.size(); ++j)
            if (intersect(s[i], s[j]) != 0)
                throw std::invalid_argument("contraction set must be pairwise disjoint");
    }
    ContractionInvariants inv{static_cast<int>(s.size()),
                              c.surface.degree() + static_cast<int>(s.size()),
                              anticanonical_degree(c), self_intersection(c)};
    if (inv.target_degree > 9)
        throw std::invalid_argument("contraction target degree exceeds 9");
    for (const auto& n : s) {
        const Int ci = intersect(c, n);
        inv.m_target += ci;
        inv.n_target += ci * ci;
    }
    return inv;
}

namespace {

// Classification of the contracted image when the target still is a del
// Pezzo surface of degree <= 7: the pushed-forward positive part carries
// the adjoint class of the image.
std::optional<StructuralTag> classify_pulled_adjoint(const DivisorClass& p, int target_degree) {
    const Int mp = anticanonical_degree(p);
    const Int np = self_intersection(p);
    if (mp == 2 && np == 0) return direct(TagKind::MinusKPlusConic, target_degree);
    if (mp == 4 && np == 0 && all_even(p)) {
        const DivisorClass half = halve(p);
        if (anticanonical_degree(half) == 2 && self_intersection(half) == 0)
            return direct(TagKind::MinusKPlus2Conic, target_degree);
    }
    if (mp == 3 && np == 1) return direct(TagKind::MinusKPlusHyperplane, target_degree);
    return std::nullopt;
}

}  // namespace

StructuralTag structural_tag(const CurveFamily& family) {
    const Surface s = family.surface;
    const int d = s.degree();
    const DivisorClass& curve = family.representative;
    const DivisorClass k_class = canonical_class(s);
    const StructuralTag unclassified = direct(TagKind::Unclassified, d);

    if (family.m == 1 && family.n == -1) return direct(TagKind::NegCurve, d);

    if (auto k = proportional_to_canonical(curve)) {
        StructuralTag t = direct(TagKind::AntiCanonicalMultiple, d);
        t.multiple = static_cast<int>(*k);
        return t;
    }

    if (family.m == 2 && family.n == 0) return direct(TagKind::Conic, d);

    if (family.m == 3 && family.n == 1) {
        // 3C + K collapses onto the plane: a sum of 9-d disjoint
        // (-1)-curves, all orthogonal to C.
        const DivisorClass triple = 3 * curve + k_class;
        auto parts = disjoint_neg_decomposition(triple);
        if (parts && d + static_cast<int>(parts->size()) == 9 &&
            std::all_of(parts->begin(), parts->end(),
                        [&](const DivisorClass& n) { return intersect(curve, n) == 0; }))
            return direct(TagKind::HyperplanePullback, 9);
        return unclassified;
    }

    const DivisorClass adjoint = curve + k_class;

    if (auto parts = disjoint_neg_decomposition(adjoint); parts && !parts->empty()) {
        StructuralTag t = direct(TagKind::AntiCanonicalPullback,
                                 d + static_cast<int>(parts->size()));
        return t;
    }

    if (!adjoint.is_zero() && is_nef_class(adjoint)) {
        const Int ma = anticanonical_degree(adjoint);
        const Int na = self_intersection(adjoint);
        if (ma == 2 && na == 0) return direct(TagKind::MinusKPlusConic, d);
        if (ma == 4 && na == 0 && all_even(adjoint)) {
            const DivisorClass half = halve(adjoint);
            if (anticanonical_degree(half) == 2 && self_intersection(half) == 0 &&
                is_nef_class(half))
                return direct(TagKind::MinusKPlus2Conic, d);
        }
        if (ma == 3 && na == 1) return direct(TagKind::MinusKPlusHyperplane, d);
        if (ma == 4 && na == 2) return direct(TagKind::MinusKPlusQuadric, d);
        if (ma == 5 && na == 3) return direct(TagKind::MinusKPlusBlowupClass, d);
    }

    // Contraction route: pick the adjoint multiple whose Euler
    // characteristic certifies effectivity, then contract the support of
    // its Zariski decomposition.
    const bool use_single = euler_characteristic(adjoint) > 0;
    const DivisorClass working = use_single ? adjoint : 2 * curve + k_class;
    if (!use_single && euler_characteristic(working) <= 0) return unclassified;
    if (!is_pseudoeffective(working)) return unclassified;

    const ZariskiDecomposition z = zariski_decompose(working);
    if (z.negative_part.empty()) return unclassified;
    std::vector<DivisorClass> support;
    for (const auto& [n_curve, coef] : z.negative_part) {
        if (coef != 1) return unclassified;
        support.push_back(n_curve);
    }
    for (size_t i = 0; i < support.size(); ++i)
        for (size_t j = i + 1; j < support.size(); ++j)
            if (intersect(support[i], support[j]) != 0) return unclassified;

    const ContractionInvariants inv = contracted_invariants(curve, support);

    if (inv.target_degree == 8) {
        // K - sum N_i is the pullback of the target's canonical class;
        // divisibility by 2 separates the quadric from the one-point
        // blow-up of the plane.
        DivisorClass target_canonical = k_class;
        for (const auto& n : support) target_canonical -= n;
        if (all_even(target_canonical)) {
            if (inv.m_target % 2 == 0 && inv.n_target % 2 == 0) {
                if (auto pq = split_sum_product(inv.m_target / 2, inv.n_target / 2)) {
                    StructuralTag t = direct(TagKind::QuadricClassPullback, 8);
                    t.p = pq->first;
                    t.q = pq->second;
                    return t;
                }
            }
            return unclassified;
        }
        if (auto ce = blowup_class(inv.m_target, inv.n_target)) {
            StructuralTag t = direct(TagKind::BlowupClassPullback, 8);
            t.c = ce->first;
            t.e = ce->second;
            return t;
        }
        return unclassified;
    }

    if (inv.target_degree <= 7 && use_single) {
        auto p_int = z.positive_part.to_integral();
        if (!p_int) return unclassified;
        if (auto t = classify_pulled_adjoint(*p_int, inv.target_degree)) return *t;
    }
    return unclassified;
}

CellClassification classify_cell(Surface s, const Int& m, const Int& n) {
    CellClassification cell;
    cell.families = irreducible_families(EnumerationQuery{s, m, n});
    if (cell.families.empty()) {
        cell.cell_tag = direct(TagKind::NoCurve, s.degree());
        return cell;
    }
    for (const auto& fam : cell.families)
        cell.family_tags.push_back(structural_tag(fam));
    cell.cell_tag = *std::min_element(cell.family_tags.begin(), cell.family_tags.end());
    return cell;
}

std::vector<Int> feasible_self_intersections(int degree, const Int& m) {
    (void)Surface(degree);  // degree validation only
    std::vector<Int> out;
    if (m < 1) return out;
    const Int hi = (m * m) / degree;
    for (Int n = m - 2; n <= hi; n += 2) out.push_back(n);
    return out;
}

std::string to_string(TagKind k) {
    switch (k) {
        case TagKind::NegCurve: return "NegCurve";
        case TagKind::Conic: return "Conic";
        case TagKind::AntiCanonicalMultiple: return "AntiCanonicalMultiple";
        case TagKind::HyperplanePullback: return "HyperplanePullback";
        case TagKind::QuadricClassPullback: return "QuadricClassPullback";
        case TagKind::AntiCanonicalPullback: return "AntiCanonicalPullback";
        case TagKind::BlowupClassPullback: return "BlowupClassPullback";
        case TagKind::MinusKPlusConic: return "MinusKPlusConic";
        case TagKind::MinusKPlus2Conic: return "MinusKPlus2Conic";
        case TagKind::MinusKPlusHyperplane: return "MinusKPlusHyperplane";
        case TagKind::MinusKPlusQuadric: return "MinusKPlusQuadric";
        case TagKind::MinusKPlusBlowupClass: return "MinusKPlusBlowupClass";
        case TagKind::NoCurve: return "NoCurve";
        case TagKind::Unclassified: return "Unclassified";
    }
    return "?";
}

std::string describe(const StructuralTag& tag, int surface_degree) {
    auto target_name = [](int deg) -> std::string {
        if (deg == 9) return "P^2";
        if (deg == 8) return "P^2 blown up at one point";
        return "del Pezzo surface of degree " + std::to_string(deg);
    };
    const bool pulled = tag.target_degree != surface_degree;
    switch (tag.kind) {
        case TagKind::NegCurve: return "(-1)-curve";
        case TagKind::Conic: return "F (conic)";
        case TagKind::AntiCanonicalMultiple:
            return tag.multiple == 1 ? "C in |-K|"
                                     : "C in |-" + std::to_string(tag.multiple) + "K|";
        case TagKind::HyperplanePullback: return "C in |pi^*H'|, pi: X -> P^2";
        case TagKind::QuadricClassPullback: {
            std::string pq = "(" + std::to_string(tag.q) + "," + std::to_string(tag.p) + ")";
            std::string qp = "(" + std::to_string(tag.p) + "," + std::to_string(tag.q) + ")";
            std::string body = "C in |pi^*" + pq + "|";
            if (tag.p != tag.q) body += " or |pi^*" + qp + "|";
            return body + ", pi: X -> P^1 x P^1";
        }
        case TagKind::AntiCanonicalPullback:
            return "C in |-pi^*K_{X'}|, X' = " + target_name(tag.target_degree);
        case TagKind::BlowupClassPullback: {
            std::string ch = tag.c == 1 ? "" : std::to_string(tag.c);
            std::string ce = tag.e == 1 ? "" : std::to_string(tag.e);
            return "C in |" + ch + "pi^*H' - " + ce + "pi^*E|, X' = P^2 blown up at one point";
        }
        case TagKind::MinusKPlusConic:
            return pulled ? "C in |-pi^*K_{X'} + pi^*F|, X' = " + target_name(tag.target_degree)
                          : "C ~ -K + F";
        case TagKind::MinusKPlus2Conic:
            return pulled ? "C in |-pi^*K_{X'} + 2pi^*F|, X' = " + target_name(tag.target_degree)
                          : "C ~ -K + 2F";
        case TagKind::MinusKPlusHyperplane: return "C in |-K + pi^*H'|, pi: X -> P^2";
        case TagKind::MinusKPlusQuadric:
            return "C in |-K + pi^*(1,1)|, pi: X -> P^1 x P^1";
        case TagKind::MinusKPlusBlowupClass: return "C in |-K + 2pi^*H' - pi^*E|";
        case TagKind::NoCurve: return "no such curve exists";
        case TagKind::Unclassified: return "explicit forms only";
    }
    return "?";
}

}  // namespace delpezzo
