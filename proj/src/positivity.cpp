#include "delpezzo/positivity.hpp"

namespace delpezzo {

std::string to_string(Positivity v) {
    switch (v) {
        case Positivity::AmpleAllEps: return "AmpleAllEps";
        case Positivity::NefBigAtHalf: return "NefBigAtHalf";
        case Positivity::NefNotBigAtHalf: return "NefNotBigAtHalf";
        case Positivity::NeverNef: return "NeverNef";
        case Positivity::Degenerate: return "Degenerate";
    }
    return "?";
}

RationalDivisorClass adjoint_class(const DivisorClass& d, const Rat& eps) {
    RationalDivisorClass r = Rat(-1) * RationalDivisorClass(canonical_class(d.surface));
    r -= eps * RationalDivisorClass(d);
    return r;
}

bool is_nef(const RationalDivisorClass& l) {
    for (const auto& e : neg_curve_classes(l.surface))
        if (intersect(l, RationalDivisorClass(e)) < 0) return false;
    return true;
}

bool is_ample(const RationalDivisorClass& l) {
    for (const auto& e : neg_curve_classes(l.surface))
        if (intersect(l, RationalDivisorClass(e)) <= 0) return false;
    return true;
}

bool is_big_given_nef(const RationalDivisorClass& l) {
    if (!is_nef(l)) throw std::logic_error("is_big_given_nef requires a nef class");
    return self_intersection(l) > 0;
}

Int max_neg_intersection(const DivisorClass& d) {
    const auto& curves = neg_curve_classes(d.surface);
    Int mu = intersect(d, curves.front());
    for (const auto& e : curves) {
        Int v = intersect(d, e);
        if (v > mu) mu = v;
    }
    return mu;
}

std::optional<Rat> nef_threshold(const DivisorClass& d) {
    Int mu = max_neg_intersection(d);
    if (mu <= 0) return std::nullopt;
    return Rat(1, mu);
}

PositivityVerdict classify_boundary(const DivisorClass& d) {
    PositivityVerdict v{max_neg_intersection(d), std::nullopt, Positivity::Degenerate, Rat(0)};
    v.adjoint_self_intersection_at_half = self_intersection(adjoint_class(d, Rat(1, 2)));
    if (v.mu <= 0) return v;  // threshold +infinity, degenerate input
    v.nef_threshold = Rat(1, v.mu);
    if (v.mu == 1) {
        v.verdict = Positivity::AmpleAllEps;
    } else if (v.mu == 2) {
        v.verdict = v.adjoint_self_intersection_at_half > 0 ? Positivity::NefBigAtHalf
                                                            : Positivity::NefNotBigAtHalf;
    } else {
        v.verdict = Positivity::NeverNef;  // threshold 1/mu < 1/2
    }
    return v;
}

bool is_pseudoeffective(const DivisorClass& d) {
    for (const auto& g : nef_cone_generators(d.surface))
        if (intersect(d, g) < 0) return false;
    return true;
}

}  // namespace delpezzo
