#include "delpezzo/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace delpezzo {

namespace {

Int isqrt_floor(const Int& v) {
    if (v < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

// Recursively assign b_1 >= b_2 >= ... >= b_r with exact partial-sum and
// partial-sum-of-squares pruning, emitting sorted multiplicity vectors.
void descend(std::vector<Int>& prefix, int slots_left, const Int& sum_left,
             const Int& sq_left, const Int& upper,
             std::vector<std::vector<Int>>& out) {
    if (slots_left == 0) {
        if (sum_left == 0 && sq_left == 0) out.push_back(prefix);
        return;
    }
    if (sq_left < 0) return;
    // Cauchy-Schwarz on the remaining slots.
    if (sum_left * sum_left > Int(slots_left) * sq_left) return;
    Int root = isqrt_floor(sq_left);
    Int hi = upper < root ? upper : root;
    Int lo = -root;
    for (Int v = hi; v >= lo; --v) {
        // Remaining entries are bounded by v, so the sum cannot exceed
        // (slots_left-1)*v + v nor drop below -root*(slots_left-1) + v.
        Int rest_max = v * (slots_left - 1);
        Int rest_min = -root * (slots_left - 1);
        Int need = sum_left - v;
        if (need > rest_max || need < rest_min) continue;
        prefix.push_back(v);
        descend(prefix, slots_left - 1, need, sq_left - v * v, v, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<Int>> sorted_solutions(int slots, const Int& sum, const Int& sq) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> prefix;
    Int upper = sq >= 0 ? isqrt_floor(sq) : Int(0);
    if (sq >= 0) descend(prefix, slots, sum, sq, upper, out);
    return out;
}

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int orbit_count(const std::vector<Int>& sorted_b) {
    Int r = factorial(static_cast<int>(sorted_b.size()));
    size_t i = 0;
    while (i < sorted_b.size()) {
        size_t j = i;
        while (j < sorted_b.size() && sorted_b[j] == sorted_b[i]) ++j;
        r /= factorial(static_cast<int>(j - i));
        i = j;
    }
    return r;
}

struct DegreeCache {
    std::once_flag neg_once;
    std::vector<DivisorClass> neg_curves;
    std::once_flag gen_once;
    std::vector<DivisorClass> generators;
};

DegreeCache& cache_for(int degree) {
    static std::array<DegreeCache, 8> caches;
    return caches.at(degree);
}

}  // namespace

CoefficientBounds coefficient_bounds(const EnumerationQuery& q) {
    // Substituting sum b_i = 3a - m and sum b_i^2 = a^2 - n into
    // Cauchy-Schwarz gives d*a^2 - 6m*a + (m^2 + (9-d)*n) <= 0.
    const Int d = q.surface.degree();
    const Int k = q.surface.blowup_points();
    const Int disc = k * (q.m * q.m - d * q.n);
    CoefficientBounds bounds;
    if (disc < 0) return bounds;
    const Int root = isqrt_floor(disc);
    auto satisfies = [&](const Int& a) {
        return d * a * a - 6 * q.m * a + (q.m * q.m + k * q.n) <= 0;
    };
    // root is a floor, so widen by one and trim with the exact predicate.
    Int lo = (3 * q.m - root) / d - 1;
    Int hi = (3 * q.m + root) / d + 1;
    while (lo <= hi && !satisfies(lo)) ++lo;
    while (hi >= lo && !satisfies(hi)) --hi;
    if (lo > hi) return bounds;
    bounds.empty = false;
    bounds.lo = lo;
    bounds.hi = hi;
    return bounds;
}

std::vector<DivisorClass> enumerate_raw(const EnumerationQuery& q) {
    std::vector<DivisorClass> out;
    const auto bounds = coefficient_bounds(q);
    if (bounds.empty) return out;
    const int k = q.surface.blowup_points();
    for (Int a = bounds.lo; a <= bounds.hi; ++a) {
        const Int sum = 3 * a - q.m;
        const Int sq = a * a - q.n;
        for (auto& sorted : sorted_solutions(k, sum, sq)) {
            std::sort(sorted.begin(), sorted.end());
            do {
                out.emplace_back(q.surface, a, sorted);
            } while (std::next_permutation(sorted.begin(), sorted.end()));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const std::vector<DivisorClass>& neg_curve_classes(Surface s) {
    auto& cache = cache_for(s.degree());
    std::call_once(cache.neg_once, [&] {
        cache.neg_curves = enumerate_raw(EnumerationQuery{s, 1, -1});
    });
    return cache.neg_curves;
}

bool is_nef_class(const DivisorClass& c) {
    for (const auto& e : neg_curve_classes(c.surface))
        if (intersect(c, e) < 0) return false;
    return true;
}

std::vector<CurveFamily> irreducible_families(const EnumerationQuery& q) {
    std::vector<CurveFamily> families;
    const Rat genus = Rat(1) + Rat(q.n - q.m, 2);
    if (denominator(genus) != 1 || genus < 0) return families;
    const bool neg_curve_query = (q.m == 1 && q.n == -1);
    std::map<DivisorClass, Int> reps;
    for (const auto& c : enumerate_raw(q)) {
        if (!neg_curve_query && !is_nef_class(c)) continue;
        auto [rep, orbit] = canonical_form(c);
        reps.emplace(std::move(rep), orbit);
    }
    for (auto& [rep, orbit] : reps)
        families.push_back(CurveFamily{q.surface, rep, orbit, q.m, q.n});
    return families;
}

std::vector<DivisorClass> conic_classes(Surface s) {
    std::vector<DivisorClass> out;
    for (const auto& fam : irreducible_families(EnumerationQuery{s, 2, 0}))
        for (auto& c : expand_orbit(fam.representative)) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<DivisorClass>& nef_cone_generators(Surface s) {
    auto& cache = cache_for(s.degree());
    std::call_once(cache.gen_once, [&] {
        auto gens = conic_classes(s);
        for (const auto& c : enumerate_raw(EnumerationQuery{s, 3, 1}))
            if (is_nef_class(c)) gens.push_back(c);
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        cache.generators = std::move(gens);
    });
    return cache.generators;
}

std::pair<DivisorClass, Int> canonical_form(const DivisorClass& c) {
    DivisorClass rep = c;
    std::sort(rep.b.begin(), rep.b.end(), [](const Int& x, const Int& y) { return x > y; });
    Int orbit = orbit_count(rep.b);
    return {std::move(rep), std::move(orbit)};
}

std::vector<DivisorClass> expand_orbit(const DivisorClass& representative) {
    std::vector<Int> b = representative.b;
    std::sort(b.begin(), b.end());
    std::vector<DivisorClass> out;
    do {
        out.emplace_back(representative.surface, representative.a, b);
    } while (std::next_permutation(b.begin(), b.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace delpezzo
