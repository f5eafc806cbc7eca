#include "delpezzo/zariski.hpp"

#include <algorithm>
#include <set>

#include "delpezzo/enumerate.hpp"
#include "delpezzo/positivity.hpp"

namespace delpezzo {

std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
    const size_t n = m.size();
    for (size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular linear system");
        std::swap(m[col], m[pivot]);
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (size_t j = col; j <= n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = n; i-- > 0;) {
        Rat acc = m[i][n];
        for (size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }
    return x;
}

bool is_negative_definite(const std::vector<std::vector<Rat>>& gram) {
    const size_t n = gram.size();
    for (size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw std::invalid_argument("Gram matrix must be square");
        for (size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("Gram matrix must be symmetric");
    }
    // Determinant of each leading principal minor via exact elimination.
    std::vector<std::vector<Rat>> m = gram;
    for (size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> sub(k, std::vector<Rat>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub[i][j] = gram[i][j];
        Rat det(1);
        bool singular = false;
        for (size_t col = 0; col < k && !singular; ++col) {
            size_t pivot = col;
            while (pivot < k && sub[pivot][col] == 0) ++pivot;
            if (pivot == k) {
                singular = true;
                break;
            }
            if (pivot != col) {
                std::swap(sub[col], sub[pivot]);
                det = -det;
            }
            det *= sub[col][col];
            for (size_t row = col + 1; row < k; ++row) {
                if (sub[row][col] == 0) continue;
                Rat f = sub[row][col] / sub[col][col];
                for (size_t j = col; j < k; ++j) sub[row][j] -= f * sub[col][j];
            }
        }
        if (singular) return false;
        const bool want_negative = (k % 2 == 1);
        if (want_negative ? det >= 0 : det <= 0) return false;
    }
    return true;
}

ZariskiDecomposition zariski_decompose(const DivisorClass& d) {
    if (!is_pseudoeffective(d))
        throw std::domain_error("class is not pseudoeffective; no Zariski decomposition");

    const auto& curves = neg_curve_classes(d.surface);
    std::set<size_t> support;
    const RationalDivisorClass d_rat(d);
    RationalDivisorClass p = d_rat;
    std::vector<Rat> coeff;

    for (int round = 0;; ++round) {
        if (round > static_cast<int>(curves.size()))
            throw std::logic_error("Zariski support iteration failed to stabilise");
        bool grew = false;
        for (size_t i = 0; i < curves.size(); ++i) {
            if (intersect(p, RationalDivisorClass(curves[i])) < 0)
                grew |= support.insert(i).second;
        }
        if (!grew) break;

        std::vector<size_t> idx(support.begin(), support.end());
        const size_t n = idx.size();
        std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
        std::vector<Rat> rhs(n);
        for (size_t i = 0; i < n; ++i) {
            rhs[i] = Rat(intersect(d, curves[idx[i]]));
            for (size_t j = 0; j < n; ++j)
                gram[i][j] = Rat(intersect(curves[idx[i]], curves[idx[j]]));
        }
        if (!is_negative_definite(gram))
            throw std::logic_error("Zariski support Gram matrix is not negative definite");
        coeff = solve_exact(gram, rhs);
        p = d_rat;
        for (size_t i = 0; i < n; ++i)
            p -= coeff[i] * RationalDivisorClass(curves[idx[i]]);
    }

    ZariskiDecomposition z{p, {}};
    std::vector<size_t> idx(support.begin(), support.end());
    for (size_t i = 0; i < idx.size(); ++i) {
        if (coeff[i] == 0) continue;
        if (coeff[i] < 0)
            throw std::logic_error("negative coefficient in Zariski support");
        z.negative_part.emplace_back(curves[idx[i]], coeff[i]);
    }
    return z;
}

}  // namespace delpezzo
