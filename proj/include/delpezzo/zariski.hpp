#pragma once

#include <utility>
#include <vector>

#include "delpezzo/lattice.hpp"

namespace delpezzo {

/// D = P + sum a_i N_i with P nef, P.N_i = 0, a_i > 0 and negative
/// definite support Gram matrix; the N_i come out pairwise disjoint
/// (-1)-curves on a del Pezzo surface.
struct ZariskiDecomposition {
    RationalDivisorClass positive_part;
    std::vector<std::pair<DivisorClass, Rat>> negative_part;
};

/// Computes the unique decomposition of a pseudoeffective class.  Support
/// candidates are grown until the positive part is nef; each round solves
/// P.N_j = 0 exactly.  Throws std::domain_error on non-pseudoeffective
/// input and std::logic_error if an internal invariant breaks.
ZariskiDecomposition zariski_decompose(const DivisorClass& d);

/// Leading principal minors alternate in sign starting negative, checked
/// in exact arithmetic.  Throws std::invalid_argument unless the matrix is
/// symmetric.
bool is_negative_definite(const std::vector<std::vector<Rat>>& gram);

/// Solves gram * x = rhs exactly; fraction-free elimination with a final
/// rational back-substitution.  Throws std::logic_error on a singular
/// matrix.
std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> gram, std::vector<Rat> rhs);

}  // namespace delpezzo
