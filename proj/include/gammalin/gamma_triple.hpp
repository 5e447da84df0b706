#ifndef GAMMALIN_GAMMA_TRIPLE_HPP
#define GAMMALIN_GAMMA_TRIPLE_HPP

#include "gammalin/matrix.hpp"

namespace gammalin {

/// Thrown by build_gamma_triple for x^2 + y^2 != z^2; carries the defect.
struct not_a_triple : error {
    not_a_triple(long defect_, const std::string& msg) : error(msg), defect(defect_) {}
    long defect;  // z^2 - x^2 - y^2
};

/// The three 2x2 matrices linearizing z^2 = x^2 + y^2:
/// gx = [[0,1],[1,0]], gy = [[1,0],[0,-1]], gz = (x*gx + y*gy)/z.
struct GammaTriple {
    long x, y, z;
    ExactMatrix gx, gy, gz;
};

/// Fixed off-diagonal involution [[0,1],[1,0]].
ExactMatrix pauli_x();
/// Fixed diagonal involution [[1,0],[0,-1]].
ExactMatrix pauli_z();

GammaTriple build_gamma_triple(long x, long y, long z);

/// All Pythagorean triples (x, y, z) with x <= y and z <= z_max, built from
/// the classical (m, n) parameterization with multipliers.
std::vector<std::array<long, 3>> pythagorean_triples(long z_max);

}  // namespace gammalin

#endif
