#ifndef GAMMALIN_DIRAC_HPP
#define GAMMALIN_DIRAC_HPP

#include <array>
#include <string>
#include <vector>

#include "gammalin/matrix.hpp"
#include "gammalin/ncpoly.hpp"
#include "gammalin/relations.hpp"

namespace gammalin {

/// The alpha/beta coefficient matrices of the linearized relativistic
/// hamiltonian. Entries live in Q(zeta_4) (sigma_y needs i).
struct DiracSet {
    std::array<ExactMatrix, 3> alphas;
    ExactMatrix beta;
    unsigned dim = 4;
};

/// Mostly-minus metric diag(+1, -1, -1, -1).
struct MetricSignature {
    std::array<int, 4> eta = {1, -1, -1, -1};
};

/// Standard 4x4 representation: alpha^i = [[0, sigma_i], [sigma_i, 0]],
/// beta = diag(1, 1, -1, -1).
DiracSet standard_dirac_set();

struct RelationVerdict {
    std::string name;
    bool passed = false;
    ExactMatrix defect;  // zero-dim when passed
};

struct AlgebraReport {
    std::vector<RelationVerdict> relations;
    bool all_pass = false;

    std::string to_json() const;
};

/// Checks (alpha^i)^2 = 1, beta^2 = 1, alpha^i beta + beta alpha^i = 0,
/// and the mutual anticommutators alpha^i alpha^j + alpha^j alpha^i = 0
/// for i != j (the last family is what makes the hamiltonian square
/// diagonal; it is checked alongside the displayed three).
AlgebraReport verify_dirac_algebra(const DiracSet& s);

/// Rewrite rules encoding the alpha/beta algebra over symbols
/// A1, A2, A3, B.
RelationSet dirac_relations(bool include_beta_anticommutation = true);

/// (p1*A1 + p2*A2 + p3*A3 + m*B)^2 reduced under dirac_relations();
/// equals (p1^2 + p2^2 + p3^2 + m^2) * 1.
NCPoly hamiltonian_square_symbolic();

/// gamma^0 = beta, gamma^i = beta * alpha^i.
std::array<ExactMatrix, 4> gamma_basis(const DiracSet& s);

/// Checks gamma^mu gamma^nu + gamma^nu gamma^mu = 2 eta^{mu nu} * 1 for all
/// unordered pairs.
AlgebraReport verify_clifford(const std::array<ExactMatrix, 4>& gammas, const MetricSignature& eta);

}  // namespace gammalin

#endif
