#ifndef GAMMALIN_LINEARIZE_HPP
#define GAMMALIN_LINEARIZE_HPP

#include <string>
#include <vector>

#include "gammalin/matrix.hpp"
#include "gammalin/ncpoly.hpp"

namespace gammalin {

/// One algebraic constraint, lhs = rhs as noncommutative polynomials.
struct Constraint {
    std::string name;  // "X^n = 1", "permsum(n,k) = 0", ...
    NCPoly lhs;
    NCPoly rhs;
};

/// The relation family for power n: X^n = 1, Y^n = 1 and the n-1
/// permutation-sum constraints, next to the paper-style condition tally
/// (which counts the scalar equation, the linear ansatz and the n-1
/// permutation sums, but not the unit powers).
struct ConstraintSystem {
    unsigned n = 0;
    std::vector<Constraint> algebraic_constraints;
    unsigned perm_constraint_count = 0;
    unsigned paper_equation_count = 0;  // n + 1
    unsigned unknown_count = 3;
};

ConstraintSystem constraint_system(unsigned n);

/// Outcome of the equation-counting argument: compatible iff n + 1 <= 3.
/// This reproduces the counting verdict only; it makes no claim about
/// algebraic solvability over any particular field.
struct CompatibilityVerdict {
    unsigned n = 0;
    unsigned conditions = 0;  // n + 1
    unsigned unknowns = 3;
    bool compatible = false;
    std::string explanation;
};

CompatibilityVerdict paper_compatibility(unsigned n);

/// Per-constraint exact verdict; defect holds lhs - rhs evaluated at the
/// candidate matrices when the check fails.
struct ConstraintVerdict {
    std::string name;
    bool passed = false;
    ExactMatrix defect;  // zero-dim when passed
};

struct CertificationReport {
    long x = 0, y = 0, z = 0;
    unsigned n = 0;
    std::vector<ConstraintVerdict> constraints;
    bool all_algebraic_pass = false;
    bool gz_power_check = false;  // ((x*gx + y*gy)/z)^n == 1
    bool fermat_check = false;    // z^n == x^n + y^n over the integers
    ExactMatrix gz;               // derived from the linear ansatz

    std::string to_json() const;
};

/// Evaluates the full constraint family at (gx, gy), derives
/// gz = (x*gx + y*gy)/z and checks its n-th power against the identity,
/// and independently checks the integer power equation.
CertificationReport certify_solution(unsigned n, long x, long y, long z, const ExactMatrix& gx,
                                     const ExactMatrix& gy);

}  // namespace gammalin

#endif
