#include "gammalin/linearize.hpp"

#include <gmpxx.h>

#include <json.hpp>
#include <sstream>

namespace gammalin {

ConstraintSystem constraint_system(unsigned n) {
    if (n == 0) throw domain_error("constraint_system: power must be positive");
    ConstraintSystem sys;
    sys.n = n;
    Word xn(std::vector<std::string>(n, "X"));
    Word yn(std::vector<std::string>(n, "Y"));
    sys.algebraic_constraints.push_back({"X^" + std::to_string(n) + " = 1", NCPoly::word(xn), NCPoly::one()});
    sys.algebraic_constraints.push_back({"Y^" + std::to_string(n) + " = 1", NCPoly::word(yn), NCPoly::one()});
    for (unsigned k = 1; k < n; ++k) {
        sys.algebraic_constraints.push_back({"permsum(" + std::to_string(n) + "," + std::to_string(k) + ") = 0",
                                             perm_sum(n, k), NCPoly::zero()});
        ++sys.perm_constraint_count;
    }
    sys.paper_equation_count = n + 1;
    sys.unknown_count = 3;
    return sys;
}

CompatibilityVerdict paper_compatibility(unsigned n) {
    if (n == 0) throw domain_error("paper_compatibility: power must be positive");
    CompatibilityVerdict v;
    v.n = n;
    v.conditions = n + 1;
    v.unknowns = 3;
    v.compatible = v.conditions <= v.unknowns;
    std::ostringstream os;
    os << v.conditions << " conditions (scalar power equation, linear ansatz, " << (n - 1)
       << " permutation sums) vs " << v.unknowns << " unknown matrices: "
       << (v.compatible ? "compatible by counting" : "incompatible by counting");
    v.explanation = os.str();
    return v;
}

CertificationReport certify_solution(unsigned n, long x, long y, long z, const ExactMatrix& gx,
                                     const ExactMatrix& gy) {
    if (n == 0) throw domain_error("certify_solution: power must be positive");
    if (z == 0) throw domain_error("certify_solution: z must be nonzero");
    if (gx.dim() != gy.dim())
        throw shape_error("certify_solution: gx and gy must share dimension");

    CertificationReport rep;
    rep.x = x;
    rep.y = y;
    rep.z = z;
    rep.n = n;

    std::map<std::string, ExactMatrix> assign{{"X", gx}, {"Y", gy}};
    ConstraintSystem sys = constraint_system(n);
    rep.all_algebraic_pass = true;
    for (const auto& c : sys.algebraic_constraints) {
        ExactMatrix defect = evaluate(c.lhs, assign) - evaluate(c.rhs, assign);
        ConstraintVerdict v;
        v.name = c.name;
        v.passed = defect.is_zero();
        if (!v.passed) {
            v.defect = defect;
            rep.all_algebraic_pass = false;
        }
        rep.constraints.push_back(std::move(v));
    }

    Scalar inv_z = Scalar(Rational(1, z));
    rep.gz = inv_z * (Scalar(Rational(x)) * gx + Scalar(Rational(y)) * gy);
    rep.gz_power_check = mat_pow(rep.gz, n) == ExactMatrix::identity(gx.dim());

    mpz_class zx, zy, zz;
    mpz_ui_pow_ui(zx.get_mpz_t(), static_cast<unsigned long>(std::abs(x)), n);
    mpz_ui_pow_ui(zy.get_mpz_t(), static_cast<unsigned long>(std::abs(y)), n);
    mpz_ui_pow_ui(zz.get_mpz_t(), static_cast<unsigned long>(std::abs(z)), n);
    rep.fermat_check = (zz == zx + zy);

    return rep;
}

namespace {
nlohmann::json matrix_json(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (unsigned j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}
}  // namespace

std::string CertificationReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["triple"] = {x, y, z};
    j["constraints"] = nlohmann::json::array();
    for (const auto& c : constraints) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        if (!c.passed) cj["defect"] = matrix_json(c.defect);
        j["constraints"].push_back(cj);
    }
    j["all_algebraic_pass"] = all_algebraic_pass;
    j["gz"] = matrix_json(gz);
    j["gz_power_check"] = gz_power_check;
    j["fermat_check"] = fermat_check;
    return j.dump(2);
}

}  // namespace gammalin
