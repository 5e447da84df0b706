#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammalin/gamma_triple.hpp"
#include "gammalin/linearize.hpp"

using namespace gammalin;

TEST_CASE("constraint system structure") {
    auto sys2 = constraint_system(2);
    CHECK(sys2.paper_equation_count == 3);
    CHECK(sys2.perm_constraint_count == 1);
    CHECK(sys2.algebraic_constraints.size() == 3);
    CHECK(sys2.algebraic_constraints[2].lhs == perm_sum(2, 1));

    auto sys3 = constraint_system(3);
    CHECK(sys3.paper_equation_count == 4);
    CHECK(sys3.unknown_count == 3);
    bool found_213 = false, found_214 = false;
    for (const auto& c : sys3.algebraic_constraints) {
        if (c.lhs.str() == "X*X*Y + X*Y*X + Y*X*X" && c.rhs.is_zero()) found_213 = true;
        if (c.lhs.str() == "X*Y*Y + Y*X*Y + Y*Y*X" && c.rhs.is_zero()) found_214 = true;
    }
    CHECK(found_213);
    CHECK(found_214);

    CHECK_THROWS_AS(constraint_system(0), domain_error);
}

TEST_CASE("counting law for n up to 12") {
    for (unsigned n = 1; n <= 12; ++n) {
        auto sys = constraint_system(n);
        CHECK(sys.perm_constraint_count == n - 1);
        CHECK(sys.paper_equation_count == n + 1);
        auto verdict = paper_compatibility(n);
        CHECK(verdict.compatible == (n <= 2));
        CHECK(verdict.conditions == n + 1);
        CHECK(verdict.unknowns == 3);
    }
}

TEST_CASE("compatibility verdicts match the counting argument") {
    CHECK(paper_compatibility(1).compatible);
    CHECK(paper_compatibility(2).compatible);
    CHECK_FALSE(paper_compatibility(3).compatible);
    CHECK(paper_compatibility(3).explanation.find("incompatible") != std::string::npos);
}

TEST_CASE("certify the Pythagorean construction") {
    GammaTriple t = build_gamma_triple(3, 4, 5);
    auto rep = certify_solution(2, 3, 4, 5, t.gx, t.gy);
    CHECK(rep.all_algebraic_pass);
    CHECK(rep.gz_power_check);
    CHECK(rep.fermat_check);
    CHECK(rep.gz == t.gz);
}

TEST_CASE("certify clock/shift at n=3: algebra passes, powers fail") {
    auto [u, v] = clock_shift(3);
    auto rep = certify_solution(3, 1, 2, 2, u, v);
    CHECK(rep.all_algebraic_pass);
    CHECK_FALSE(rep.gz_power_check);  // (1*U + 2*V)^3 = 9*1, but z^3 = 8
    CHECK_FALSE(rep.fermat_check);
}

TEST_CASE("certify the trivial n=1 case") {
    ExactMatrix id = ExactMatrix::identity(2);
    auto rep = certify_solution(1, 2, 3, 5, id, id);
    CHECK(rep.all_algebraic_pass);
    CHECK(rep.gz_power_check);
    CHECK(rep.fermat_check);
}

TEST_CASE("certification consistency: gz power iff fermat when algebra passes") {
    // clock/shift witnesses satisfy every algebraic constraint; scan a grid
    // of (n, x, y, z) and check the reported implication.
    unsigned cases = 0;
    for (unsigned n = 2; n <= 4; ++n) {
        auto [u, v] = clock_shift(n);
        for (long x = 1; x <= 3; ++x)
            for (long y = 1; y <= 3; ++y)
                for (long z = 1; z <= 4; ++z) {
                    auto rep = certify_solution(n, x, y, z, u, v);
                    REQUIRE(rep.all_algebraic_pass);
                    CHECK(rep.gz_power_check == rep.fermat_check);
                    ++cases;
                }
    }
    CHECK(cases >= 20);
}

TEST_CASE("soundness of the linearization identity") {
    // any witness that passes all algebraic constraints turns the expanded
    // power into (x^n + y^n) * identity
    for (unsigned n = 2; n <= 4; ++n) {
        auto [u, v] = clock_shift(n);
        NCPoly expansion = expand_power({{"x", "X"}, {"y", "Y"}}, n);
        for (long x = 1; x <= 10; x += 3)
            for (long y = 1; y <= 10; y += 4) {
                ExactMatrix m =
                    evaluate(expansion, {{"X", u}, {"Y", v}}, {{"x", Scalar(x)}, {"y", Scalar(y)}});
                Scalar expected = pow(Scalar(x), n) + pow(Scalar(y), n);
                CHECK(m.scalar_multiple_of_identity() == expected);
            }
    }
}

TEST_CASE("degenerate x=0 style inputs are reported, not rejected") {
    ExactMatrix id = ExactMatrix::identity(2);
    auto rep = certify_solution(2, 0, 5, 5, pauli_x(), pauli_z());
    CHECK(rep.fermat_check);
    CHECK(rep.gz_power_check);
    CHECK(rep.gz == pauli_z());
    (void)id;
}

TEST_CASE("shape errors") {
    auto [u, v] = clock_shift(3);
    CHECK_THROWS_AS(certify_solution(2, 3, 4, 5, pauli_x(), u), shape_error);
    CHECK_THROWS_AS(certify_solution(2, 3, 4, 0, pauli_x(), pauli_z()), domain_error);
}

TEST_CASE("certification report serializes to JSON with exact strings") {
    GammaTriple t = build_gamma_triple(3, 4, 5);
    auto rep = certify_solution(2, 3, 4, 5, t.gx, t.gy);
    std::string j = rep.to_json();
    CHECK(j.find("\"4/5\"") != std::string::npos);
    CHECK(j.find("\"fermat_check\": true") != std::string::npos);
}
