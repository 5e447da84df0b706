#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gammalin/gamma_triple.hpp"
#include "gammalin/matrix.hpp"

using namespace gammalin;

TEST_CASE("matrix multiplication and powers") {
    ExactMatrix gx = pauli_x();
    CHECK(mat_pow(gx, 2) == ExactMatrix::identity(2));
    CHECK(mat_pow(gx, 0) == ExactMatrix::identity(2));
    ExactMatrix id = ExactMatrix::identity(2);
    CHECK(id * gx == gx);
    auto [u, v] = clock_shift(3);
    CHECK(mat_pow(u, 3) == ExactMatrix::identity(3));
    CHECK(mat_pow(v, 3) == ExactMatrix::identity(3));
    CHECK_THROWS_AS(gx * u, shape_error);
}

TEST_CASE("build_gamma_triple reproduces the 3-4-5 matrices") {
    GammaTriple t = build_gamma_triple(3, 4, 5);
    CHECK(t.gz.str() == "[[4/5, 3/5], [3/5, -4/5]]");
    CHECK(t.gx.str() == "[[0, 1], [1, 0]]");
    CHECK(t.gy.str() == "[[1, 0], [0, -1]]");

    GammaTriple t2 = build_gamma_triple(5, 12, 13);
    CHECK(t2.gz.str() == "[[12/13, 5/13], [5/13, -12/13]]");

    CHECK_THROWS_AS(build_gamma_triple(1, 1, 2), not_a_triple);
    try {
        build_gamma_triple(1, 1, 2);
    } catch (const not_a_triple& e) {
        CHECK(e.defect == 2);
    }
}

TEST_CASE("gamma triple invariants for all triples with z <= 100") {
    auto triples = pythagorean_triples(100);
    CHECK(triples.size() > 20);
    ExactMatrix id = ExactMatrix::identity(2);
    for (const auto& [x, y, z] : triples) {
        GammaTriple t = build_gamma_triple(x, y, z);
        CHECK(Scalar(Rational(z)) * t.gz == Scalar(Rational(x)) * t.gx + Scalar(Rational(y)) * t.gy);
        CHECK(mat_pow(t.gx, 2) == id);
        CHECK(mat_pow(t.gy, 2) == id);
        CHECK(mat_pow(t.gz, 2) == id);
        CHECK((t.gx * t.gy + t.gy * t.gx).is_zero());
        CHECK(t.gz.trace().is_zero());
        CHECK(t.gz.determinant() == Scalar(-1));
    }
}

TEST_CASE("clock and shift satisfy the generalized Clifford relations") {
    for (unsigned n = 2; n <= 6; ++n) {
        auto [u, v] = clock_shift(n);
        Scalar omega = Scalar::zeta(n);
        CHECK(mat_pow(u, n) == ExactMatrix::identity(n));
        CHECK(mat_pow(v, n) == ExactMatrix::identity(n));
        CHECK((v * u - omega * (u * v)).is_zero());
    }
    CHECK_THROWS_AS(clock_shift(1), domain_error);
}

TEST_CASE("clock_shift(2) is the involution pair") {
    auto [u, v] = clock_shift(2);
    CHECK(u == pauli_z());
    CHECK(v == pauli_x());
}

TEST_CASE("evaluate connects the ansatz to matrices") {
    GammaTriple t = build_gamma_triple(3, 4, 5);
    NCPoly form = NCPoly::term(Scalar(1), CommMonomial::var("x"), Word{"X"}) +
                  NCPoly::term(Scalar(1), CommMonomial::var("y"), Word{"Y"});
    ExactMatrix lhs = evaluate(form, {{"X", t.gx}, {"Y", t.gy}}, {{"x", Scalar(3)}, {"y", Scalar(4)}});
    CHECK(lhs == Scalar(5) * t.gz);

    CHECK(evaluate(NCPoly::one(), {{"X", t.gx}}) == ExactMatrix::identity(2));
    CHECK_THROWS_AS(evaluate(NCPoly::symbol("Z"), {{"X", t.gx}}), missing_binding);
    CHECK_THROWS_AS(evaluate(form, {{"X", t.gx}, {"Y", t.gy}}, {{"x", Scalar(3)}}),
                    missing_binding);
}

TEST_CASE("clock/shift satisfies the whole perm-sum family") {
    for (unsigned n = 2; n <= 6; ++n) {
        auto [u, v] = clock_shift(n);
        std::map<std::string, ExactMatrix> assign{{"X", u}, {"Y", v}};
        for (unsigned k = 1; k < n; ++k) CHECK(evaluate(perm_sum(n, k), assign).is_zero());
    }
}

TEST_CASE("clock/shift cube realizes 1 + 8 = 9") {
    auto [u, v] = clock_shift(3);
    NCPoly form = NCPoly::term(Scalar(1), CommMonomial::var("x"), Word{"X"}) +
                  NCPoly::term(Scalar(1), CommMonomial::var("y"), Word{"Y"});
    ExactMatrix linear = evaluate(form, {{"X", u}, {"Y", v}}, {{"x", Scalar(1)}, {"y", Scalar(2)}});
    CHECK(mat_pow(linear, 3) == Scalar(9) * ExactMatrix::identity(3));
}

TEST_CASE("scalar_multiple_of_identity") {
    CHECK(ExactMatrix::identity(3).scalar_multiple_of_identity() == Scalar(1));
    GammaTriple t = build_gamma_triple(3, 4, 5);
    CHECK(mat_pow(t.gz, 2).scalar_multiple_of_identity() == Scalar(1));
    ExactMatrix m = ExactMatrix::identity(2);
    m.at(0, 1) = Scalar(1);
    CHECK_FALSE(m.scalar_multiple_of_identity().has_value());
}

TEST_CASE("evaluate is a homomorphism: expand then evaluate = evaluate then power") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (unsigned n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            ExactMatrix a(3), b(3);
            for (unsigned i = 0; i < 3; ++i)
                for (unsigned j = 0; j < 3; ++j) {
                    a.at(i, j) = Scalar(entry(rng));
                    b.at(i, j) = Scalar(entry(rng));
                }
            Scalar xv(entry(rng)), yv(entry(rng));
            NCPoly expansion = expand_power({{"x", "X"}, {"y", "Y"}}, n);
            ExactMatrix via_poly =
                evaluate(expansion, {{"X", a}, {"Y", b}}, {{"x", xv}, {"y", yv}});
            ExactMatrix linear = xv * a + yv * b;
            CHECK(via_poly == mat_pow(linear, n));
        }
    }
}
