#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gammalin/gamma_triple.hpp"
#include "gammalin/matrix.hpp"
#include "gammalin/numsearch.hpp"

using namespace gammalin;

namespace {

FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix f(m.dim());
    for (unsigned i = 0; i < m.dim(); ++i)
        for (unsigned j = 0; j < m.dim(); ++j) f.at(i, j) = m.at(i, j).to_complex();
    return f;
}

FloatMatrix random_float(unsigned d, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FloatMatrix m(d);
    for (auto& e : m.entries) e = {u(rng), u(rng)};
    return m;
}

}  // namespace

TEST_CASE("residual vanishes at the exact involution pair") {
    FloatMatrix a = to_float(pauli_x());
    FloatMatrix b = to_float(pauli_z());
    CHECK(residual(a, b, 2) < 1e-15);
}

TEST_CASE("residual at the all-identity point is 18d for n=3") {
    for (unsigned d : {1u, 2u, 3u}) {
        FloatMatrix id = FloatMatrix::identity(d);
        CHECK(residual(id, id, 3) == doctest::Approx(18.0 * d).epsilon(1e-12));
    }
}

TEST_CASE("residual is tiny at the float image of clock/shift") {
    auto [u, v] = clock_shift(3);
    CHECK(residual(to_float(u), to_float(v), 3) < 1e-12);
}

TEST_CASE("residual shape mismatch") {
    CHECK_THROWS_AS(residual(FloatMatrix::identity(2), FloatMatrix::identity(3), 2), shape_error);
}

TEST_CASE("gradient matches finite differences") {
    std::mt19937 rng(5);
    for (unsigned n : {2u, 3u}) {
        for (unsigned d : {2u, 3u}) {
            for (int trial = 0; trial < 5; ++trial) {
                FloatMatrix a = random_float(d, rng), b = random_float(d, rng);
                CHECK(grad_check(a, b, n) < 1e-5);
            }
        }
    }
}

TEST_CASE("gradient vanishes at an exact solution") {
    FloatMatrix a = to_float(pauli_x());
    FloatMatrix b = to_float(pauli_z());
    FloatMatrix ga, gb;
    residual_gradient(a, b, 2, ga, gb);
    CHECK(std::sqrt(frobenius_sq(ga) + frobenius_sq(gb)) < 1e-8);
}

TEST_CASE("residual is invariant under unitary conjugation") {
    std::mt19937 rng(13);
    unsigned d = 3;
    // orthonormalize a random matrix into Q
    FloatMatrix raw = random_float(d, rng);
    FloatMatrix q(d);
    for (unsigned c = 0; c < d; ++c) {
        std::vector<std::complex<double>> col(d);
        for (unsigned r = 0; r < d; ++r) col[r] = raw.at(r, c);
        for (unsigned prev = 0; prev < c; ++prev) {
            std::complex<double> proj = 0;
            for (unsigned r = 0; r < d; ++r) proj += std::conj(q.at(r, prev)) * col[r];
            for (unsigned r = 0; r < d; ++r) col[r] -= proj * q.at(r, prev);
        }
        double norm = 0;
        for (const auto& e : col) norm += std::norm(e);
        norm = std::sqrt(norm);
        for (unsigned r = 0; r < d; ++r) q.at(r, c) = col[r] / norm;
    }
    FloatMatrix qh = adjoint(q);
    FloatMatrix a = random_float(d, rng), b = random_float(d, rng);
    FloatMatrix ca = mul(mul(q, a), qh), cb = mul(mul(q, b), qh);
    for (unsigned n : {2u, 3u, 4u}) {
        double r0 = residual(a, b, n);
        double r1 = residual(ca, cb, n);
        CHECK(std::abs(r0 - r1) / std::max(1.0, r0) < 1e-10);
    }
}

TEST_CASE("residual symmetry under role swap") {
    std::mt19937 rng(17);
    FloatMatrix a = random_float(3, rng), b = random_float(3, rng);
    for (unsigned n : {2u, 3u, 4u}) CHECK(residual(a, b, n) == doctest::Approx(residual(b, a, n)));
}

TEST_CASE("search finds the solvable instances") {
    SearchConfig cfg;
    cfg.n = 2;
    cfg.d = 2;
    cfg.seed = 42;
    SearchResult r = search(cfg);
    CHECK(r.best_residual < 1e-10);

    cfg.n = 3;
    cfg.d = 3;
    SearchResult r3 = search(cfg);
    CHECK(r3.best_residual < 1e-8);
}

TEST_CASE("scalar n=3 case has a positive residual floor") {
    // 1-D brute-force grid over the complex unit disc, locally refined
    auto scalar_residual = [](std::complex<double> a, std::complex<double> b) {
        FloatMatrix A(1), B(1);
        A.at(0, 0) = a;
        B.at(0, 0) = b;
        return residual(A, B, 3);
    };
    double best = 1e300;
    std::complex<double> best_a, best_b;
    for (double ar = -1; ar <= 1; ar += 0.1)
        for (double ai = -1; ai <= 1; ai += 0.1)
            for (double br = -1; br <= 1; br += 0.1)
                for (double bi = -1; bi <= 1; bi += 0.1) {
                    double v = scalar_residual({ar, ai}, {br, bi});
                    if (v < best) {
                        best = v;
                        best_a = {ar, ai};
                        best_b = {br, bi};
                    }
                }
    // local refinement around the grid minimum
    double step = 0.05;
    while (step > 1e-4) {
        bool improved = false;
        for (int da = -1; da <= 1; ++da)
            for (int db = -1; db <= 1; ++db)
                for (int dc = -1; dc <= 1; ++dc)
                    for (int dd = -1; dd <= 1; ++dd) {
                        std::complex<double> a = best_a + std::complex<double>(da * step, db * step);
                        std::complex<double> b = best_b + std::complex<double>(dc * step, dd * step);
                        double v = scalar_residual(a, b);
                        if (v < best) {
                            best = v;
                            best_a = a;
                            best_b = b;
                            improved = true;
                        }
                    }
        if (!improved) step *= 0.5;
    }
    CHECK(best >= 0.5);

    // the search agrees with the brute-force floor
    SearchConfig cfg;
    cfg.n = 3;
    cfg.d = 1;
    cfg.seed = 1;
    cfg.restarts = 8;
    SearchResult r = search(cfg);
    CHECK(r.best_residual >= 0.5);
}

TEST_CASE("search is deterministic and matches the serial reference") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.d = 2;
    cfg.seed = 7;
    cfg.restarts = 8;
    cfg.max_iters = 500;
    SearchResult a = search(cfg);
    SearchResult b = search(cfg);
    SearchResult c = search_serial(cfg);
    CHECK(a.best_residual == b.best_residual);
    CHECK(a.best_residual == c.best_residual);
    CHECK(a.restart_index == b.restart_index);
    CHECK(a.restart_index == c.restart_index);
}

TEST_CASE("clock/shift witnesses are reached for n up to 5") {
    for (unsigned n = 2; n <= 5; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.d = n;
        cfg.seed = 42;
        SearchResult r = search(cfg);
        CHECK(r.best_residual < 1e-8);
    }
}

TEST_CASE("reported residual matches a recomputation") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.d = 2;
    cfg.seed = 3;
    cfg.restarts = 4;
    cfg.max_iters = 200;
    SearchResult r = search(cfg);
    double recomputed = residual(r.A, r.B, cfg.n);
    CHECK(std::abs(recomputed - r.best_residual) <=
          1e-15 * std::max(1.0, std::abs(r.best_residual)) + 1e-300);
}
