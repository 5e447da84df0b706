#ifndef GAMMALIN_NUMSEARCH_HPP
#define GAMMALIN_NUMSEARCH_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "gammalin/errors.hpp"

namespace gammalin {

/// Dense complex matrix for the floating-point constraint probe.
struct FloatMatrix {
    unsigned dim = 0;
    std::vector<std::complex<double>> entries;

    FloatMatrix() = default;
    explicit FloatMatrix(unsigned d) : dim(d), entries(static_cast<size_t>(d) * d) {}

    static FloatMatrix identity(unsigned d);

    std::complex<double>& at(unsigned i, unsigned j) { return entries[static_cast<size_t>(i) * dim + j]; }
    const std::complex<double>& at(unsigned i, unsigned j) const {
        return entries[static_cast<size_t>(i) * dim + j];
    }
};

FloatMatrix mul(const FloatMatrix& a, const FloatMatrix& b);
FloatMatrix adjoint(const FloatMatrix& a);
double frobenius_sq(const FloatMatrix& a);

/// Constraint residual at power n:
///   |A^n - 1|_F^2 + |B^n - 1|_F^2 + sum_{k=1}^{n-1} |PermSum_k(A,B)|_F^2.
/// Zero exactly when (A, B) satisfies the whole relation family.
double residual(const FloatMatrix& A, const FloatMatrix& B, unsigned n);

/// Analytic gradient of residual with respect to the real/imag parts of
/// the entries, packed as complex matrices: dres/dRe(A_ij) = gA.at(i,j).real(),
/// dres/dIm(A_ij) = gA.at(i,j).imag().
void residual_gradient(const FloatMatrix& A, const FloatMatrix& B, unsigned n, FloatMatrix& gA,
                       FloatMatrix& gB);

/// Max relative deviation between the analytic gradient and central finite
/// differences (h = 1e-6) over every real coordinate.
double grad_check(const FloatMatrix& A, const FloatMatrix& B, unsigned n);

struct SearchConfig {
    unsigned n = 2;
    unsigned d = 2;
    unsigned restarts = 32;
    unsigned max_iters = 10000;
    double step_init = 1e-2;
    double step_grow = 1.2;
    double step_shrink = 0.5;
    double tolerance = 1e-12;
    std::uint64_t seed = 0;
    bool real_only = false;
};

struct SearchResult {
    double best_residual = 0.0;
    FloatMatrix A, B;
    unsigned restart_index = 0;
    unsigned iterations_used = 0;
    std::uint64_t seed = 0;
};

/// Gradient descent with adaptive step over seeded random restarts; fully
/// deterministic for a fixed config. Restarts run in parallel (OpenMP).
SearchResult search(const SearchConfig& config);

/// Serial reference implementation; returns bit-identical results to
/// search() for the same config.
SearchResult search_serial(const SearchConfig& config);

}  // namespace gammalin

#endif
