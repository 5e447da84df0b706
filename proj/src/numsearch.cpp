#include "gammalin/numsearch.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gammalin {

FloatMatrix FloatMatrix::identity(unsigned d) {
    FloatMatrix m(d);
    for (unsigned i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

FloatMatrix mul(const FloatMatrix& a, const FloatMatrix& b) {
    if (a.dim != b.dim) throw shape_error("float matrix dimension mismatch");
    unsigned d = a.dim;
    FloatMatrix r(d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned k = 0; k < d; ++k) {
            const std::complex<double> aik = a.at(i, k);
            for (unsigned j = 0; j < d; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

FloatMatrix adjoint(const FloatMatrix& a) {
    FloatMatrix r(a.dim);
    for (unsigned i = 0; i < a.dim; ++i)
        for (unsigned j = 0; j < a.dim; ++j) r.at(i, j) = std::conj(a.at(j, i));
    return r;
}

double frobenius_sq(const FloatMatrix& a) {
    double s = 0;
    for (const auto& e : a.entries) s += std::norm(e);
    return s;
}

namespace {

void sub_identity(FloatMatrix& m) {
    for (unsigned i = 0; i < m.dim; ++i) m.at(i, i) -= 1.0;
}

// All distinct 0/1 words with n-k zeros (A) and k ones (B).
std::vector<std::vector<int>> arrangements(unsigned n, unsigned k) {
    std::vector<int> w(n, 0);
    std::fill(w.begin() + (n - k), w.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// The constraint matrices, in a fixed order:
//   [0] A^n - 1, [1] B^n - 1, [2..n] PermSum_k(A,B) for k = 1..n-1.
std::vector<std::vector<std::vector<int>>> constraint_words(unsigned n) {
    std::vector<std::vector<std::vector<int>>> cs;
    cs.push_back({std::vector<int>(n, 0)});
    cs.push_back({std::vector<int>(n, 1)});
    for (unsigned k = 1; k < n; ++k) cs.push_back(arrangements(n, k));
    return cs;
}

FloatMatrix eval_words(const std::vector<std::vector<int>>& words, const FloatMatrix& A,
                       const FloatMatrix& B) {
    FloatMatrix sum(A.dim);
    for (const auto& w : words) {
        FloatMatrix prod = FloatMatrix::identity(A.dim);
        for (int f : w) prod = mul(prod, f == 0 ? A : B);
        for (size_t i = 0; i < sum.entries.size(); ++i) sum.entries[i] += prod.entries[i];
    }
    return sum;
}

}  // namespace

double residual(const FloatMatrix& A, const FloatMatrix& B, unsigned n) {
    if (A.dim != B.dim) throw shape_error("residual: dimension mismatch");
    auto cs = constraint_words(n);
    double total = 0;
    for (size_t c = 0; c < cs.size(); ++c) {
        FloatMatrix m = eval_words(cs[c], A, B);
        if (c < 2) sub_identity(m);
        total += frobenius_sq(m);
    }
    return total;
}

void residual_gradient(const FloatMatrix& A, const FloatMatrix& B, unsigned n, FloatMatrix& gA,
                       FloatMatrix& gB) {
    if (A.dim != B.dim) throw shape_error("residual_gradient: dimension mismatch");
    const unsigned d = A.dim;
    gA = FloatMatrix(d);
    gB = FloatMatrix(d);
    auto cs = constraint_words(n);
    for (size_t c = 0; c < cs.size(); ++c) {
        FloatMatrix R = eval_words(cs[c], A, B);
        if (c < 2) sub_identity(R);
        // d|R|^2 = 2 Re tr(R^H dR); each word contributes L dM T, so the
        // Wirtinger gradient picks up L^H R T^H per occurrence of M.
        for (const auto& w : cs[c]) {
            const unsigned len = static_cast<unsigned>(w.size());
            // prefix products L_i and suffix products T_i
            std::vector<FloatMatrix> prefix(len + 1), suffix(len + 1);
            prefix[0] = FloatMatrix::identity(d);
            for (unsigned i = 0; i < len; ++i) prefix[i + 1] = mul(prefix[i], w[i] == 0 ? A : B);
            suffix[len] = FloatMatrix::identity(d);
            for (unsigned i = len; i-- > 0;) suffix[i] = mul(w[i] == 0 ? A : B, suffix[i + 1]);
            for (unsigned i = 0; i < len; ++i) {
                FloatMatrix g = mul(mul(adjoint(prefix[i]), R), adjoint(suffix[i + 1]));
                FloatMatrix& target = (w[i] == 0) ? gA : gB;
                for (size_t e = 0; e < g.entries.size(); ++e) target.entries[e] += 2.0 * g.entries[e];
            }
        }
    }
}

double grad_check(const FloatMatrix& A, const FloatMatrix& B, unsigned n) {
    FloatMatrix gA, gB;
    residual_gradient(A, B, n, gA, gB);
    const double h = 1e-6;
    double max_rel = 0;
    auto probe = [&](FloatMatrix m, bool is_a, unsigned i, unsigned j, bool imag_part, double analytic) {
        auto shift = [&](double delta) {
            std::complex<double> e = m.at(i, j);
            m.at(i, j) = imag_part ? std::complex<double>(e.real(), e.imag() + delta)
                                   : std::complex<double>(e.real() + delta, e.imag());
            double f = is_a ? residual(m, B, n) : residual(A, m, n);
            m.at(i, j) = e;
            return f;
        };
        double fd = (shift(h) - shift(-h)) / (2 * h);
        double denom = std::max({1.0, std::abs(fd), std::abs(analytic)});
        max_rel = std::max(max_rel, std::abs(fd - analytic) / denom);
    };
    for (unsigned i = 0; i < A.dim; ++i)
        for (unsigned j = 0; j < A.dim; ++j) {
            probe(A, true, i, j, false, gA.at(i, j).real());
            probe(A, true, i, j, true, gA.at(i, j).imag());
            probe(B, false, i, j, false, gB.at(i, j).real());
            probe(B, false, i, j, true, gB.at(i, j).imag());
        }
    return max_rel;
}

namespace {

struct RestartOutcome {
    double residual = 0;
    FloatMatrix A, B;
    unsigned iterations = 0;
};

FloatMatrix random_matrix(unsigned d, std::mt19937_64& rng, bool real_only) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    FloatMatrix m(d);
    for (auto& e : m.entries) {
        if (real_only) {
            e = 2.0 * unit(rng) - 1.0;
        } else {
            // uniform on the complex unit disc
            double r = std::sqrt(unit(rng));
            double theta = 2.0 * M_PI * unit(rng);
            e = std::polar(r, theta);
        }
    }
    return m;
}

void axpy(FloatMatrix& x, double alpha, const FloatMatrix& g, bool real_only) {
    for (size_t i = 0; i < x.entries.size(); ++i) {
        std::complex<double> step = alpha * g.entries[i];
        if (real_only) step = {step.real(), 0.0};
        x.entries[i] += step;
    }
}

RestartOutcome run_restart(const SearchConfig& cfg, unsigned restart) {
    // decorrelate restart streams; the constant is an arbitrary odd mixer
    std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL * (restart + 1));
    RestartOutcome out;
    out.A = random_matrix(cfg.d, rng, cfg.real_only);
    out.B = random_matrix(cfg.d, rng, cfg.real_only);
    double f = residual(out.A, out.B, cfg.n);
    double step = cfg.step_init;
    FloatMatrix gA, gB;
    unsigned it = 0;
    for (; it < cfg.max_iters && f > cfg.tolerance && step > 1e-18; ++it) {
        residual_gradient(out.A, out.B, cfg.n, gA, gB);
        FloatMatrix trialA = out.A, trialB = out.B;
        axpy(trialA, -step, gA, cfg.real_only);
        axpy(trialB, -step, gB, cfg.real_only);
        double ft = residual(trialA, trialB, cfg.n);
        if (ft < f) {
            out.A = std::move(trialA);
            out.B = std::move(trialB);
            f = ft;
            step *= cfg.step_grow;
        } else {
            step *= cfg.step_shrink;
        }
    }
    out.residual = f;
    out.iterations = it;
    return out;
}

SearchResult merge(const SearchConfig& cfg, const std::vector<RestartOutcome>& outcomes) {
    SearchResult best;
    best.seed = cfg.seed;
    size_t best_idx = 0;
    for (size_t r = 1; r < outcomes.size(); ++r)
        if (outcomes[r].residual < outcomes[best_idx].residual) best_idx = r;
    const RestartOutcome& o = outcomes[best_idx];
    best.best_residual = o.residual;
    best.A = o.A;
    best.B = o.B;
    best.restart_index = static_cast<unsigned>(best_idx);
    best.iterations_used = o.iterations;
    return best;
}

}  // namespace

SearchResult search_serial(const SearchConfig& cfg) {
    std::vector<RestartOutcome> outcomes(cfg.restarts);
    for (unsigned r = 0; r < cfg.restarts; ++r) outcomes[r] = run_restart(cfg, r);
    return merge(cfg, outcomes);
}

SearchResult search(const SearchConfig& cfg) {
    std::vector<RestartOutcome> outcomes(cfg.restarts);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < static_cast<int>(cfg.restarts); ++r)
        outcomes[static_cast<unsigned>(r)] = run_restart(cfg, static_cast<unsigned>(r));
    return merge(cfg, outcomes);
}

}  // namespace gammalin
