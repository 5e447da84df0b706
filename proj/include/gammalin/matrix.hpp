#ifndef GAMMALIN_MATRIX_HPP
#define GAMMALIN_MATRIX_HPP

#include <map>
#include <optional>
#include <string>

#include "gammalin/ncpoly.hpp"

namespace gammalin {

/// Dense square matrix over exact scalars.
class ExactMatrix {
   public:
    ExactMatrix() : dim_(0) {}
    explicit ExactMatrix(unsigned dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim, Scalar(0)) {}

    static ExactMatrix identity(unsigned dim);
    static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    unsigned dim() const { return dim_; }
    Scalar& at(unsigned i, unsigned j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    const Scalar& at(unsigned i, unsigned j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }

    bool is_zero() const;

    ExactMatrix operator-() const;
    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const Scalar& c, const ExactMatrix& m);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    Scalar trace() const;
    Scalar determinant() const;  // fraction-free Gaussian elimination

    /// c when the matrix equals c * identity exactly, nullopt otherwise.
    std::optional<Scalar> scalar_multiple_of_identity() const;

    /// "[[4/5, 3/5], [3/5, -4/5]]"
    std::string str() const;

   private:
    unsigned dim_;
    std::vector<Scalar> entries_;
};

ExactMatrix mat_pow(const ExactMatrix& a, unsigned k);

/// Clock/shift pair over Q(zeta_n): U = diag(1, w, ..., w^{n-1}),
/// V the cyclic shift; U^n = V^n = 1 and V*U = w*U*V.
std::pair<ExactMatrix, ExactMatrix> clock_shift(unsigned n);

/// Exact evaluation of a noncommutative polynomial at a matrix assignment
/// for its symbols and a scalar assignment for its commutative variables.
ExactMatrix evaluate(const NCPoly& p, const std::map<std::string, ExactMatrix>& symbols,
                     const std::map<std::string, Scalar>& variables = {});

}  // namespace gammalin

#endif
