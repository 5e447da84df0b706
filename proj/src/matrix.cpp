#include "gammalin/matrix.hpp"

#include <sstream>

namespace gammalin {

namespace {
void check_dims(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim())
        throw shape_error("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
}
}  // namespace

ExactMatrix ExactMatrix::identity(unsigned dim) {
    ExactMatrix m(dim);
    for (unsigned i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    unsigned d = static_cast<unsigned>(rows.size());
    ExactMatrix m(d);
    for (unsigned i = 0; i < d; ++i) {
        if (rows[i].size() != d) throw shape_error("matrix rows must form a square array");
        for (unsigned j = 0; j < d; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    check_dims(*this, o);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    check_dims(*this, o);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    check_dims(a, b);
    unsigned d = a.dim();
    ExactMatrix r(d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned k = 0; k < d; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (unsigned j = 0; j < d; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

ExactMatrix operator*(const Scalar& c, const ExactMatrix& m) {
    ExactMatrix r = m;
    for (unsigned i = 0; i < r.dim(); ++i)
        for (unsigned j = 0; j < r.dim(); ++j) r.at(i, j) = c * r.at(i, j);
    return r;
}

Scalar ExactMatrix::trace() const {
    Scalar t(0);
    for (unsigned i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

Scalar ExactMatrix::determinant() const {
    // Gaussian elimination with exact division; entries live in a field.
    ExactMatrix m = *this;
    Scalar det(1);
    for (unsigned col = 0; col < dim_; ++col) {
        unsigned pivot = col;
        while (pivot < dim_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == dim_) return Scalar(0);
        if (pivot != col) {
            for (unsigned j = 0; j < dim_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        const Scalar p = m.at(col, col);
        det *= p;
        for (unsigned i = col + 1; i < dim_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) / p;
            for (unsigned j = col; j < dim_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

std::optional<Scalar> ExactMatrix::scalar_multiple_of_identity() const {
    if (dim_ == 0) return std::nullopt;
    const Scalar c = at(0, 0);
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) {
            if (i == j) {
                if (at(i, j) != c) return std::nullopt;
            } else if (!at(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    return c;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (unsigned i = 0; i < dim_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (unsigned j = 0; j < dim_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

ExactMatrix mat_pow(const ExactMatrix& a, unsigned k) {
    ExactMatrix acc = ExactMatrix::identity(a.dim());
    ExactMatrix b = a;
    while (k > 0) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

std::pair<ExactMatrix, ExactMatrix> clock_shift(unsigned n) {
    if (n < 2) throw domain_error("clock_shift: order must be at least 2");
    Scalar omega = Scalar::zeta(n);
    ExactMatrix clock(n), shift(n);
    for (unsigned i = 0; i < n; ++i) {
        clock.at(i, i) = pow(omega, static_cast<long>(i));
        shift.at(i, (i + 1) % n) = Scalar(1);
    }
    return {clock, shift};
}

ExactMatrix evaluate(const NCPoly& p, const std::map<std::string, ExactMatrix>& symbols,
                     const std::map<std::string, Scalar>& variables) {
    unsigned dim = 0;
    for (const auto& [name, m] : symbols) {
        if (dim == 0) dim = m.dim();
        if (m.dim() != dim)
            throw shape_error("evaluate: assigned matrices have mixed dimensions");
    }
    if (dim == 0) throw missing_binding("evaluate: no symbol assignment to fix the dimension");

    ExactMatrix acc(dim);
    for (const auto& [key, coeff] : p.terms()) {
        Scalar c = coeff;
        for (const auto& [var, e] : key.mono.exponents) {
            auto it = variables.find(var);
            if (it == variables.end()) throw missing_binding("evaluate: unbound variable '" + var + "'");
            c *= pow(it->second, static_cast<long>(e));
        }
        ExactMatrix prod = ExactMatrix::identity(dim);
        for (const auto& sym : key.word.symbols) {
            auto it = symbols.find(sym);
            if (it == symbols.end()) throw missing_binding("evaluate: unbound symbol '" + sym + "'");
            prod = prod * it->second;
        }
        acc += c * prod;
    }
    return acc;
}

}  // namespace gammalin
