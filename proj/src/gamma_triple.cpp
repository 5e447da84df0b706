#include "gammalin/gamma_triple.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace gammalin {

ExactMatrix pauli_x() {
    ExactMatrix m(2);
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = Scalar(1);
    return m;
}

ExactMatrix pauli_z() {
    ExactMatrix m(2);
    m.at(0, 0) = Scalar(1);
    m.at(1, 1) = Scalar(-1);
    return m;
}

GammaTriple build_gamma_triple(long x, long y, long z) {
    if (x <= 0 || y <= 0 || z <= 0) throw domain_error("build_gamma_triple: entries must be positive");
    long defect = z * z - x * x - y * y;
    if (defect != 0)
        throw not_a_triple(defect, "not a Pythagorean triple (defect " + std::to_string(defect) + ")");
    GammaTriple t;
    t.x = x;
    t.y = y;
    t.z = z;
    t.gx = pauli_x();
    t.gy = pauli_z();
    t.gz = ExactMatrix(2);
    t.gz.at(0, 0) = Scalar(Rational(y, z));
    t.gz.at(0, 1) = Scalar(Rational(x, z));
    t.gz.at(1, 0) = Scalar(Rational(x, z));
    t.gz.at(1, 1) = Scalar(Rational(-y, z));
    return t;
}

std::vector<std::array<long, 3>> pythagorean_triples(long z_max) {
    std::set<std::array<long, 3>> out;
    for (long m = 2; m * m <= z_max; ++m) {
        for (long n = 1; n < m; ++n) {
            if ((m - n) % 2 == 0 || std::gcd(m, n) != 1) continue;
            long a = m * m - n * n, b = 2 * m * n, c = m * m + n * n;
            if (a > b) std::swap(a, b);
            for (long k = 1; k * c <= z_max; ++k) out.insert({k * a, k * b, k * c});
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace gammalin
