#include "gammalin/dirac.hpp"

#include <json.hpp>

namespace gammalin {

namespace {

// 2x2 Pauli matrices over Q(zeta_4); i = zeta_4.
ExactMatrix sigma(unsigned i) {
    ExactMatrix m(2);
    const Scalar im = Scalar::zeta(4);
    switch (i) {
        case 1:
            m.at(0, 1) = Scalar(1);
            m.at(1, 0) = Scalar(1);
            break;
        case 2:
            m.at(0, 1) = -im;
            m.at(1, 0) = im;
            break;
        case 3:
            m.at(0, 0) = Scalar(1);
            m.at(1, 1) = Scalar(-1);
            break;
        default:
            throw domain_error("sigma index must be 1, 2 or 3");
    }
    return m;
}

ExactMatrix off_diagonal_block(const ExactMatrix& b) {
    unsigned d = b.dim();
    ExactMatrix m(2 * d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
            m.at(i, d + j) = b.at(i, j);
            m.at(d + i, j) = b.at(i, j);
        }
    return m;
}

}  // namespace

DiracSet standard_dirac_set() {
    DiracSet s;
    s.dim = 4;
    for (unsigned i = 0; i < 3; ++i) s.alphas[i] = off_diagonal_block(sigma(i + 1));
    s.beta = ExactMatrix(4);
    s.beta.at(0, 0) = Scalar(1);
    s.beta.at(1, 1) = Scalar(1);
    s.beta.at(2, 2) = Scalar(-1);
    s.beta.at(3, 3) = Scalar(-1);
    return s;
}

namespace {
void push_check(AlgebraReport& rep, const std::string& name, const ExactMatrix& defect) {
    RelationVerdict v;
    v.name = name;
    v.passed = defect.is_zero();
    if (!v.passed) v.defect = defect;
    rep.relations.push_back(std::move(v));
}
}  // namespace

AlgebraReport verify_dirac_algebra(const DiracSet& s) {
    const unsigned d = s.beta.dim();
    for (const auto& a : s.alphas)
        if (a.dim() != d) throw shape_error("verify_dirac_algebra: mixed dimensions");
    const ExactMatrix one = ExactMatrix::identity(d);

    AlgebraReport rep;
    for (unsigned i = 0; i < 3; ++i)
        push_check(rep, "(alpha" + std::to_string(i + 1) + ")^2 = 1", s.alphas[i] * s.alphas[i] - one);
    push_check(rep, "beta^2 = 1", s.beta * s.beta - one);
    for (unsigned i = 0; i < 3; ++i)
        push_check(rep, "{alpha" + std::to_string(i + 1) + ", beta} = 0",
                   s.alphas[i] * s.beta + s.beta * s.alphas[i]);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = i + 1; j < 3; ++j)
            push_check(rep, "{alpha" + std::to_string(i + 1) + ", alpha" + std::to_string(j + 1) + "} = 0",
                       s.alphas[i] * s.alphas[j] + s.alphas[j] * s.alphas[i]);
    rep.all_pass = true;
    for (const auto& v : rep.relations) rep.all_pass = rep.all_pass && v.passed;
    return rep;
}

RelationSet dirac_relations(bool include_beta_anticommutation) {
    RelationSet rs({"A1", "A2", "A3", "B"});
    const std::vector<std::string> a = {"A1", "A2", "A3"};
    for (const auto& s : a) rs.add_rule(Word{s, s}, NCPoly::one());
    rs.add_rule(Word{"B", "B"}, NCPoly::one());
    // normal ordering: move lower-ranked symbols left, flipping signs
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            rs.add_rule(Word{a[i], a[j]}, Scalar(-1) * NCPoly::word(Word{a[j], a[i]}));
    if (include_beta_anticommutation)
        for (const auto& s : a) rs.add_rule(Word{"B", s}, Scalar(-1) * NCPoly::word(Word{s, "B"}));
    return rs;
}

NCPoly hamiltonian_square_symbolic() {
    NCPoly h2 = expand_power({{"p1", "A1"}, {"p2", "A2"}, {"p3", "A3"}, {"m", "B"}}, 2);
    return dirac_relations().reduce(h2);
}

std::array<ExactMatrix, 4> gamma_basis(const DiracSet& s) {
    return {s.beta, s.beta * s.alphas[0], s.beta * s.alphas[1], s.beta * s.alphas[2]};
}

AlgebraReport verify_clifford(const std::array<ExactMatrix, 4>& gammas, const MetricSignature& eta) {
    const unsigned d = gammas[0].dim();
    for (const auto& g : gammas)
        if (g.dim() != d) throw shape_error("verify_clifford: mixed dimensions");
    const ExactMatrix one = ExactMatrix::identity(d);

    AlgebraReport rep;
    for (unsigned mu = 0; mu < 4; ++mu)
        for (unsigned nu = mu; nu < 4; ++nu) {
            long expected = (mu == nu) ? 2L * eta.eta[mu] : 0L;
            ExactMatrix defect =
                gammas[mu] * gammas[nu] + gammas[nu] * gammas[mu] - Scalar(expected) * one;
            push_check(rep,
                       "{gamma" + std::to_string(mu) + ", gamma" + std::to_string(nu) + "} = " +
                           std::to_string(expected) + "*1",
                       defect);
        }
    rep.all_pass = true;
    for (const auto& v : rep.relations) rep.all_pass = rep.all_pass && v.passed;
    return rep;
}

std::string AlgebraReport::to_json() const {
    nlohmann::json j;
    j["relations"] = nlohmann::json::array();
    for (const auto& r : relations) {
        nlohmann::json rj;
        rj["name"] = r.name;
        rj["passed"] = r.passed;
        if (!r.passed) {
            nlohmann::json rows = nlohmann::json::array();
            for (unsigned i = 0; i < r.defect.dim(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (unsigned jj = 0; jj < r.defect.dim(); ++jj) row.push_back(r.defect.at(i, jj).str());
                rows.push_back(row);
            }
            rj["defect"] = rows;
        }
        j["relations"].push_back(rj);
    }
    j["all_pass"] = all_pass;
    return j.dump(2);
}

}  // namespace gammalin
