#include "gammalin/witness.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gammalin/gamma_triple.hpp"

namespace gammalin {

namespace {

ExactMatrix matrix_from_strings(const nlohmann::json& arr, unsigned dim, unsigned field_order,
                                const std::string& name) {
    if (!arr.is_array() || arr.size() != static_cast<size_t>(dim) * dim)
        throw domain_error("witness: '" + name + "' must be a row-major array of dim*dim strings");
    ExactMatrix m(dim);
    size_t idx = 0;
    for (const auto& cell : arr) {
        if (!cell.is_string()) throw domain_error("witness: entries must be exact-scalar strings");
        Scalar s = Scalar::parse(cell.get<std::string>());
        if (s.order() != 1 && field_order == 1)
            throw field_error("witness: cyclotomic entry in a rational-field witness");
        if (s.order() != 1 && s.order() != field_order)
            throw field_error("witness: entry of order " + std::to_string(s.order()) +
                              " in a cyclotomic:" + std::to_string(field_order) + " witness");
        m.at(static_cast<unsigned>(idx / dim), static_cast<unsigned>(idx % dim)) = s;
        ++idx;
    }
    return m;
}

}  // namespace

Witness parse_witness_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("dim") || !j.contains("field") || !j.contains("gx") || !j.contains("gy"))
        throw domain_error("witness: required keys are dim, field, gx, gy");
    unsigned dim = j["dim"].get<unsigned>();
    if (dim == 0) throw domain_error("witness: dim must be positive");
    std::string field = j["field"].get<std::string>();
    unsigned order = 1;
    if (field.rfind("cyclotomic:", 0) == 0) {
        order = static_cast<unsigned>(std::stoul(field.substr(11)));
        if (order == 0) throw domain_error("witness: cyclotomic order must be positive");
    } else if (field != "rational") {
        throw domain_error("witness: field must be 'rational' or 'cyclotomic:<n>'");
    }
    Witness w;
    w.gx = matrix_from_strings(j["gx"], dim, order, "gx");
    w.gy = matrix_from_strings(j["gy"], dim, order, "gy");
    return w;
}

Witness load_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open witness file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_witness_json(buf.str());
}

Witness resolve_witness(const std::string& spec) {
    if (spec == "builtin:pauli") return {pauli_x(), pauli_z()};
    if (spec == "builtin:clock3") {
        auto [u, v] = clock_shift(3);
        return {u, v};
    }
    if (spec.rfind("builtin:", 0) == 0) throw domain_error("unknown builtin witness: " + spec);
    return load_witness_file(spec);
}

std::string witness_to_json(const Witness& w, unsigned field_order) {
    nlohmann::json j;
    j["dim"] = w.gx.dim();
    j["field"] = field_order == 1 ? "rational" : "cyclotomic:" + std::to_string(field_order);
    auto dump = [](const ExactMatrix& m) {
        nlohmann::json arr = nlohmann::json::array();
        for (unsigned i = 0; i < m.dim(); ++i)
            for (unsigned jj = 0; jj < m.dim(); ++jj) arr.push_back(m.at(i, jj).str());
        return arr;
    };
    j["gx"] = dump(w.gx);
    j["gy"] = dump(w.gy);
    return j.dump(2);
}

}  // namespace gammalin
