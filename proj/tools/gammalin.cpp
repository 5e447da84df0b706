#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gammalin/dirac.hpp"
#include "gammalin/gamma_triple.hpp"
#include "gammalin/linearize.hpp"
#include "gammalin/numsearch.hpp"
#include "gammalin/specdsl.hpp"
#include "gammalin/witness.hpp"

using nlohmann::json;

namespace {

json matrix_json(const gammalin::ExactMatrix& m) {
    json rows = json::array();
    for (unsigned i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (unsigned j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

int run_triple(long x, long y, long z, const std::string& format) {
    gammalin::GammaTriple t;
    try {
        t = gammalin::build_gamma_triple(x, y, z);
    } catch (const gammalin::not_a_triple& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    auto rep = gammalin::certify_solution(2, x, y, z, t.gx, t.gy);
    if (format == "json") {
        json j;
        j["triple"] = {x, y, z};
        j["gx"] = matrix_json(t.gx);
        j["gy"] = matrix_json(t.gy);
        j["gz"] = matrix_json(t.gz);
        j["gz_trace"] = t.gz.trace().str();
        j["gz_det"] = t.gz.determinant().str();
        j["all_algebraic_pass"] = rep.all_algebraic_pass;
        j["gz_power_check"] = rep.gz_power_check;
        j["fermat_check"] = rep.fermat_check;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "triple (" << x << ", " << y << ", " << z << ")\n";
        std::cout << "gx = " << t.gx.str() << "\n";
        std::cout << "gy = " << t.gy.str() << "\n";
        std::cout << "gz = " << t.gz.str() << "\n";
        std::cout << "trace(gz) = " << t.gz.trace().str() << ", det(gz) = " << t.gz.determinant().str()
                  << "\n";
        for (const auto& c : rep.constraints)
            std::cout << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
        std::cout << "gz^2 = 1: " << (rep.gz_power_check ? "pass" : "FAIL") << "\n";
        std::cout << "z^2 = x^2 + y^2: " << (rep.fermat_check ? "pass" : "FAIL") << "\n";
    }
    return 0;
}

int run_constraints(unsigned n, const std::string& format) {
    auto sys = gammalin::constraint_system(n);
    auto verdict = gammalin::paper_compatibility(n);
    if (format == "json") {
        json j;
        j["n"] = n;
        j["constraints"] = json::array();
        for (const auto& c : sys.algebraic_constraints)
            j["constraints"].push_back({{"name", c.name}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}});
        j["perm_constraint_count"] = sys.perm_constraint_count;
        j["paper_equation_count"] = sys.paper_equation_count;
        j["unknown_count"] = sys.unknown_count;
        j["compatible"] = verdict.compatible;
        j["explanation"] = verdict.explanation;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "constraint system for n = " << n << "\n";
        for (const auto& c : sys.algebraic_constraints)
            std::cout << "  " << c.name << ":  " << c.lhs.str() << " = " << c.rhs.str() << "\n";
        std::cout << sys.paper_equation_count << " conditions vs " << sys.unknown_count
                  << " unknowns: " << (verdict.compatible ? "compatible" : "incompatible")
                  << " by paper counting\n";
    }
    return 0;
}

int run_certify(unsigned n, long x, long y, long z, const std::string& witness_spec,
                const std::string& format) {
    gammalin::Witness w;
    try {
        w = gammalin::resolve_witness(witness_spec);
    } catch (const gammalin::error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    auto rep = gammalin::certify_solution(n, x, y, z, w.gx, w.gy);
    if (format == "json") {
        std::cout << rep.to_json() << "\n";
    } else {
        std::cout << "certify n=" << n << " (" << x << ", " << y << ", " << z << ")\n";
        for (const auto& c : rep.constraints)
            std::cout << "  " << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
        std::cout << "gz^" << n << " = 1: " << (rep.gz_power_check ? "pass" : "FAIL") << "\n";
        std::cout << "z^" << n << " = x^" << n << " + y^" << n << ": "
                  << (rep.fermat_check ? "pass" : "FAIL") << "\n";
    }
    return 0;
}

int run_dirac(const std::string& format) {
    auto set = gammalin::standard_dirac_set();
    auto algebra = gammalin::verify_dirac_algebra(set);
    auto h2 = gammalin::hamiltonian_square_symbolic();
    auto clifford = gammalin::verify_clifford(gammalin::gamma_basis(set), gammalin::MetricSignature{});
    if (format == "json") {
        json j;
        j["alpha_beta_algebra"] = json::parse(algebra.to_json());
        j["hamiltonian_square"] = h2.str();
        j["clifford"] = json::parse(clifford.to_json());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "alpha/beta algebra:\n";
        for (const auto& r : algebra.relations)
            std::cout << "  " << r.name << ": " << (r.passed ? "pass" : "FAIL") << "\n";
        std::cout << "H^2 reduces to: " << h2.str() << "\n";
        std::cout << "Clifford relations (+,-,-,-):\n";
        for (const auto& r : clifford.relations)
            std::cout << "  " << r.name << ": " << (r.passed ? "pass" : "FAIL") << "\n";
    }
    return 0;
}

int run_search(const gammalin::SearchConfig& cfg, const std::string& format) {
    auto result = gammalin::search(cfg);
    if (format == "json") {
        json j;
        j["n"] = cfg.n;
        j["d"] = cfg.d;
        j["real_only"] = cfg.real_only;
        j["seed"] = cfg.seed;
        j["best_residual"] = result.best_residual;
        j["restart_index"] = result.restart_index;
        j["iterations_used"] = result.iterations_used;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("%4s %4s %14s %10s %8s %12s\n", "n", "d", "residual", "iters", "restart", "seed");
        std::printf("%4u %4u %14.6e %10u %8u %12llu\n", cfg.n, cfg.d, result.best_residual,
                    result.iterations_used, result.restart_index,
                    static_cast<unsigned long long>(result.seed));
    }
    return 0;
}

int run_script(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open script: " << path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    gammalin::specdsl::Program prog;
    try {
        prog = gammalin::specdsl::parse(buf.str());
    } catch (const gammalin::specdsl::parse_error& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return 2;
    }
    auto report = gammalin::specdsl::run(prog);
    if (format == "json") {
        json j = json::array();
        for (const auto& r : report.results)
            j.push_back({{"command", r.command}, {"result", r.result}, {"ok", r.check_passed}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report.text();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix linearization toolkit for x^n + y^n = z^n and the Dirac algebra"};
    app.require_subcommand(1);
    std::string format = "text";
    app.fallthrough();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    long x = 0, y = 0, z = 0;
    unsigned n = 2;

    auto* triple = app.add_subcommand("triple", "Build and verify the 2x2 gamma triple");
    triple->add_option("x", x)->required();
    triple->add_option("y", y)->required();
    triple->add_option("z", z)->required();

    unsigned ps_n = 0, ps_k = 0;
    auto* permsum = app.add_subcommand("permsum", "Print the permutation-sum polynomial");
    permsum->add_option("n", ps_n)->required();
    permsum->add_option("k", ps_k)->required();

    auto* constraints = app.add_subcommand("constraints", "Constraint system and counting verdict");
    constraints->add_option("n", n)->required();

    std::string witness_spec;
    auto* certify = app.add_subcommand("certify", "Certify a candidate witness");
    certify->add_option("n", n)->required();
    certify->add_option("x", x)->required();
    certify->add_option("y", y)->required();
    certify->add_option("z", z)->required();
    certify->add_option("--witness", witness_spec, "Witness file or builtin:clock3 / builtin:pauli")
        ->required();

    auto* dirac = app.add_subcommand("dirac", "Verify the Dirac alpha/beta and Clifford algebra");

    gammalin::SearchConfig cfg;
    auto* search = app.add_subcommand("search", "Numerical residual search");
    search->add_option("--n", cfg.n, "Power")->required();
    search->add_option("--d", cfg.d, "Matrix dimension")->required();
    search->add_option("--restarts", cfg.restarts, "Random restarts");
    search->add_option("--iters", cfg.max_iters, "Max iterations per restart");
    search->add_option("--seed", cfg.seed, "RNG seed");
    search->add_flag("--real", cfg.real_only, "Restrict to real matrices");

    std::string script_path;
    auto* run = app.add_subcommand("run", "Run a .ncs script");
    run->add_option("file", script_path, "Script file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (triple->parsed()) return run_triple(x, y, z, format);
        if (permsum->parsed()) {
            if (ps_k > ps_n) {
                std::cerr << "permsum: k must lie in [0, n]\n";
                return 2;
            }
            std::cout << gammalin::perm_sum(ps_n, ps_k).str() << "\n";
            return 0;
        }
        if (constraints->parsed()) return run_constraints(n, format);
        if (certify->parsed()) return run_certify(n, x, y, z, witness_spec, format);
        if (dirac->parsed()) return run_dirac(format);
        if (search->parsed()) return run_search(cfg, format);
        if (run->parsed()) return run_script(script_path, format);
    } catch (const gammalin::error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 1;
}
