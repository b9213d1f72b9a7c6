#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dalg/ideals.hpp"
#include "dalg/io.hpp"
#include "dalg/named.hpp"
#include "dalg/structure.hpp"
#include "dalg/suite/examples.hpp"
#include "dalg/suite/representability.hpp"
#include "dalg/suite/sweep.hpp"
#include "dalg/suite/yangian.hpp"

using namespace dalg;
using suite::json;

namespace {

dalg::AnyField field_option(const std::string& s) {
    if (s == "gf2") return PrimeField(2);
    if (s == "gf3") return PrimeField(3);
    if (s == "gf5") return PrimeField(5);
    if (s == "q") return RationalField{};
    return parse_field_tag(s);
}

void print_report(const suite::RunReport& r, bool as_json) {
    if (as_json) std::cout << r.to_json().dump(2) << "\n";
    else std::cout << r.to_text();
}

template <FieldScalar S>
void print_algebra(const DoubleAlgebra<S>& V) {
    std::cout << save_algebra(V);
}

template <FieldScalar S>
int classify_cmd(const DoubleAlgebra<S>& V) {
    print_algebra(V);
    std::cout << "flags: " << classify_direct(V).to_string() << "\n";
    auto v = simplicity_report(V);
    std::cout << "simplicity: " << to_string(v.kind) << " (" << to_string(v.method) << ") " << v.reason << "\n";
    if (v.witness) std::cout << "witness: " << v.witness->to_string() << "\n";
    return 0;
}

template <FieldScalar S>
int ideals_cmd(const DoubleAlgebra<S>& V, const std::string& method, std::size_t max_dim, double cap) {
    auto show = [](const IdealVerdict<S>& v) {
        std::cout << "verdict: " << to_string(v.kind) << " (" << to_string(v.method) << ") " << v.reason << "\n";
        if (v.witness) std::cout << "witness: " << v.witness->to_string() << "\n";
    };
    if (method == "auto") {
        SimplicityOptions o;
        o.exhaustive_cap = cap;
        show(simplicity_report(V, o));
    } else if (method == "closure") {
        auto found = invariant_ideal_search(V);
        std::cout << found.size() << " invariant ideal(s)\n";
        for (const auto& I : found) std::cout << "  " << I.to_string() << "\n";
    } else if (method == "1d") {
        auto r = projective_1d_ideal_search(V);
        if (r.all) std::cout << "every line is an ideal\n";
        else {
            std::cout << r.lines.size() << " one-dimensional ideal(s)\n";
            for (const auto& I : r.lines) std::cout << "  " << I.to_string() << "\n";
        }
    } else if (method == "exhaustive") {
        if constexpr (FiniteFieldDescriptor<field_of<S>>) {
            ExhaustiveOptions o;
            o.cap = cap;
            o.collect_all = true;
            if (max_dim > 0)
                for (std::size_t d = 1; d <= std::min(max_dim, V.dim() - 1); ++d) o.dims.push_back(d);
            auto r = find_ideals_exhaustive(V, o);
            std::cout << r.examined << " subspaces examined, " << r.ideals.size() << " ideal(s)"
                      << (r.complete ? "" : " (dimension filter)") << "\n";
            for (const auto& I : r.ideals) std::cout << "  " << I.to_string() << "\n";
        } else {
            throw invalid_argument("exhaustive search needs a finite field");
        }
    } else {
        throw invalid_argument("unknown method '" + method + "'");
    }
    return 0;
}

template <FieldScalar S>
int operator_cmd(const EndOperator<S>& R) {
    std::cout << save_operator(R);
    auto ids = check_identities(R);
    auto b = [](bool x) { return x ? "yes" : "no"; };
    std::cout << "left averaging R: " << b(ids.eq3) << ", R*: " << b(ids.eq6) << "\n"
              << "skew: " << b(ids.skew) << ", symmetric: " << b(ids.symmetric) << ", rota-baxter: " << b(ids.rota_baxter)
              << ", averaging: " << b(ids.averaging) << "\n"
              << "flags: " << flags_from_report(ids).to_string() << "\n";
    if (ids.symmetric && ids.averaging) std::cout << "averaging type: " << to_string(averaging_type(R)) << "\n";
    print_algebra(bracket_from_operator(R));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double algebras: structure constants, operators on End V, ideals."};
    app.require_subcommand(1);

    bool json_out = false;
    auto* ex = app.add_subcommand("examples", "Build and check the standard examples");
    ex->add_flag("--json", json_out, "JSON report");

    std::string algebra, field_name = "Q";
    auto* cl = app.add_subcommand("classify", "Classify an algebra");
    cl->add_option("--algebra", algebra, "File or built-in name: " + builtin_algebra_names())->required();
    cl->add_option("--field", field_name, "Base field for built-in algebras (Q, GF(p), GF(p)(t), gf2, gf3)");

    std::string method = "auto";
    std::size_t max_dim = 0;
    double cap = 1e6;
    auto* id = app.add_subcommand("ideals", "Search for ideals");
    id->add_option("--algebra", algebra, "File or built-in name")->required();
    id->add_option("--field", field_name, "Base field for built-in algebras");
    id->add_option("--method", method, "exhaustive|1d|closure|auto")
        ->check(CLI::IsMember({"exhaustive", "1d", "closure", "auto"}));
    id->add_option("--max-dim", max_dim, "Exhaustive search only up to this dimension");
    id->add_option("--cap", cap, "Candidate subspace cap for exhaustive search");

    suite::SweepOptions so;
    std::string sweep_field = "gf2", mode = "full";
    auto* sw = app.add_subcommand("sweep", "Enumerate or sample operators over GF(p)");
    sw->add_option("--field", sweep_field, "gf2, gf3, or GF(p)");
    sw->add_option("--n", so.n, "Dimension of V");
    sw->add_option("--mode", mode, "full|sample")->check(CLI::IsMember({"full", "sample"}));
    sw->add_option("--samples", so.samples, "Operators to sample");
    sw->add_option("--seed", so.seed, "Sampling seed");
    sw->add_option("--workers", so.workers, "Worker threads");
    sw->add_flag("--json", json_out, "JSON report");

    std::size_t N = 2, D = 4;
    auto* ya = app.add_subcommand("yangian", "Compare dY(N,D) with its written-out table");
    ya->add_option("--N", N, "Size of the matrix indices");
    ya->add_option("--D", D, "Truncation degree");
    ya->add_flag("--json", json_out, "JSON report");

    auto* rp = app.add_subcommand("representability", "Search GF(2) for associative V with V^(-) = L_2*");
    rp->add_flag("--json", json_out, "JSON report");

    std::string op;
    auto* opc = app.add_subcommand("operator", "Identities of an operator on End V and its bracket");
    opc->add_option("--operator", op, "File or built-in name: real_example, gf2t_example")->required();

    auto* all = app.add_subcommand("all", "Examples, GF(2) sweep, Yangian and representability checks");
    all->add_option("--workers", so.workers, "Worker threads for the sweep");
    all->add_flag("--json", json_out, "JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ex) {
            auto r = suite::examples_report(suite::run_examples());
            print_report(r, json_out);
            return r.ok() ? 0 : 1;
        }
        if (*cl) {
            auto V = algebra_by_name_or_file(algebra, field_option(field_name));
            return std::visit([](const auto& a) { return classify_cmd(a); }, V);
        }
        if (*id) {
            auto V = algebra_by_name_or_file(algebra, field_option(field_name));
            return std::visit([&](const auto& a) { return ideals_cmd(a, method, max_dim, cap); }, V);
        }
        if (*sw) {
            auto f = field_option(sweep_field);
            auto* pf = std::get_if<PrimeField>(&f);
            if (!pf) throw invalid_argument("sweep needs a prime field");
            so.p = pf->modulus();
            so.full = mode == "full";
            auto r = suite::run_sweep(so).to_report();
            print_report(r, json_out);
            return r.ok() ? 0 : 1;
        }
        if (*ya) {
            auto r = suite::run_yangian_check<Rational>(RationalField{}, N, D).to_report();
            print_report(r, json_out);
            return r.ok() ? 0 : 1;
        }
        if (*rp) {
            auto r = suite::run_negative_representability_check().to_report();
            print_report(r, json_out);
            return r.ok() ? 0 : 1;
        }
        if (*opc) {
            auto R = operator_by_name_or_file(op);
            return std::visit([](const auto& x) { return operator_cmd(x); }, R);
        }
        if (*all) {
            suite::RunReport r;
            r.run = "all";
            r.append(suite::examples_report(suite::run_examples()));
            r.append(suite::run_sweep(so).to_report());
            r.append(suite::run_yangian_check<Rational>(RationalField{}, 2, 4).to_report());
            r.append(suite::run_negative_representability_check().to_report());
            print_report(r, json_out);
            return r.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
