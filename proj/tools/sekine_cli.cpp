// Command-line front door for the Sekine quantum group library:
// enumerate / verify / lattice / walk / fourier / selfcheck.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "sekine/json_io.hpp"
#include "sekine/selfcheck.hpp"

namespace {

using namespace sekine;
using nlohmann::json;

Functional load_state(const std::string& path, std::optional<int> expected_k) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open state file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("state file is not valid JSON: " + std::string(e.what()));
    }
    Functional f = state_from_json(j);
    if (expected_k && *expected_k != f.k)
        throw std::invalid_argument("state file has k=" + std::to_string(f.k) +
                                    ", expected k=" + std::to_string(*expected_k));
    return f;
}

void print_coefficients(const Functional& f, long max_den) {
    auto dump = [&](const char* name, const Matrix& m) {
        int printed = 0;
        for (int i = 0; i < f.k; ++i)
            for (int j = 0; j < f.k; ++j) {
                if (std::abs(m(i, j)) <= 1e-12) continue;
                if (printed == 0) std::cout << "    " << name << ": ";
                std::cout << "[" << i << "," << j << "]=" << format_scalar(m(i, j), max_den)
                          << " ";
                if (++printed % 6 == 0) std::cout << "\n      ";
            }
        if (printed) std::cout << "\n";
    };
    dump("alpha", f.alpha);
    dump("kappa", f.kappa);
}

int cmd_enumerate(int k, const std::string& format, double tol) {
    const Catalog cat = enumerate_catalog(k);
    if (format == "json") {
        std::cout << catalog_to_json(cat).dump(2) << "\n";
        return 0;
    }
    const long max_den = 4L * k * k;
    std::cout << "Idem(A_" << k << "): " << cat.size() << " idempotent states\n";
    bool all_ok = true;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& m = cat.members[i];
        const IdempotencyReport rep = idempotency_report(m.state, tol);
        all_ok = all_ok && rep.pass;
        std::cout << std::left << std::setw(4) << i << std::setw(18)
                  << descriptor_name(m.descriptor) << " sum(alpha)="
                  << format_rational(m.state.alpha.sum().real(), max_den)
                  << " tr(kappa)=" << format_rational(m.state.kappa.trace().real(), max_den)
                  << std::scientific << std::setprecision(2) << " residuals A=" << rep.residual_a
                  << " B=" << rep.residual_b << " C=" << rep.residual_c
                  << (rep.pass ? "" : "  FAIL") << std::defaultfloat << "\n";
        print_coefficients(m.state, max_den);
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& path, std::optional<int> k, double tol) {
    const Functional f = load_state(path, k);
    const StateReport st = is_state(f, tol);
    const IdempotencyReport rep = idempotency_report(f, tol);
    std::cout << "k = " << f.k << "\n";
    std::cout << "state:       " << (st.pass ? "pass" : "FAIL")
              << "  (alpha nonneg: " << (st.alpha_nonnegative ? "yes" : "no")
              << ", kappa psd: " << (st.kappa_psd ? "yes" : "no")
              << ", normalized: " << (st.normalized ? "yes" : "no") << ")\n";
    std::cout << std::scientific << std::setprecision(3);
    std::cout << "idempotency: A=" << rep.residual_a << " B=" << rep.residual_b
              << " C=" << rep.residual_c << " fixed-point=" << rep.fixed_point << "\n";
    std::cout << "verdict:     "
              << (rep.pass ? "idempotent state" : "not an idempotent state")
              << " (tol " << tol << ")\n";
    return rep.pass ? 0 : 1;
}

int cmd_lattice(int k, const std::string& format, double tol) {
    const Catalog cat = enumerate_catalog(k);
    const OrderRelation rel = build_order(cat, tol);
    // the computed relation must agree with the descriptor rules and the
    // Fourier criterion on every pair
    const int n = static_cast<int>(cat.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& mi = cat.members[static_cast<std::size_t>(i)];
            const auto& mj = cat.members[static_cast<std::size_t>(j)];
            const bool conv = rel.at(i, j);
            if (conv != theoretic_precedes(mi.descriptor, mj.descriptor, k) ||
                conv != precedes_fourier(mi.state, mj.state)) {
                std::cerr << "order cross-check mismatch at (" << descriptor_name(mi.descriptor)
                          << ", " << descriptor_name(mj.descriptor) << ")\n";
                return 1;
            }
        }
    const HasseDiagram hd = hasse(cat, rel);
    if (format == "json")
        std::cout << lattice_to_json(cat, hd).dump(2) << "\n";
    else
        std::cout << export_dot(hd);
    return 0;
}

int cmd_walk(const std::string& path, std::optional<int> k, long max_steps, double tol,
             bool with_cesaro, const std::string& format) {
    const Functional f = load_state(path, k);
    if (!is_state(f).pass) {
        std::cerr << "input is not a state\n";
        return 1;
    }
    const Catalog cat = enumerate_catalog(f.k);
    const WalkReport rep = walk(f, max_steps, tol, &cat);

    json out = walk_report_to_json(rep);
    if (with_cesaro) {
        const Functional limit = cesaro_limit(f);
        const auto cls = classify(limit, cat);
        json c;
        c["limit"] = state_to_json(limit);
        c["idempotency"] = report_to_json(idempotency_report(limit, 1e-7));
        if (cls) c["descriptor"] = descriptor_to_json(*cls);
        out["cesaro"] = std::move(c);
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "walk: " << (rep.converged ? "converged" : "did not converge")
              << " (steps_used=" << rep.steps_used << ", max |eigenvalue|=" << std::setprecision(6)
              << rep.spectral.max_modulus << ")\n";
    if (rep.converged && rep.limit_descriptor)
        std::cout << "limit: " << descriptor_name(*rep.limit_descriptor) << "\n";
    if (with_cesaro && out["cesaro"].contains("descriptor"))
        std::cout << "cesaro limit: " << out["cesaro"]["descriptor"]["name"].get<std::string>()
                  << "\n";
    return 0;
}

int cmd_fourier(const std::string& path, std::optional<int> k, const std::string& format) {
    const Functional f = load_state(path, k);
    if (format == "json") {
        std::cout << fourier_table_to_json(f).dump(2) << "\n";
        return 0;
    }
    const long max_den = 4L * f.k * f.k;
    std::cout << "(p,q)  rho(p,q)  sigma(p,-q)  sigma(p,q)  rho(p,-q)\n";
    for (const FourierMatrix& fm : fourier_all(f)) {
        std::cout << "(" << fm.p << "," << fm.q << ")  ";
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                std::cout << format_scalar(fm.m(i, j), max_den) << "  ";
        std::cout << "\n";
    }
    return 0;
}

int cmd_selfcheck(int k, int samples, double tol, bool inject) {
    SelfcheckOptions opts;
    opts.samples = samples;
    opts.tol = tol;
    opts.inject_eta_sign_bug = inject;
    const auto results = selfcheck(k, opts);
    for (const auto& r : results)
        std::cout << (r.pass ? "[ok]   " : "[FAIL] ") << std::left << std::setw(36) << r.name
                  << std::scientific << std::setprecision(2) << " residual=" << r.residual
                  << std::defaultfloat << "\n";
    const bool ok = all_pass(results);
    std::cout << (ok ? "selfcheck passed" : "selfcheck FAILED") << " (k=" << k << ")\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sekine quantum group toolkit: idempotent states, their order, random walks"};
    app.require_subcommand(1);

    int k = 2;
    double tol = 1e-9;
    std::string state_path;
    int opt_k = -1; // -1: take k from the state file

    auto* enumerate = app.add_subcommand("enumerate", "list all idempotent states on A_k");
    enumerate->add_option("--k", k, "group order (>= 2)")->required();
    enumerate->add_option("--tol", tol, "verification tolerance");
    std::string enum_fmt = "table";
    enumerate->add_option("--format", enum_fmt, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* verify = app.add_subcommand("verify", "check a state file for idempotency");
    verify->add_option("--state", state_path, "state JSON file")->required();
    verify->add_option("--k", opt_k, "expected group order (cross-check)");
    verify->add_option("--tol", tol, "verification tolerance");

    auto* lattice_cmd = app.add_subcommand("lattice", "Hasse diagram of the idempotent order");
    lattice_cmd->add_option("--k", k, "group order (>= 2)")->required();
    std::string lattice_fmt = "dot";
    lattice_cmd->add_option("--format", lattice_fmt, "dot|json")
        ->check(CLI::IsMember({"dot", "json"}));
    double order_tol = 1e-8;
    lattice_cmd->add_option("--tol", order_tol, "order tolerance");

    auto* walk_cmd = app.add_subcommand("walk", "convolution powers of a state");
    walk_cmd->add_option("--state", state_path, "state JSON file")->required();
    walk_cmd->add_option("--k", opt_k, "expected group order (cross-check)");
    long max_steps = 100000;
    walk_cmd->add_option("--max-steps", max_steps, "iteration cap");
    double walk_tol = 1e-10;
    walk_cmd->add_option("--tol", walk_tol, "convergence tolerance");
    bool with_cesaro = false;
    walk_cmd->add_flag("--cesaro", with_cesaro, "also compute and classify the Cesaro limit");
    std::string walk_fmt = "table";
    walk_cmd->add_option("--format", walk_fmt, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform at every label");
    fourier_cmd->add_option("--state", state_path, "state JSON file")->required();
    fourier_cmd->add_option("--k", opt_k, "expected group order (cross-check)");
    std::string fourier_fmt = "table";
    fourier_cmd->add_option("--format", fourier_fmt, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run the axiom and oracle suites");
    selfcheck_cmd->add_option("--k", k, "group order (>= 2)")->required();
    int samples = 20;
    selfcheck_cmd->add_option("--samples", samples, "random samples per property");
    selfcheck_cmd->add_option("--tol", tol, "tolerance");
    bool inject = false;
    selfcheck_cmd->add_flag(
        "--inject-eta-bug", inject,
        "negative control: corrupt the convolution formula (meaningful for k >= 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::optional<int> file_k = opt_k > 0 ? std::optional<int>(opt_k) : std::nullopt;
    try {
        if (enumerate->parsed()) return cmd_enumerate(k, enum_fmt, tol);
        if (verify->parsed()) return cmd_verify(state_path, file_k, tol);
        if (lattice_cmd->parsed()) return cmd_lattice(k, lattice_fmt, order_tol);
        if (walk_cmd->parsed())
            return cmd_walk(state_path, file_k, max_steps, walk_tol, with_cesaro, walk_fmt);
        if (fourier_cmd->parsed()) return cmd_fourier(state_path, file_k, fourier_fmt);
        if (selfcheck_cmd->parsed()) return cmd_selfcheck(k, samples, tol, inject);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
