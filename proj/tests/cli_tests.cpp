// Exercises the installed CLI binary end to end: exit-code contract
// (0 success, 1 verification failure, 2 usage/parse error), output shapes
// and determinism. The binary path arrives as argv[1] from ctest.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "sekine/json_io.hpp"
#include "sekine/walks.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sekine;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "[ok]   " << what << "\n";
    } else {
        std::cout << "[FAIL] " << what << "\n";
        ++failures;
    }
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& cmd) {
    RunResult res;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-sekine-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path tmp = fs::temp_directory_path() / "sekine_cli_tests";
    fs::create_directories(tmp);

    // state fixtures
    write_file(tmp / "haar2.json", state_to_json(haar_functional(2)).dump());
    write_file(tmp / "phi0.json", state_to_json(build_type2(2, 2, 0)).dump());
    write_file(tmp / "eps2.json", state_to_json(counit_functional(2)).dump());
    write_file(tmp / "point.json", state_to_json(dual_d(2, 1, 0)).dump());
    Functional bent = haar_functional(2);
    bent.alpha(0, 1) += 1e-3;
    write_file(tmp / "bent.json", state_to_json(bent).dump());
    Functional nonstate = Functional::zero(2);
    nonstate.alpha(0, 0) = -1.0;
    write_file(tmp / "nonstate.json", state_to_json(nonstate).dump());
    write_file(tmp / "garbage.json", "this is not json");

    // enumerate
    {
        RunResult r = run(cli + " enumerate --k 2 --format json");
        expect(r.exit_code == 0, "enumerate --k 2 exits 0");
        const json j = json::parse(r.output, nullptr, false);
        expect(!j.is_discarded() && j["size"] == 10, "enumerate --k 2 lists 10 states");
        r = run(cli + " enumerate --k 3 --format json");
        const json j3 = json::parse(r.output, nullptr, false);
        expect(r.exit_code == 0 && j3["size"] == 11, "enumerate --k 3 lists 11 states");
        expect(run(cli + " enumerate --k 1").exit_code == 2, "enumerate --k 1 exits 2");
    }

    // verify
    {
        expect(run(cli + " verify --state " + (tmp / "haar2.json").string()).exit_code == 0,
               "verify accepts the haar state");
        expect(run(cli + " verify --state " + (tmp / "phi0.json").string()).exit_code == 0,
               "verify accepts the diagonal-kappa state");
        expect(run(cli + " verify --state " + (tmp / "bent.json").string()).exit_code == 1,
               "verify rejects a perturbed haar state with exit 1");
        expect(run(cli + " verify --state " + (tmp / "garbage.json").string()).exit_code == 2,
               "verify exits 2 on unparsable input");
        expect(run(cli + " verify --state " + (tmp / "missing.json").string()).exit_code == 2,
               "verify exits 2 on a missing file");
        expect(run(cli + " verify --state " + (tmp / "haar2.json").string() + " --k 3")
                       .exit_code == 2,
               "verify exits 2 on a k mismatch");
    }

    // lattice
    {
        const RunResult r1 = run(cli + " lattice --k 2 --format dot");
        expect(r1.exit_code == 0, "lattice --k 2 exits 0");
        int nodes = 0, edges = 0;
        std::istringstream is(r1.output);
        for (std::string line; std::getline(is, line);) {
            if (line.find("label=") != std::string::npos) ++nodes;
            if (line.find("->") != std::string::npos) ++edges;
        }
        expect(nodes == 10 && edges == 15, "lattice --k 2 dot has 10 nodes and 15 edges");
        const RunResult r2 = run(cli + " lattice --k 2 --format dot");
        expect(r1.output == r2.output, "lattice output is byte-identical across runs");
        const RunResult r3 = run(cli + " lattice --k 3 --format json");
        const json j = json::parse(r3.output, nullptr, false);
        expect(r3.exit_code == 0 && j["covers"].size() == 17,
               "lattice --k 3 json has 17 cover edges");
    }

    // walk
    {
        const RunResult r = run(cli + " walk --state " + (tmp / "point.json").string() +
                                " --cesaro --format json");
        expect(r.exit_code == 0, "walk exits 0 on the oscillating point mass");
        const json j = json::parse(r.output, nullptr, false);
        bool minus_one = false;
        if (!j.is_discarded())
            for (const auto& e : j["spectral"]["entries"])
                for (const auto& lam : e["eigenvalues"])
                    if (std::abs(lam[0].get<double>() + 1.0) < 1e-9 &&
                        std::abs(lam[1].get<double>()) < 1e-9)
                        minus_one = true;
        expect(!j.is_discarded() && j["converged"] == false && minus_one,
               "walk reports non-convergence with eigenvalue -1");
        expect(j["cesaro"]["descriptor"]["name"] == "h_G[1,0;0,2]",
               "cesaro limit classifies as the two-point subgroup state");

        const RunResult rh = run(cli + " walk --state " + (tmp / "haar2.json").string() +
                                 " --format json");
        const json jh = json::parse(rh.output, nullptr, false);
        expect(rh.exit_code == 0 && jh["converged"] == true && jh["steps_used"] == 1,
               "walk of the haar state converges at step 1");

        expect(run(cli + " walk --state " + (tmp / "nonstate.json").string()).exit_code == 1,
               "walk rejects a non-state with exit 1");
    }

    // fourier
    {
        const RunResult r = run(cli + " fourier --state " + (tmp / "eps2.json").string() +
                                " --format json");
        const json j = json::parse(r.output, nullptr, false);
        bool all_identity = !j.is_discarded();
        if (all_identity)
            for (const auto& entry : j["labels"]) {
                const auto& m = entry["matrix"];
                all_identity = all_identity &&
                               std::abs(m[0][0].get<double>() - 1.0) < 1e-12 &&
                               std::abs(m[1][0].get<double>()) < 1e-12 &&
                               std::abs(m[2][0].get<double>()) < 1e-12 &&
                               std::abs(m[3][0].get<double>() - 1.0) < 1e-12;
            }
        expect(r.exit_code == 0 && all_identity,
               "fourier of the counit is the identity at every label");
    }

    // selfcheck
    {
        expect(run(cli + " selfcheck --k 2").exit_code == 0, "selfcheck --k 2 passes");
        expect(run(cli + " selfcheck --k 4 --samples 5").exit_code == 0,
               "selfcheck --k 4 passes");
        expect(run(cli + " selfcheck --k 3 --inject-eta-bug").exit_code == 1,
               "selfcheck catches the injected formula corruption");
    }

    // usage errors
    {
        expect(run(cli).exit_code == 2, "missing subcommand exits 2");
        expect(run(cli + " enumerate").exit_code == 2, "missing --k exits 2");
        expect(run(cli + " enumerate --k 2 --format yaml").exit_code == 2,
               "unknown format exits 2");
    }

    std::cout << (failures == 0 ? "cli tests passed" : "cli tests FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}
