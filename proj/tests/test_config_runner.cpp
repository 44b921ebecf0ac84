#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "test_support.hpp"

using namespace dgdiss;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("config parsing") {
    {
        const RunConfig cfg = parse_config("problem = heat\nnx = 16\ntau = 0.01\nn_steps = 20\ndg_order = 0\nout = run.csv\n");
        REQUIRE(cfg.problem == ProblemKind::Heat);
        REQUIRE(cfg.nx == 16);
        REQUIRE(cfg.tau == 0.01);
        REQUIRE(cfg.n_steps == 20);
        REQUIRE(cfg.dg_order == 0);
        REQUIRE(cfg.out == "run.csv");
        // defaults fill the rest
        REQUIRE(cfg.length == 1.0);
        REQUIRE(cfg.seed == 42);
        REQUIRE(cfg.newton_tol == 1e-10);
        REQUIRE(cfg.ic.empty());
    }
    {
        // comments, blank lines and loose whitespace are fine
        const RunConfig cfg = parse_config("# a run\n\n  problem=pme   # tag\n m =  3.0\n");
        REQUIRE(cfg.problem == ProblemKind::PorousMedium);
        REQUIRE(cfg.m.value() == 3.0);
    }

    auto reject = [](const std::string& text, const std::string& reason_fragment) {
        try {
            parse_config(text);
            FAIL("expected ConfigError for: " << text);
        } catch (const ConfigError& err) {
            INFO(err.what());
            REQUIRE(std::string(err.what()).find(reason_fragment) != std::string::npos);
        }
    };
    reject("problem = pme\n", "m required");
    reject("problem = heat\ndg_order = 2\n", "dg_order");
    reject("problem = heat\nfoo = 1\n", "unknown key");
    reject("problem = heat\nnx = 0\n", "nx");
    reject("problem = heat\ntau = -0.5\n", "tau");
    reject("problem = heat\nnx\n", "key = value");
    reject("problem = heat\nnx =\n", "missing value");
    reject("problem = marble\n", "unknown problem");
    reject("problem = pme\nm = 1.0\n", "m must exceed 1");
    reject("nx = 4\n", "problem required");
    reject("problem = fokker_planck\npotential = cubic\n", "unknown potential");

    // line numbers point at the offending line
    try {
        parse_config("problem = heat\n# fine\nnx = zero\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        REQUIRE(err.line == 3);
    }
}

TEST_CASE("run executes, checks and reports") {
    {
        // Gradient decay closed form through the full runner: final energy
        // is (1/2) (1.1^-10)^2.
        RunConfig cfg = parse_config("problem = gradient\nsystem = decay\ntau = 0.1\nn_steps = 10\nnewton_tol = 1e-13\n");
        const RunOutcome outcome = run(cfg);
        REQUIRE(outcome.exit_code == kExitOk);
        REQUIRE(outcome.check_pass);
        const double expected = 0.5 * std::pow(std::pow(1.1, -10.0), 2.0);
        REQUIRE(std::abs(outcome.final_energy - expected) < 1e-12);
        REQUIRE(outcome.summary.find("dissipation_check=PASS") != std::string::npos);
    }
    {
        // Fokker-Planck from the steady preset: energy stays at mass/2.
        RunConfig cfg = parse_config("problem = fokker_planck\nic = steady\nnx = 8\ntau = 0.01\nn_steps = 5\n");
        const RunOutcome outcome = run(cfg);
        REQUIRE(outcome.exit_code == kExitOk);
        for (const auto& row : outcome.result.ledger) REQUIRE(row.energy == outcome.result.ledger.front().energy);
    }
    {
        // Solver failure surfaces the slab index and exits nonzero.
        RunConfig cfg = parse_config("problem = heat\ntau = 1e6\nn_steps = 2\nnewton_maxit = 5\n");
        const RunOutcome outcome = run(cfg);
        REQUIRE(outcome.exit_code == kExitSolverError);
        REQUIRE(outcome.summary.find("slab 1") != std::string::npos);
    }
    REQUIRE_THROWS_AS(run(parse_config("problem = cross_diffusion\nic = nope\n")), ArgumentError);
}

TEST_CASE("csv output, determinism and the check entry point") {
    const auto path_a = temp_path("dgdiss_det_a.csv");
    const auto path_b = temp_path("dgdiss_det_b.csv");
    RunConfig cfg = parse_config("problem = pme\nm = 2\nnx = 8\ntau = 0.01\nn_steps = 10\n");

    cfg.out = path_a.string();
    REQUIRE(run(cfg).exit_code == kExitOk);
    cfg.out = path_b.string();
    REQUIRE(run(cfg).exit_code == kExitOk);

    const std::string bytes_a = slurp(path_a);
    const std::string bytes_b = slurp(path_b);
    REQUIRE(!bytes_a.empty());
    REQUIRE(bytes_a == bytes_b);  // bitwise-identical CSVs

    std::ostringstream msg;
    REQUIRE(check_csv(path_a.string(), 1e-8, msg) == kExitOk);
    REQUIRE(msg.str().find("PASS") != std::string::npos);

    // Corrupt one slack entry: the stored ledger now fails the re-check.
    EnergyLedger ledger = parse_csv(path_a.string());
    ledger[3].slack = -1.0;
    write_csv(ledger, path_a.string());
    std::ostringstream msg2;
    REQUIRE(check_csv(path_a.string(), 1e-8, msg2) == kExitCheckFailed);
    REQUIRE(msg2.str().find("FAIL") != std::string::npos);

    std::filesystem::remove(path_a);
    std::filesystem::remove(path_b);
}

TEST_CASE("sweep") {
    {
        // Empty value list: no-op, exit 0, no output.
        std::ostringstream out;
        RunConfig cfg = parse_config("problem = gradient\nsystem = decay\nn_steps = 5\n");
        REQUIRE(sweep(cfg, "tau", {}, out) == kExitOk);
        REQUIRE(out.str().empty());
    }
    {
        // Two tau values produce two summary lines and two suffixed CSVs.
        const auto base = temp_path("dgdiss_sweep.csv");
        std::ostringstream out;
        RunConfig cfg = parse_config("problem = gradient\nsystem = decay\nn_steps = 5\n");
        cfg.out = base.string();
        REQUIRE(sweep(cfg, "tau", {"0.1", "0.05"}, out) == kExitOk);
        REQUIRE(out.str().find("tau=0.1") != std::string::npos);
        REQUIRE(out.str().find("tau=0.05") != std::string::npos);

        const auto path1 = temp_path("dgdiss_sweep_0.1.csv");
        const auto path2 = temp_path("dgdiss_sweep_0.05.csv");
        REQUIRE(std::filesystem::exists(path1));
        REQUIRE(std::filesystem::exists(path2));
        REQUIRE(parse_csv(path1.string()).size() == 6);
        std::filesystem::remove(path1);
        std::filesystem::remove(path2);
    }
    {
        // Failures are reported per value and do not stop the sweep.
        std::ostringstream out;
        RunConfig cfg = parse_config("problem = heat\nn_steps = 2\nnewton_maxit = 3\n");
        const int code = sweep(cfg, "tau", {"1e6", "0.001"}, out);
        REQUIRE(code == kExitSolverError);
        REQUIRE(out.str().find("FAILED at slab") != std::string::npos);
        REQUIRE(out.str().find("tau=0.001") != std::string::npos);
    }
    {
        // Unknown parameter names are rejected per value.
        std::ostringstream out;
        RunConfig cfg = parse_config("problem = heat\nn_steps = 2\n");
        REQUIRE(sweep(cfg, "ic", {"1.0"}, out) != kExitOk);
        REQUIRE(out.str().find("not a sweepable numeric key") != std::string::npos);
    }
}
