// Command-line front end: run a configured transient, sweep a numeric
// parameter, or re-check a stored ledger CSV.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dgdiss/dgdiss.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dgdiss::IoError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_values(const std::string& list) {
    std::vector<std::string> tokens;
    std::string token;
    std::istringstream in(list);
    while (std::getline(in, token, ',')) {
        if (!token.empty()) tokens.push_back(token);
    }
    return tokens;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"energy-dissipative dG time stepping for dissipative evolution problems"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "execute one configured transient run");
    run_cmd->add_option("config", config_path, "run configuration file")->required();

    std::string sweep_config, sweep_param, sweep_values;
    auto* sweep_cmd = app.add_subcommand("sweep", "repeat a run over a list of values of one numeric key");
    sweep_cmd->add_option("config", sweep_config, "run configuration file")->required();
    sweep_cmd->add_option("--param", sweep_param, "numeric configuration key to vary")->required();
    sweep_cmd->add_option("--values", sweep_values, "comma-separated list of values")->required();

    std::string csv_path;
    double check_tol = 1e-8;
    auto* check_cmd = app.add_subcommand("check", "re-run the dissipation-inequality check on a ledger CSV");
    check_cmd->add_option("csv", csv_path, "ledger CSV file")->required();
    check_cmd->add_option("--slack-tol", check_tol, "tolerance scale (default 1e-8, applied as tol*(1+|E0|))");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const dgdiss::RunConfig cfg = dgdiss::parse_config(read_file(config_path));
            const dgdiss::RunOutcome outcome = dgdiss::run(cfg);
            std::cout << outcome.summary << "\n";
            return outcome.exit_code;
        }
        if (sweep_cmd->parsed()) {
            const dgdiss::RunConfig cfg = dgdiss::parse_config(read_file(sweep_config));
            return dgdiss::sweep(cfg, sweep_param, split_values(sweep_values), std::cout);
        }
        return dgdiss::check_csv(csv_path, check_tol, std::cout);
    } catch (const dgdiss::ConfigError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return dgdiss::kExitUsageError;
    } catch (const dgdiss::IoError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return dgdiss::kExitUsageError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return dgdiss::kExitSolverError;
    }
}
