#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stablefluct/cli.hpp"

namespace {

using stablefluct::cli::Command;
using stablefluct::cli::RunConfig;

const std::set<std::string> kGeometryKeys = {"x",     "y",    "z",    "v", "w",
                                             "theta", "r",    "rho",  "lam", "gamma",
                                             "opz",   "mode", "side", "f", "shell"};

// --config <path>: a JSON document mirroring the flag names.  It is applied
// before argv parsing, so explicit flags win.  Unknown keys are rejected.
void apply_config_file(const std::string& path, RunConfig& cfg, bool& tol_set, double& tol) {
    std::ifstream f(path);
    if (!f) throw stablefluct::DomainError("cannot read config file " + path);
    nlohmann::json doc;
    f >> doc;
    if (!doc.is_object()) throw stablefluct::DomainError("config file must hold a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "d") cfg.d = value.get<int>();
        else if (key == "alpha") cfg.alpha = value.get<double>();
        else if (key == "identity") cfg.identity = value.get<std::string>();
        else if (key == "suite") cfg.suite = value.get<std::string>();
        else if (key == "experiment") cfg.experiment = value.get<std::string>();
        else if (key == "tol") { tol = value.get<double>(); tol_set = true; }
        else if (key == "n") cfg.n = value.get<std::uint64_t>();
        else if (key == "workers") cfg.workers = value.get<int>();
        else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else if (key == "dt") cfg.dt = value.get<double>();
        else if (key == "out") cfg.out = value.get<std::string>();
        else if (kGeometryKeys.count(key)) {
            cfg.args[key] = value.is_string() ? value.get<std::string>() : value.dump();
        } else {
            throw stablefluct::DomainError("config file: unknown key '" + key + "'");
        }
    }
}

std::string find_config_path(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) return argv[i + 1];
        if (a.rfind("--config=", 0) == 0) return a.substr(9);
    }
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    bool tol_set = false;
    double tol = 0.0;

    if (const char* env_seed = std::getenv("STABLEFLUCT_SEED")) {
        try {
            cfg.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            std::cerr << "error: STABLEFLUCT_SEED is not an integer\n";
            return 2;
        }
    }

    try {
        const std::string config_path = find_config_path(argc, argv);
        if (!config_path.empty()) apply_config_file(config_path, cfg, tol_set, tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"closed-form fluctuation identities for isotropic stable processes,"
                 " cross-validated by quadrature and Monte Carlo"};
    app.require_subcommand(1);
    std::string config_dummy;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_dummy, "JSON config file mirroring the flag names");
        sub->add_option("--d", cfg.d, "dimension (>= 2)");
        sub->add_option("--alpha", cfg.alpha, "stability index in (0,2)");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
    };
    const auto add_geometry = [&](CLI::App* sub) {
        for (const std::string& key : kGeometryKeys) sub->add_option("--" + key, cfg.args[key]);
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate one identity");
    add_common(eval);
    add_geometry(eval);
    eval->add_option("--identity", cfg.identity, "identity name");

    CLI::App* check = app.add_subcommand("check", "run an identity suite");
    add_common(check);
    CLI::Option* tol_opt = check->add_option("--tol", tol, "override all case tolerances");
    check->add_option("--suite", cfg.suite, "suite name");

    CLI::App* sim = app.add_subcommand("simulate", "run a Monte Carlo experiment");
    add_common(sim);
    add_geometry(sim);
    sim->add_option("--experiment", cfg.experiment, "experiment name");
    sim->add_option("--n", cfg.n, "sample count (>= 100)");
    sim->add_option("--dt", cfg.dt, "Euler step");
    sim->add_option("--seed", cfg.seed, "master seed (default STABLEFLUCT_SEED or 0)");
    sim->add_option("--workers", cfg.workers, "independent worker streams");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (auto it = cfg.args.begin(); it != cfg.args.end();) {
        if (it->second.empty()) it = cfg.args.erase(it);
        else ++it;
    }
    if (tol_opt->count() > 0 || tol_set) cfg.tol = tol;

    if (eval->parsed()) cfg.command = Command::eval;
    else if (check->parsed()) cfg.command = Command::check;
    else cfg.command = Command::simulate;

    return stablefluct::cli::run(cfg, std::cout, std::cerr);
}
