#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "stablefluct/model.hpp"

namespace stablefluct::cli {

enum class Command { eval, check, simulate };

// Parse-validated invocation.  Geometry arguments stay as raw comma-separated
// strings and are interpreted (and dimension-checked) per identity.
struct RunConfig {
    Command command = Command::eval;
    int d = 2;
    double alpha = 1.0;
    std::string identity;
    std::string suite;
    std::string experiment;
    std::map<std::string, std::string> args;  // x,y,z,v,w,theta,r,rho,lam,gamma,opz,mode,side,f,...
    std::optional<double> tol;
    std::uint64_t n = 10000;
    int workers = 1;
    std::uint64_t seed = 0;
    double dt = 1e-3;
    std::string out;  // empty: stdout
};

// Exit codes: 0 success / all-pass, 1 check failures, 2 usage or domain error.
int run_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace stablefluct::cli
