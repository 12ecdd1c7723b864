#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stablefluct/model.hpp"

namespace stablefluct::suites {

// Registered identity-check suites:
//   normalization, beta-marginal, bgr-consistency, marginalization,
//   kelvin-duality, phi-minus, overshoot-nu, factorization, stationary,
//   poisson-kernel, escape-limit.
// Each case carries its pinned tolerance; tol_override replaces all of them.
std::vector<IdentityReport> run_suite(const std::string& name, const StableParams& params,
                                      std::optional<double> tol_override = std::nullopt);

std::vector<std::string> suite_names();

// Individual suites (used directly by the acceptance harness).
std::vector<IdentityReport> normalization(const StableParams& params, double tol = 1e-6);
std::vector<IdentityReport> beta_marginal(const StableParams& params, double tol = 1e-6);
std::vector<IdentityReport> bgr_consistency(const StableParams& params, double tol = 1e-6);
std::vector<IdentityReport> marginalization(const StableParams& params);
std::vector<IdentityReport> kelvin_duality(const StableParams& params, double tol = 1e-12);
std::vector<IdentityReport> phi_minus(const StableParams& params, double tol = 1e-8);
std::vector<IdentityReport> overshoot_nu(const StableParams& params, double tol = 1e-8);
std::vector<IdentityReport> factorization(const StableParams& params);
std::vector<IdentityReport> stationary(const StableParams& params);
std::vector<IdentityReport> poisson_kernel(const StableParams& params, double tol = 1e-8);
std::vector<IdentityReport> escape_limit(const StableParams& params, double tol = 1e-3);

}  // namespace stablefluct::suites
