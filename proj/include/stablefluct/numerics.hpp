#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "stablefluct/model.hpp"

namespace stablefluct {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Special functions
// ---------------------------------------------------------------------------

// Principal-branch log Gamma.  Lanczos rational approximation (g = 607/128,
// 15 terms) with reflection for Re z < 0.5; conjugate symmetry enforced for
// Im z < 0.  Throws PoleError at nonpositive integers.
std::complex<double> log_gamma(std::complex<double> z);

// Real log |Gamma(x)| routed through the same machinery contract; x > 0 only.
double log_gamma_real(double x);

// log |Gamma(-alpha/2)| for alpha in (0,2), via |Gamma(-a)| = Gamma(1-a)/a.
double log_abs_gamma_neg_half_alpha(double alpha);

double log_beta(double a, double b);

// Regularized incomplete beta I_x(a,b).  Continued fraction with the symmetry
// switch at x = (a+1)/(a+b+2).
double reg_inc_beta(double x, double a, double b);

// J(zeta) = int_0^zeta (1+u)^{-d/2} u^{alpha/2-1} du
//         = B(alpha/2,(d-alpha)/2) * I_{zeta/(1+zeta)}(alpha/2,(d-alpha)/2).
// The substitution u = s/(1-s) is exact; zeta = +inf gives the full beta.
double j_integral(double zeta, const StableParams& params);

// ---------------------------------------------------------------------------
// Deterministic quadrature
// ---------------------------------------------------------------------------

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 100;
    int max_panels = 40000;
    // Interior/endpoint abscissae with integrable (power-type, exponent > -1)
    // singularities; forces initial panel breaks there.
    std::vector<double> singularity_hints;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
    int panels = 0;
};

// Globally adaptive Gauss-Kronrod 7-15 bisection on (a,b); b may be +inf, in
// which case the fixed transform u = t/(1-t) is applied.  Never raises on
// tolerance failure; inspect .converged.
QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec = {});

// As integrate_1d but throws ToleranceNotMet (carrying the best estimate and
// achieved error) when the tolerance could not be reached.
double integrate_1d_strict(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

std::complex<double> integrate_1d_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, const QuadratureSpec& spec = {});

// Mean of g(<phi, e1>) over the unit sphere S_{d-1} with normalized surface
// measure: c_d int_0^pi g(cos t) sin^{d-2} t dt, c_d = Gamma(d/2)/(sqrt(pi)
// Gamma((d-1)/2)).  For d = 2 this is (1/pi) int_0^pi g(cos t) dt.
double sphere_average(const std::function<double(double)>& g, int d,
                      const QuadratureSpec& spec = {});

// Same average with the integrand given the colatitude angle directly, for
// kernels that would lose precision through 1 - cos t near the axis.
double sphere_average_t(const std::function<double(double)>& g_of_t, int d,
                        const QuadratureSpec& spec = {});

// |a e - b phi|^2 for unit vectors e, phi at angle t:
// (a-b)^2 + 4ab sin^2(t/2), stable for a near b and t near 0.
double two_center_dist2(double a, double b, double t);

// Same with the radial gap a-b supplied exactly by the caller (for
// integrands parameterized by the distance to a singular radius, where
// recomputing a-b from rounded radii would lose every digit).
double two_center_dist2_gap(double gap, double a, double b, double t);

// Total surface measure of S_{d-1}: 2 pi^{d/2} / Gamma(d/2).
double sphere_surface(int d);

// Numerically evaluates int |phi - w|^{-d} sigma_1(dphi); contract: equals
// (1-|w|^2)^{-1} for |w| < 1.
double poisson_kernel_average(const Point& w, int d, const QuadratureSpec& spec = {});
double poisson_kernel_average_radial(double wnorm, int d, const QuadratureSpec& spec = {});

}  // namespace stablefluct
