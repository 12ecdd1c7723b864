#pragma once

#include <complex>

#include "stablefluct/model.hpp"
#include "stablefluct/numerics.hpp"

namespace stablefluct {

// Entrance: tau_r^+ = inf{t>0: |X_t| < r} (from outside into the ball).
// Exit:     tau_r^- = inf{t>0: |X_t| > r} (from inside out of the ball).
enum class EntranceExitMode { entrance, exit };

// Minus: descending ladder potential U^-, support |z| < |x|.
// Plus:  ascending ladder potential U^+, support |z| > |x|.
enum class LadderSide { minus, plus };

// Density of the Levy measure:
//   [2^alpha Gamma((d+alpha)/2) / (pi^{d/2} |Gamma(-alpha/2)|)] |w|^{-(alpha+d)}.
double jump_density(const StableParams& params, const Point& w);
double jump_density_radial(const StableParams& params, double wnorm);

// Characteristic exponent of the Lamperti ordinate,
//   Psi(theta) = [G((-it+a)/2)/G(-it/2)] [G((it+d)/2)/G((it+d-a)/2)],
// with the theta = 0 value fixed to 0 by the Gamma pole in the denominator.
std::complex<double> levy_exponent(const StableParams& params, double theta);

// Law of the point of closest reach (support 0 < |y| < |x|):
//   pi^{-d/2} G(d/2)^2/(G((d-a)/2) G(a/2)) (|x|^2-|y|^2)^{a/2} / (|x-y|^d |y|^a).
double closest_reach_density(const StableParams& params, const Point& x, const Point& y);

// P(|X_G| <= rho) for |x| = 1: the Beta((d-alpha)/2, alpha/2) law of |X_G|^2.
double closest_reach_radial_cdf(const StableParams& params, double rho);

// First entrance/exit kernel:
//   pi^{-(d/2+1)} G(d/2) sin(pi a/2) (|r^2-|x|^2| / |r^2-|y|^2|)^{a/2} |x-y|^{-d}.
double first_passage_density(const StableParams& params, const Point& x, double r,
                             EntranceExitMode mode, const Point& y);

// P_x(tau_r^+ = infinity) = D_{a,d} J((|x|/r)^2 - 1) = I_{1-(r/|x|)^2}(a/2,(d-a)/2).
double survival_probability(const StableParams& params, const Point& x, double r);
double survival_probability_radial(const StableParams& params, double xnorm, double r);

// Expected occupation density before first exit (mode exit, |x|,|y| < r) or
// first entrance (mode entrance, |x|,|y| > r):
//   2^{-a} pi^{-d/2} G(d/2)/G(a/2)^2 |x-y|^{a-d} J(zeta_r(x,y)).
double resolvent_density(const StableParams& params, double r, EntranceExitMode mode,
                         const Point& x, const Point& y);

// zeta_r(x,y) = (|x|^2-r^2)(|y|^2-r^2)/(r^2 |x-y|^2), computed in the
// cancellation-stable factored form; positive whenever x,y are on a common
// side of the sphere of radius r.
double zeta_r(double r, double xnorm, double ynorm, double xy_dist);

// Triple law at first entrance/exit: density of (closest/furthest reach z,
// position before jump y, landing position v).
double triple_density(const StableParams& params, double r, EntranceExitMode mode,
                      const Point& x, const Point& z, const Point& y, const Point& v);

// Corollary kernel chi_x(z, ., v).
double pair_reach_density(const StableParams& params, double r, EntranceExitMode mode,
                          const Point& x, const Point& z, const Point& v);

// Corollary kernel chi_x(., y, v); factorizes exactly as
// resolvent_density(x,y) * jump_density(v-y).
double pair_jump_density(const StableParams& params, double r, EntranceExitMode mode,
                         const Point& x, const Point& y, const Point& v);

// Potential density of the descending (minus) / ascending (plus) ladder MAP in
// cartesian form; the same kernel as closest_reach_density on either support.
double ladder_potential_density(const StableParams& params, LadderSide side, const Point& x,
                                const Point& z);
double ladder_potential_density_radial(const StableParams& params, LadderSide side, double xnorm,
                                       double znorm, double xz_dist);

// Same kernel on the minus support, parameterized by the exact radial gap
// |x| - |y| > 0 and the angle t between x and y.  Quadratures that push the
// evaluation point against the |y| = |x| boundary use this form; recomputing
// the gap from a rounded radius would lose it entirely.
double closest_reach_density_gap(const StableParams& params, double xnorm, double gap, double t);

// Levy density of the descending ladder height subordinator H^-:
//   [a G((d-a)/2) / (G(d/2) G(1-a/2))] (1-e^{-2y})^{-a/2-1} e^{-dy},  y > 0.
double ladder_levy_density(const StableParams& params, double y);

// Laplace exponent of H^- normalized so Phi(0) = 1:
//   Phi(lambda) = G((d-a)/2) G((lambda+d)/2) / (G(d/2) G((lambda+d-a)/2)).
// The killing-corrected relation Phi(lambda) = 1 + int (1-e^{-lambda y}) nu(dy)
// is exposed as a checkable identity (suite "phi-minus").
double ladder_laplace_exponent(const StableParams& params, double lambda);

// Excursion overshoot density under N_theta (|theta| = 1, |y| < 1):
//   (a/2) pi^{-d/2} G((d-a)/2)/G(1-a/2) (1-|y|^2)^{-a/2} |theta-y|^{-d}.
double excursion_overshoot_density(const StableParams& params, const Point& theta,
                                   const Point& y);

// Stationary density of X/M on |w| < 1.  The simplified form uses the Poisson
// potential formula; the integral form keeps the spherical average numeric.
double stationary_density(const StableParams& params, const Point& w);
double stationary_density_radial(const StableParams& params, double wnorm);
double stationary_density_integral_form(const StableParams& params, const Point& w,
                                        const QuadratureSpec& spec = {});

// E[|W|^{2 gamma}] = B(gamma + d/2, a/2)/B(d/2, a/2), the Beta(d/2, a/2)
// moment of |W|^2.
double stationary_radial_moment(const StableParams& params, double gamma);

}  // namespace stablefluct
