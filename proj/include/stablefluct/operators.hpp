#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "stablefluct/model.hpp"
#include "stablefluct/numerics.hpp"

namespace stablefluct {

// Bounded measurable f on the unit sphere.  General evaluators are supported
// for d = 2 (angle quadrature); for d >= 3 the function must be constant or
// declare an axis of rotational symmetry so the spherical integral reduces to
// one dimension.
struct SphereFunction {
    std::function<double(const Point&)> eval;
    std::string label;
    bool is_constant = false;
    // If set, eval(phi) depends only on <phi, axis>/|axis|.
    std::optional<Point> symmetry_axis;

    static SphereFunction constant(double value, std::string label = "const");
};

QuadratureSpec default_operator_spec();

// Ascending-ladder potential operator of the deep factorisation,
//   rho_z[f](theta) = pi^{-d/2} G(d/2)^2/(G((d-a)/2)G(a/2))
//                     int_{|y|>1} f(arg y) (|y|^2-1)^{a/2} |y|^{-a-z}
//                     |theta-y|^{-d} dy,
// evaluated by radial x spherical quadrature.  Requires Re z > 0.
std::complex<double> rho_op(const StableParams& params, std::complex<double> z,
                            const SphereFunction& f, const Point& theta,
                            const QuadratureSpec& spec = default_operator_spec());

// Resolvent operator of the underlying MAP in the form established by the
// derivation (free potential u(theta,y) against the weight |y|^{-(alpha+z)}):
//   R_z[f](theta) = int_{R^d} f(arg y) u(theta,y) |y|^{-(alpha+z)} dy,
//   u(x,y) = G((d-a)/2)/(2^a pi^{d/2} G(a/2)) |y-x|^{a-d}.
// Absolutely convergent on the strip 0 < Re z < d - alpha.
std::complex<double> resolvent_op(const StableParams& params, std::complex<double> z,
                                  const SphereFunction& f, const Point& theta,
                                  const QuadratureSpec& spec = default_operator_spec());

// Alternative resolvent form with the integrand |y-theta|^{z-d} carrying the
// whole weight.  That integral does not converge absolutely at either end;
// this evaluator truncates to r_min < |y - theta| < r_max and reports the
// truncated value so the divergence can be inspected.  Never used in checks.
double resolvent_op_as_printed_truncated(const StableParams& params, double z,
                                         const SphereFunction& f, const Point& theta,
                                         double r_min, double r_max,
                                         const QuadratureSpec& spec = default_operator_spec());

// Wiener-Hopf residual: lhs = R_z[f](theta), rhs = C_{a,d} *
// rho_{d-a-z}[rho_z[f]](theta) with C_{a,d} = 2^{-a} G((d-a)/2)^2/G(d/2)^2,
// averaged over a fixed set of directions.  z real in (0, d-alpha).
IdentityReport factorization_residual(const StableParams& params, double z,
                                      const SphereFunction& f, double tol = 1e-6,
                                      const QuadratureSpec& spec = default_operator_spec());

// Excursion occupation functional
//   N_theta(int_0^zeta g ds) = 2^{-a} G((d-a)/2)^2/G(d/2)^2
//                              int_{|z|>1} g(z) U^+_theta(dz),
// for g supported on the radial shell [support_lo, support_hi], 1 < lo <= hi.
double excursion_occupation_value(const StableParams& params,
                                  const std::function<double(const Point&)>& g,
                                  double support_lo, double support_hi, const Point& theta,
                                  const QuadratureSpec& spec = default_operator_spec());

// Checks both algebraic Kelvin dualities for 0 < |x| < |z|:
//  (i)  U^+ density at (x,z) vs U^- density at (Kx,Kz) times
//       (|x|/|z|)^{a-d} |z|^{-2d};
//  (ii) h^+_1(P,Q) vs (|P|/|Q|)^{a-d} h^-_1(KP,KQ) |Q|^{2a-2d}, evaluated at
//       P = (1+|x|) x/|x|, Q = (1+|z|) z/|z| so both points lie strictly
//       outside the unit ball for any admissible input.
// Returns the worse of the two as an IdentityReport.
IdentityReport kelvin_duality_check(const StableParams& params, const Point& x, const Point& z,
                                    double tol = 1e-12);

}  // namespace stablefluct
