#include "stablefluct/identities.hpp"

#include <cmath>
#include <string>

namespace stablefluct {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double half(double v) { return 0.5 * v; }

// All leading constants are assembled in log space and exponentiated once;
// |Gamma(-alpha/2)| blows up as alpha -> 0 or 2 and would lose digits
// otherwise.
double log_D(const StableParams& p) {
    // D = Gamma(d/2) / (Gamma((d-alpha)/2) Gamma(alpha/2))
    return log_gamma_real(half(p.d)) - log_gamma_real(half(p.d - p.alpha)) -
           log_gamma_real(half(p.alpha));
}

double ladder_potential_const(const StableParams& p) {
    // pi^{-d/2} Gamma(d/2)^2 / (Gamma((d-alpha)/2) Gamma(alpha/2))
    return std::exp(-half(p.d) * std::log(kPi) + log_gamma_real(half(p.d)) + log_D(p));
}

double require_positive_radius(double r, const char* who) {
    if (!(r > 0.0)) throw DomainError(std::string(who) + ": require radius r > 0");
    return r;
}

}  // namespace

double jump_density_radial(const StableParams& params, double wnorm) {
    validate(params);
    if (!(wnorm > 0.0)) throw DomainError("jump_density: require |w| > 0");
    const double lc = params.alpha * std::log(2.0) + log_gamma_real(half(params.d + params.alpha)) -
                      half(params.d) * std::log(kPi) - log_abs_gamma_neg_half_alpha(params.alpha);
    return std::exp(lc - (params.alpha + params.d) * std::log(wnorm));
}

double jump_density(const StableParams& params, const Point& w) {
    check_dimension(params, w, "jump_density");
    return jump_density_radial(params, norm(w));
}

std::complex<double> levy_exponent(const StableParams& params, double theta) {
    validate(params);
    if (theta == 0.0) return {0.0, 0.0};
    const std::complex<double> it(0.0, theta);
    const std::complex<double> lg = log_gamma(half(params.alpha) - 0.5 * it) -
                                    log_gamma(-0.5 * it) + log_gamma(0.5 * (it + double(params.d))) -
                                    log_gamma(0.5 * (it + double(params.d) - params.alpha));
    return std::exp(lg);
}

double ladder_potential_density_radial(const StableParams& params, LadderSide side, double xnorm,
                                       double znorm, double xz_dist) {
    validate(params);
    if (!(xnorm > 0.0)) throw DomainError("ladder_potential_density: require |x| > 0");
    if (side == LadderSide::minus) {
        if (!(znorm > 0.0 && znorm < xnorm))
            throw DomainError("ladder_potential_density(minus): require 0 < |z| < |x|");
    } else {
        if (!(znorm > xnorm))
            throw DomainError("ladder_potential_density(plus): require |z| > |x| > 0");
    }
    const double gap = std::abs(znorm - xnorm) * (znorm + xnorm);
    return ladder_potential_const(params) * std::pow(gap, half(params.alpha)) /
           (std::pow(znorm, params.alpha) * std::pow(xz_dist, params.d));
}

double ladder_potential_density(const StableParams& params, LadderSide side, const Point& x,
                                const Point& z) {
    check_dimension(params, x, "ladder_potential_density");
    check_dimension(params, z, "ladder_potential_density");
    return ladder_potential_density_radial(params, side, norm(x), norm(z), dist(x, z));
}

double closest_reach_density_gap(const StableParams& params, double xnorm, double gap, double t) {
    validate(params);
    if (!(xnorm > 0.0) || !(gap > 0.0) || !(gap < xnorm))
        throw DomainError("closest_reach_density_gap: require 0 < gap < |x|");
    const double ynorm = xnorm - gap;
    const double dist2 = two_center_dist2_gap(gap, xnorm, ynorm, t);
    return ladder_potential_const(params) *
           std::pow(gap * (xnorm + ynorm), half(params.alpha)) /
           (std::pow(ynorm, params.alpha) * std::pow(dist2, half(params.d)));
}

double closest_reach_density(const StableParams& params, const Point& x, const Point& y) {
    check_dimension(params, x, "closest_reach_density");
    check_dimension(params, y, "closest_reach_density");
    const double xn = norm(x), yn = norm(y);
    if (!(yn > 0.0)) throw DomainError("closest_reach_density: require y != 0");
    if (!(yn < xn)) throw DomainError("closest_reach_density: require |y| < |x|");
    return ladder_potential_density_radial(params, LadderSide::minus, xn, yn, dist(x, y));
}

double closest_reach_radial_cdf(const StableParams& params, double rho) {
    validate(params);
    if (!(rho > 0.0) || !(rho <= 1.0))
        throw DomainError("closest_reach_radial_cdf: require rho in (0,1]");
    return reg_inc_beta(rho * rho, half(params.d - params.alpha), half(params.alpha));
}

double first_passage_density(const StableParams& params, const Point& x, double r,
                             EntranceExitMode mode, const Point& y) {
    validate(params);
    check_dimension(params, x, "first_passage_density");
    check_dimension(params, y, "first_passage_density");
    require_positive_radius(r, "first_passage_density");
    const double xn = norm(x), yn = norm(y);
    if (mode == EntranceExitMode::entrance) {
        if (!(xn > r)) throw DomainError("first_passage_density(entrance): require |x| > r");
        if (!(yn < r)) throw DomainError("first_passage_density(entrance): require |y| < r");
    } else {
        if (!(xn < r)) throw DomainError("first_passage_density(exit): require |x| < r");
        if (!(yn > r)) throw DomainError("first_passage_density(exit): require |y| > r");
    }
    const double c = std::exp(-(half(params.d) + 1.0) * std::log(kPi) +
                              log_gamma_real(half(params.d))) *
                     std::sin(kPi * half(params.alpha));
    const double num = std::abs(r - xn) * (r + xn);
    const double den = std::abs(r - yn) * (r + yn);
    return c * std::pow(num / den, half(params.alpha)) * std::pow(dist(x, y), -double(params.d));
}

double survival_probability_radial(const StableParams& params, double xnorm, double r) {
    validate(params);
    require_positive_radius(r, "survival_probability");
    if (!(xnorm > r)) throw DomainError("survival_probability: require |x| > r");
    // I_{1-(r/|x|)^2}(alpha/2, (d-alpha)/2), with the argument assembled from
    // the factored difference to keep |x| near r accurate.
    const double u = (xnorm - r) * (xnorm + r) / (xnorm * xnorm);
    return reg_inc_beta(u, half(params.alpha), half(params.d - params.alpha));
}

double survival_probability(const StableParams& params, const Point& x, double r) {
    check_dimension(params, x, "survival_probability");
    return survival_probability_radial(params, norm(x), r);
}

double zeta_r(double r, double xnorm, double ynorm, double xy_dist) {
    const double fx = std::abs(xnorm - r) * (xnorm + r);
    const double fy = std::abs(ynorm - r) * (ynorm + r);
    return fx * fy / (r * r * xy_dist * xy_dist);
}

double resolvent_density(const StableParams& params, double r, EntranceExitMode mode,
                         const Point& x, const Point& y) {
    validate(params);
    check_dimension(params, x, "resolvent_density");
    check_dimension(params, y, "resolvent_density");
    require_positive_radius(r, "resolvent_density");
    const double xn = norm(x), yn = norm(y);
    if (mode == EntranceExitMode::exit) {
        if (!(xn < r && yn < r)) throw DomainError("resolvent_density(exit): require |x|,|y| < r");
    } else {
        if (!(xn > r && yn > r))
            throw DomainError("resolvent_density(entrance): require |x|,|y| > r");
    }
    const double sep = dist(x, y);
    if (sep == 0.0) throw SingularityError("resolvent_density: x = y");
    const double lc = -params.alpha * std::log(2.0) - half(params.d) * std::log(kPi) +
                      log_gamma_real(half(params.d)) - 2.0 * log_gamma_real(half(params.alpha));
    return std::exp(lc + (params.alpha - params.d) * std::log(sep)) *
           j_integral(zeta_r(r, xn, yn, sep), params);
}

double triple_density(const StableParams& params, double r, EntranceExitMode mode,
                      const Point& x, const Point& z, const Point& y, const Point& v) {
    validate(params);
    check_dimension(params, x, "triple_density");
    check_dimension(params, z, "triple_density");
    check_dimension(params, y, "triple_density");
    check_dimension(params, v, "triple_density");
    require_positive_radius(r, "triple_density");
    const double xn = norm(x), zn = norm(z), yn = norm(y), vn = norm(v);
    if (mode == EntranceExitMode::entrance) {
        if (!(xn > zn && zn > r)) throw DomainError("triple_density(entrance): require |x|>|z|>r");
        if (!(yn > zn)) throw DomainError("triple_density(entrance): require |y| > |z|");
        if (!(vn < r)) throw DomainError("triple_density(entrance): require |v| < r");
    } else {
        if (!(xn < zn && zn < r)) throw DomainError("triple_density(exit): require |x|<|z|<r");
        if (!(yn < zn)) throw DomainError("triple_density(exit): require |y| < |z|");
        if (!(vn > r)) throw DomainError("triple_density(exit): require |v| > r");
    }
    const double lc = -1.5 * params.d * std::log(kPi) +
                      log_gamma_real(half(params.d + params.alpha)) -
                      log_abs_gamma_neg_half_alpha(params.alpha) +
                      2.0 * log_gamma_real(half(params.d)) -
                      2.0 * log_gamma_real(half(params.alpha));
    const double a2 = half(params.alpha);
    const double gzx = std::abs(zn - xn) * (zn + xn);
    const double gyz = std::abs(yn - zn) * (yn + zn);
    return std::exp(lc) * std::pow(gzx, a2) * std::pow(gyz, a2) /
           (std::pow(zn, params.alpha) * std::pow(dist(z, x), params.d) *
            std::pow(dist(z, y), params.d) * std::pow(dist(v, y), params.alpha + params.d));
}

double pair_reach_density(const StableParams& params, double r, EntranceExitMode mode,
                          const Point& x, const Point& z, const Point& v) {
    validate(params);
    check_dimension(params, x, "pair_reach_density");
    check_dimension(params, z, "pair_reach_density");
    check_dimension(params, v, "pair_reach_density");
    require_positive_radius(r, "pair_reach_density");
    const double xn = norm(x), zn = norm(z), vn = norm(v);
    if (mode == EntranceExitMode::entrance) {
        if (!(xn > zn && zn > r))
            throw DomainError("pair_reach_density(entrance): require |x|>|z|>r");
        if (!(vn < r)) throw DomainError("pair_reach_density(entrance): require |v| < r");
    } else {
        if (!(xn < zn && zn < r)) throw DomainError("pair_reach_density(exit): require |x|<|z|<r");
        if (!(vn > r)) throw DomainError("pair_reach_density(exit): require |v| > r");
    }
    const double lc = -double(params.d) * std::log(kPi) + 2.0 * log_gamma_real(half(params.d)) -
                      log_abs_gamma_neg_half_alpha(params.alpha) -
                      log_gamma_real(half(params.alpha));
    const double a2 = half(params.alpha);
    const double gzx = std::abs(zn - xn) * (zn + xn);
    const double gzv = std::abs(zn - vn) * (zn + vn);
    return std::exp(lc) * std::pow(gzx, a2) /
           (std::pow(gzv, a2) * std::pow(dist(z, v), params.d) * std::pow(dist(z, x), params.d));
}

double pair_jump_density(const StableParams& params, double r, EntranceExitMode mode,
                         const Point& x, const Point& y, const Point& v) {
    validate(params);
    check_dimension(params, x, "pair_jump_density");
    check_dimension(params, y, "pair_jump_density");
    check_dimension(params, v, "pair_jump_density");
    require_positive_radius(r, "pair_jump_density");
    const double xn = norm(x), yn = norm(y), vn = norm(v);
    if (mode == EntranceExitMode::entrance) {
        if (!(xn > r && yn > r))
            throw DomainError("pair_jump_density(entrance): require |x|,|y| > r");
        if (!(vn < r)) throw DomainError("pair_jump_density(entrance): require |v| < r");
    } else {
        if (!(xn < r && yn < r)) throw DomainError("pair_jump_density(exit): require |x|,|y| < r");
        if (!(vn > r)) throw DomainError("pair_jump_density(exit): require |v| > r");
    }
    const double sep = dist(x, y);
    if (sep == 0.0) throw SingularityError("pair_jump_density: x = y");
    const double lc = log_gamma_real(half(params.d + params.alpha)) +
                      log_gamma_real(half(params.d)) - double(params.d) * std::log(kPi) -
                      log_abs_gamma_neg_half_alpha(params.alpha) -
                      2.0 * log_gamma_real(half(params.alpha));
    return std::exp(lc) * j_integral(zeta_r(r, xn, yn, sep), params) *
           std::pow(sep, params.alpha - params.d) *
           std::pow(dist(v, y), -(params.alpha + params.d));
}

double ladder_levy_density(const StableParams& params, double y) {
    validate(params);
    if (!(y > 0.0)) throw DomainError("ladder_levy_density: require y > 0");
    const double lc = std::log(params.alpha) + log_gamma_real(half(params.d - params.alpha)) -
                      log_gamma_real(half(params.d)) - log_gamma_real(1.0 - half(params.alpha));
    const double one_minus = -std::expm1(-2.0 * y);  // 1 - e^{-2y}, accurate near 0
    return std::exp(lc - (half(params.alpha) + 1.0) * std::log(one_minus) - params.d * y);
}

double ladder_laplace_exponent(const StableParams& params, double lambda) {
    validate(params);
    if (!(lambda >= 0.0)) throw DomainError("ladder_laplace_exponent: require lambda >= 0");
    return std::exp(log_gamma_real(half(params.d - params.alpha)) +
                    log_gamma_real(half(lambda + params.d)) - log_gamma_real(half(params.d)) -
                    log_gamma_real(half(lambda + params.d - params.alpha)));
}

double excursion_overshoot_density(const StableParams& params, const Point& theta,
                                   const Point& y) {
    validate(params);
    check_dimension(params, theta, "excursion_overshoot_density");
    check_dimension(params, y, "excursion_overshoot_density");
    if (std::abs(norm(theta) - 1.0) > 1e-12)
        throw DomainError("excursion_overshoot_density: require |theta| = 1");
    const double yn = norm(y);
    if (!(yn < 1.0)) throw DomainError("excursion_overshoot_density: require |y| < 1");
    const double lc = std::log(half(params.alpha)) - half(params.d) * std::log(kPi) +
                      log_gamma_real(half(params.d - params.alpha)) -
                      log_gamma_real(1.0 - half(params.alpha));
    const double gap = (1.0 - yn) * (1.0 + yn);
    return std::exp(lc) * std::pow(gap, -half(params.alpha)) *
           std::pow(dist(theta, y), -double(params.d));
}

double stationary_density_radial(const StableParams& params, double wnorm) {
    validate(params);
    if (!(wnorm >= 0.0) || wnorm >= 1.0)
        throw DomainError("stationary_density: require |w| < 1");
    const double lc = -half(params.d) * std::log(kPi) +
                      log_gamma_real(half(params.d + params.alpha)) -
                      log_gamma_real(half(params.alpha));
    const double gap = (1.0 - wnorm) * (1.0 + wnorm);
    return std::exp(lc) * std::pow(gap, half(params.alpha) - 1.0);
}

double stationary_density(const StableParams& params, const Point& w) {
    check_dimension(params, w, "stationary_density");
    return stationary_density_radial(params, norm(w));
}

double stationary_density_integral_form(const StableParams& params, const Point& w,
                                        const QuadratureSpec& spec) {
    validate(params);
    check_dimension(params, w, "stationary_density");
    const double wn = norm(w);
    if (wn >= 1.0) throw DomainError("stationary_density: require |w| < 1");
    const double lc = -half(params.d) * std::log(kPi) +
                      log_gamma_real(half(params.d + params.alpha)) -
                      log_gamma_real(half(params.alpha));
    const double gap = (1.0 - wn) * (1.0 + wn);
    return std::exp(lc) * std::pow(gap, half(params.alpha)) *
           poisson_kernel_average_radial(wn, params.d, spec);
}

double stationary_radial_moment(const StableParams& params, double gamma) {
    validate(params);
    if (!(gamma > 0.0)) throw DomainError("stationary_radial_moment: require gamma > 0");
    return std::exp(log_beta(gamma + half(params.d), half(params.alpha)) -
                    log_beta(half(params.d), half(params.alpha)));
}

}  // namespace stablefluct
