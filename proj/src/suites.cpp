#include "stablefluct/suites.hpp"

#include <cmath>
#include <functional>

#include "stablefluct/identities.hpp"
#include "stablefluct/numerics.hpp"
#include "stablefluct/operators.hpp"

namespace stablefluct::suites {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// Point at radius rho whose angle to the first axis is t.
Point radial_point(int d, double rho, double t) {
    Point p(static_cast<std::size_t>(d));
    p[0] = rho * std::cos(t);
    p[1] = rho * std::sin(t);
    return p;
}

Point axis_point(int d, double xnorm) {
    Point p(static_cast<std::size_t>(d));
    p[0] = xnorm;
    return p;
}

std::vector<std::pair<std::string, std::string>> base_params(const StableParams& p) {
    return {{"d", std::to_string(p.d)}, {"alpha", fmt(p.alpha)}};
}

using KV = std::vector<std::pair<std::string, std::string>>;

KV with(KV kv, std::initializer_list<std::pair<std::string, std::string>> extra) {
    for (const auto& e : extra) kv.push_back(e);
    return kv;
}

QuadratureSpec radial_spec(std::vector<double> hints = {}, double rel = 1e-9) {
    QuadratureSpec s;
    s.rel_tol = rel;
    s.abs_tol = 1e-13;
    s.singularity_hints = std::move(hints);
    return s;
}

QuadratureSpec angular_spec(double rel = 1e-10) {
    QuadratureSpec s;
    s.rel_tol = rel;
    s.abs_tol = 1e-14;
    return s;
}

// Spherical mean over the colatitude angle; peak_width marks a kernel spike
// at t = 0 narrower than the first quadrature panel.
double sphere_mean_peaked(int d, double peak_width, const std::function<double(double)>& g_of_t,
                          QuadratureSpec spec) {
    if (peak_width > 0.0 && peak_width < 0.1) {
        const double w = std::max(peak_width, 1e-14);
        spec.singularity_hints.push_back(w);
        spec.singularity_hints.push_back(8.0 * w);
    }
    return sphere_average_t(g_of_t, d, spec);
}

}  // namespace

std::vector<IdentityReport> normalization(const StableParams& p, double tol) {
    validate(p);
    const double xn = 1.5;
    const double surf = sphere_surface(p.d);
    // mean of the density over the sphere of radius |x| - gap, gap exact
    const auto shell = [&](double gap) {
        const double rho = xn - gap;
        const double width = gap / std::sqrt(xn * rho);
        const double mean = sphere_mean_peaked(
            p.d, width, [&](double t) { return closest_reach_density_gap(p, xn, gap, t); },
            angular_spec());
        return surf * std::pow(rho, p.d - 1.0) * mean;
    };
    // inner half of the ball, plain; the gap there is macroscopic
    const double inner_half =
        integrate_1d_strict([&](double rho) { return shell(xn - rho); }, 0.0, 0.5 * xn,
                            radial_spec({}, 1e-9));
    // boundary half in v = gap^{alpha/2}: the (|x|^2-|y|^2)^{alpha/2-1} mass
    // profile near the boundary is unreachable by plain bisection
    const double q = 0.5 * p.alpha;
    const auto boundary_integrand = [&](double v) {
        const double gap = std::pow(v, 1.0 / q);
        const double jac = (1.0 / q) * std::pow(v, 1.0 / q - 1.0);
        return shell(gap) * jac;
    };
    const double boundary_half =
        integrate_1d_strict(boundary_integrand, 0.0, std::pow(0.5 * xn, q), radial_spec({}, 1e-9));
    const double integral = inner_half + boundary_half;
    return {make_report("closest-reach-normalization",
                        with(base_params(p), {{"|x|", fmt(xn)}}), integral, 1.0, tol)};
}

std::vector<IdentityReport> beta_marginal(const StableParams& p, double tol) {
    validate(p);
    const Point x = axis_point(p.d, 1.0);
    const double a = 0.5 * (p.d - p.alpha), b = 0.5 * p.alpha;
    const double log_b_ab = log_beta(a, b);
    std::vector<IdentityReport> out;
    for (int k = 1; k <= 20; ++k) {
        const double rho = k / 21.0;
        const double mean = sphere_average_t(
            [&](double t) { return closest_reach_density(p, x, radial_point(p.d, rho, t)); },
            p.d, angular_spec());
        const double marginal = sphere_surface(p.d) * std::pow(rho, p.d - 1.0) * mean;
        const double u = rho * rho;
        const double beta_pdf =
            std::exp((a - 1.0) * std::log(u) + (b - 1.0) * std::log1p(-u) - log_b_ab);
        out.push_back(make_report("beta-radial-marginal",
                                  with(base_params(p), {{"rho", fmt(rho)}}), marginal,
                                  beta_pdf * 2.0 * rho, tol));
    }
    return out;
}

std::vector<IdentityReport> bgr_consistency(const StableParams& p, double tol) {
    validate(p);
    std::vector<IdentityReport> out;
    const double r = 1.0, xn = 2.0;
    const Point x = axis_point(p.d, xn);
    const double surv = survival_probability(p, x, r);

    // entrance-law mass + survival = 1; the (r^2-|y|^2)^{-alpha/2} boundary
    // factor is handled exactly through the gap and a power substitution.
    // The constant block is extracted through the evaluator itself at y = 0.
    const Point origin(static_cast<std::size_t>(p.d));
    const double c_bgr = first_passage_density(p, x, r, EntranceExitMode::entrance, origin) *
                         std::pow(xn, p.d) * std::pow(r, p.alpha);
    const auto shell = [&](double gap) {
        // mean of |x-y|^{-d} over the sphere of radius rho = r - gap
        const double rho = r - gap;
        const double mean = sphere_average_t(
            [&](double t) {
                const double dist2 = two_center_dist2(xn, rho, t);
                return std::pow(dist2, -0.5 * p.d);
            },
            p.d, angular_spec());
        return sphere_surface(p.d) * std::pow(rho, p.d - 1.0) * mean * c_bgr *
               std::pow(gap * (r + rho), -0.5 * p.alpha);
    };
    const double plain = integrate_1d_strict([&](double rho) { return shell(r - rho); }, 0.0,
                                             0.5 * r, radial_spec({}, 1e-9));
    const double q = 1.0 - 0.5 * p.alpha;
    const auto boundary_integrand = [&](double v) {
        const double gap = std::pow(v, 1.0 / q);
        const double jac = (1.0 / q) * std::pow(v, 1.0 / q - 1.0);
        return shell(gap) * jac;
    };
    const double boundary =
        integrate_1d_strict(boundary_integrand, 0.0, std::pow(0.5 * r, q), radial_spec({}, 1e-9));
    out.push_back(make_report("bgr-mass-plus-survival",
                              with(base_params(p), {{"|x|", fmt(xn)}, {"r", fmt(r)}}),
                              plain + boundary + surv, 1.0, tol));

    // P(|X_G| > rho) under P_1 equals survival from radius 1 down to rho
    const double rho = 0.6;
    out.push_back(make_report(
        "closest-reach-cdf-vs-survival", with(base_params(p), {{"rho", fmt(rho)}}),
        1.0 - closest_reach_radial_cdf(p, rho),
        survival_probability_radial(p, 1.0, rho), std::min(tol, 1e-10)));

    if (p.d == 2 && p.alpha == 1.0) {
        out.push_back(make_report("survival-closed-form",
                                  with(base_params(p), {{"|x|", "2"}, {"r", "1"}}), surv,
                                  2.0 / 3.0, 1e-10));
    }
    return out;
}

// Quadrature nodes land within one ulp of a support boundary, where norms
// reconstructed from coordinates can round across it; the densities vanish
// there, so the boundary limit is zero.
template <typename F>
double zero_off_support(const F& f) {
    try {
        return f();
    } catch (const DomainError&) {
        return 0.0;
    }
}

std::vector<IdentityReport> marginalization(const StableParams& p) {
    validate(p);
    std::vector<IdentityReport> out;
    // evaluator noise from norm reconstruction sits near 1e-8 relative, so
    // these quadratures must not chase tighter targets; the absolute floor is
    // calibrated to the O(0.1..1) quantities the means feed into
    QuadratureSpec ang;
    ang.rel_tol = 1e-7;
    ang.abs_tol = 1e-10;
    QuadratureSpec rad;
    rad.rel_tol = 3e-7;
    rad.abs_tol = 1e-10;
    const double r = 1.0;
    const Point x3 = axis_point(p.d, 3.0);
    const Point z2 = axis_point(p.d, 2.0);
    const Point x2 = axis_point(p.d, 2.0);
    const Point v0(static_cast<std::size_t>(p.d));

    // integrate the triple law over the pre-jump position y (support |y| > |z|).
    // The constant block is pulled through the evaluator at a reference point;
    // the radial gap |y| - |z| then stays exact against the boundary, where a
    // v = gap^{alpha/2} substitution absorbs the mass profile.
    {
        const Point y_ref = radial_point(p.d, 4.0, 0.0);
        const double c_triple =
            triple_density(p, r, EntranceExitMode::entrance, x3, z2, y_ref, v0) *
            std::pow(2.0, p.d) * std::pow(4.0, p.alpha + p.d) /
            std::pow(12.0, 0.5 * p.alpha);
        const auto shell = [&](double gap) {
            const double rho = 2.0 + gap;
            const double width = gap / std::sqrt(2.0 * rho);
            const double mean = sphere_mean_peaked(
                p.d, width,
                [&](double t) {
                    const double dist2 = two_center_dist2_gap(gap, rho, 2.0, t);
                    return std::pow(dist2, -0.5 * p.d);
                },
                ang);
            return sphere_surface(p.d) * std::pow(rho, p.d - 1.0) * c_triple *
                   std::pow(gap * (rho + 2.0), 0.5 * p.alpha) *
                   std::pow(rho, -(p.alpha + p.d)) * mean;
        };
        const double q = 0.5 * p.alpha;
        const auto near_integrand = [&](double v) {
            const double gap = std::pow(v, 1.0 / q);
            const double jac = (1.0 / q) * std::pow(v, 1.0 / q - 1.0);
            return shell(gap) * jac;
        };
        const double near_mass =
            integrate_1d_strict(near_integrand, 0.0, 1.0, radial_spec({}, 1e-8));
        const double far_mass = integrate_1d_strict(
            [&](double rho) { return shell(rho - 2.0); }, 3.0, kInf, radial_spec({}, 1e-8));
        const double want = pair_reach_density(p, r, EntranceExitMode::entrance, x3, z2, v0);
        out.push_back(
            make_report("triple-marginal-y", base_params(p), near_mass + far_mass, want, 1e-4));
    }

    // integrate the reach/landing pair over the closest-reach point z
    {
        const Point z_ref = radial_point(p.d, 1.5, 0.0);
        const double c_pair =
            pair_reach_density(p, r, EntranceExitMode::entrance, x2, z_ref, v0) *
            std::pow(1.5, p.alpha + p.d) * std::pow(0.5, p.d) /
            std::pow(4.0 - 2.25, 0.5 * p.alpha);
        const auto shell = [&](double gap) {
            const double rho = 2.0 - gap;
            const double width = gap / std::sqrt(2.0 * rho);
            const double mean = sphere_mean_peaked(
                p.d, width,
                [&](double t) {
                    const double dist2 = two_center_dist2_gap(gap, 2.0, rho, t);
                    return std::pow(dist2, -0.5 * p.d);
                },
                ang);
            return sphere_surface(p.d) * std::pow(rho, p.d - 1.0) * c_pair *
                   std::pow(gap * (rho + 2.0), 0.5 * p.alpha) *
                   std::pow(rho, -(p.alpha + p.d)) * mean;
        };
        const double plain = integrate_1d_strict([&](double rho) { return shell(2.0 - rho); }, r,
                                                 1.5, radial_spec({}, 1e-8));
        const double q = 0.5 * p.alpha;
        const auto near_integrand = [&](double v) {
            const double gap = std::pow(v, 1.0 / q);
            const double jac = (1.0 / q) * std::pow(v, 1.0 / q - 1.0);
            return shell(gap) * jac;
        };
        const double near_mass =
            integrate_1d_strict(near_integrand, 0.0, std::pow(0.5, q), radial_spec({}, 1e-8));
        const double got = plain + near_mass;
        const double want = first_passage_density(p, x2, r, EntranceExitMode::entrance, v0);
        out.push_back(make_report("pair-reach-marginal-z", base_params(p), got, want, 1e-4));
    }

    // the full (y,v) mass of the jump pair equals the entrance probability
    {
        // int_{|v|<r} |v-y|^{-(alpha+d)} dv collapses to one dimension: shells
        // of radius u around y meet the ball in a cap whose normalized surface
        // fraction is I_x((d-1)/2,(d-1)/2) with x = (u-g)(r+rho-u)/(4 rho u),
        // g = |y| - r.
        const double cap_a = 0.5 * (p.d - 1.0);
        const auto ball_mass = [&](double ynorm) {
            const double g = ynorm - r;
            const auto shell_cap = [&](double u) {
                const double x = std::clamp((u - g) * (r + ynorm - u) / (4.0 * ynorm * u), 0.0, 1.0);
                return std::pow(u, p.d - 1.0 - (p.alpha + p.d)) * reg_inc_beta(x, cap_a, cap_a);
            };
            QuadratureSpec s = radial_spec({2.0 * g}, 1e-8);
            s.abs_tol = 1e-10;
            return sphere_surface(p.d) *
                   integrate_1d_strict(shell_cap, g, ynorm + r, s);
        };
        const double jump_const = jump_density_radial(p, 1.0);  // constant * 1^{-(a+d)}
        const auto radial = [&](double rho) {
            const double width = std::abs(rho - 2.0) / std::sqrt(2.0 * rho);
            const double mean = sphere_mean_peaked(
                p.d, width,
                [&](double t) {
                    return zero_off_support([&] {
                        return resolvent_density(p, r, EntranceExitMode::entrance, x2,
                                                 radial_point(p.d, rho, t));
                    });
                },
                ang);
            return std::pow(rho, p.d - 1.0) * mean * jump_const * ball_mass(rho);
        };
        QuadratureSpec rs = rad;
        rs.rel_tol = 1e-6;
        rs.singularity_hints = {r, 2.0};
        const double got = sphere_surface(p.d) * integrate_1d_strict(radial, r, kInf, rs);
        const double want = 1.0 - survival_probability(p, x2, r);
        out.push_back(make_report("pair-jump-full-mass", base_params(p), got, want, 1e-3));
    }

    // Corollary kernel factorizes exactly through the resolvent and the jump
    {
        const Point y = radial_point(p.d, 1.5, 0.0);
        const Point v = radial_point(p.d, 0.2, 0.0);
        const double got = pair_jump_density(p, r, EntranceExitMode::entrance, x2, y, v);
        const double want = resolvent_density(p, r, EntranceExitMode::entrance, x2, y) *
                            jump_density(p, v - y);
        out.push_back(make_report("pair-jump-factorized", base_params(p), got, want, 1e-12));
    }
    return out;
}

std::vector<IdentityReport> kelvin_duality(const StableParams& p, double tol) {
    validate(p);
    std::vector<IdentityReport> out;
    // fixed seeded pairs: |x| in (0.2, 1.6), |z| = |x| + gap, arbitrary angles
    std::uint64_t state = 0x5EEDBA5Eu;
    auto next01 = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    for (int k = 0; k < 10; ++k) {
        const double xn = 0.2 + 1.4 * next01();
        const double zn = xn + 0.3 + 2.0 * next01();
        const double ax = 2.0 * kPi * next01();
        const double az = 2.0 * kPi * next01();
        Point x(static_cast<std::size_t>(p.d)), z(static_cast<std::size_t>(p.d));
        x[0] = xn * std::cos(ax);
        x[1] = xn * std::sin(ax);
        z[0] = zn * std::cos(az);
        z[1] = zn * std::sin(az);
        out.push_back(kelvin_duality_check(p, x, z, tol));
    }
    return out;
}

std::vector<IdentityReport> phi_minus(const StableParams& p, double tol) {
    validate(p);
    std::vector<IdentityReport> out;
    for (double lambda : {0.5, 1.0, 2.0}) {
        const auto integrand = [&](double y) {
            return -std::expm1(-lambda * y) * ladder_levy_density(p, y);
        };
        const double integral = integrate_1d_strict(integrand, 0.0, kInf, radial_spec({}, 1e-10));
        const double phi = ladder_laplace_exponent(p, lambda);
        out.push_back(make_report("phi-minus-corrected",
                                  with(base_params(p), {{"lambda", fmt(lambda)}}), phi - 1.0,
                                  integral, tol));
    }
    if (p.d == 2 && p.alpha == 1.0) {
        out.push_back(make_report("phi-minus-exact", with(base_params(p), {{"lambda", "2"}}),
                                  ladder_laplace_exponent(p, 2.0), 2.0, 1e-12));
    }
    return out;
}

std::vector<IdentityReport> overshoot_nu(const StableParams& p, double tol) {
    validate(p);
    std::vector<IdentityReport> out;
    const Point theta = axis_point(p.d, 1.0);
    for (double s : {0.3, 0.7}) {
        const double mean = sphere_average_t(
            [&](double t) {
                return excursion_overshoot_density(p, theta, radial_point(p.d, s, t));
            },
            p.d, angular_spec());
        // radial overshoot marginal at radius s, mapped to u = -log s
        const double in_u = sphere_surface(p.d) * std::pow(s, p.d - 1.0) * mean * s;
        const double nu = ladder_levy_density(p, -std::log(s));
        out.push_back(
            make_report("overshoot-radial-vs-nu", with(base_params(p), {{"s", fmt(s)}}), in_u,
                        nu, tol));
    }
    return out;
}

std::vector<IdentityReport> factorization(const StableParams& p) {
    validate(p);
    std::vector<IdentityReport> out;
    const Point e1 = axis_point(p.d, 1.0);
    const SphereFunction one = SphereFunction::constant(1.0, "1");

    // rho_z[1] against the gamma closed form
    for (double z : {0.5, 1.0, 2.0}) {
        const double got = rho_op(p, z, one, e1).real();
        const double want =
            std::exp(log_gamma_real(0.5 * p.d) + log_gamma_real(0.5 * z) -
                     log_gamma_real(0.5 * (p.d - p.alpha)) - log_gamma_real(0.5 * (z + p.alpha)));
        out.push_back(make_report("rho-closed-form", with(base_params(p), {{"z", fmt(z)}}), got,
                                  want, 1e-8));
    }

    // Wiener-Hopf residual across the strip
    const double strip = p.d - p.alpha;
    for (double frac : {0.25, 0.5, 0.75}) {
        IdentityReport rep = factorization_residual(p, frac * strip, one, 1e-6);
        out.push_back(rep);
    }

    if (p.d == 2) {
        SphereFunction h1;
        h1.eval = [](const Point& phi) { return phi[0]; };
        h1.label = "phi1";
        QuadratureSpec spec = default_operator_spec();
        spec.rel_tol = 1e-8;
        out.push_back(factorization_residual(p, 0.5 * strip, h1, 1e-4, spec));
    }
    return out;
}

std::vector<IdentityReport> stationary(const StableParams& p) {
    validate(p);
    std::vector<IdentityReport> out;
    // radial mass with the (1-rho^2)^{alpha/2-1} boundary handled exactly:
    // in v = gap^{alpha/2} the boundary factor and the jacobian cancel to a
    // constant, leaving a smooth profile
    const double lc = -0.5 * p.d * std::log(kPi) + log_gamma_real(0.5 * (p.d + p.alpha)) -
                      log_gamma_real(0.5 * p.alpha);
    const auto radial_mass = [&](double two_gamma) {
        const double q = 0.5 * p.alpha;
        const auto plain = [&](double rho) {
            return std::pow(rho, p.d - 1.0 + two_gamma) * stationary_density_radial(p, rho);
        };
        const auto boundary = [&](double v) {
            const double gap = std::pow(v, 1.0 / q);
            const double rho = 1.0 - gap;
            return (1.0 / q) * std::exp(lc) * std::pow(rho, p.d - 1.0 + two_gamma) *
                   std::pow(1.0 + rho, 0.5 * p.alpha - 1.0);
        };
        return sphere_surface(p.d) *
               (integrate_1d_strict(plain, 0.0, 0.5, radial_spec({}, 1e-10)) +
                integrate_1d_strict(boundary, 0.0, std::pow(0.5, q), radial_spec({}, 1e-10)));
    };
    out.push_back(make_report("stationary-normalization", base_params(p), radial_mass(0.0), 1.0,
                              1e-6));
    for (double gamma : {1.0, 2.0}) {
        out.push_back(make_report("stationary-moment",
                                  with(base_params(p), {{"gamma", fmt(gamma)}}),
                                  radial_mass(2.0 * gamma), stationary_radial_moment(p, gamma),
                                  1e-8));
    }
    if (p.d == 2 && p.alpha == 1.0) {
        out.push_back(make_report("stationary-moment-exact",
                                  with(base_params(p), {{"gamma", "1"}}),
                                  stationary_radial_moment(p, 1.0), 2.0 / 3.0, 1e-12));
    }
    {
        const Point w = radial_point(p.d, 0.5, 1.0);
        out.push_back(make_report("stationary-integral-vs-simplified",
                                  with(base_params(p), {{"|w|", "0.5"}}),
                                  stationary_density_integral_form(p, w),
                                  stationary_density(p, w), 1e-8));
    }
    return out;
}

std::vector<IdentityReport> poisson_kernel(const StableParams& p, double tol) {
    if (p.d < 2) throw DomainError("poisson-kernel: require d >= 2");
    std::vector<IdentityReport> out;
    for (double w : {0.0, 0.3, 0.7, 0.95}) {
        const double got = poisson_kernel_average_radial(w, p.d, angular_spec());
        const double want = 1.0 / ((1.0 - w) * (1.0 + w));
        out.push_back(make_report("poisson-kernel",
                                  {{"d", std::to_string(p.d)}, {"|w|", fmt(w)}}, got, want, tol));
    }
    return out;
}

std::vector<IdentityReport> escape_limit(const StableParams& p, double tol) {
    validate(p);
    std::vector<IdentityReport> out;
    const double r = 1.0, delta = 1e-6;
    const double limit = (2.0 / p.alpha) * std::exp(log_gamma_real(0.5 * p.d) -
                                                    log_gamma_real(0.5 * (p.d - p.alpha)) -
                                                    log_gamma_real(0.5 * p.alpha));
    for (double frac : {0.25, 0.5, 1.0}) {
        const double rho = (r - delta) + frac * delta;
        const double gap = (rho - (r - delta)) * (rho + (r - delta));
        const double q = std::pow(gap, -0.5 * p.alpha) * std::pow(r, p.alpha) *
                         survival_probability_radial(p, rho, r - delta);
        out.push_back(make_report("escape-limit",
                                  with(base_params(p), {{"rho-offset", fmt(frac)}}), q, limit,
                                  tol));
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"normalization", "beta-marginal", "bgr-consistency", "marginalization",
            "kelvin-duality", "phi-minus",    "overshoot-nu",    "factorization",
            "stationary",    "poisson-kernel", "escape-limit"};
}

std::vector<IdentityReport> run_suite(const std::string& name, const StableParams& params,
                                      std::optional<double> tol_override) {
    std::vector<IdentityReport> reports;
    if (name == "normalization")
        reports = normalization(params, tol_override.value_or(1e-6));
    else if (name == "beta-marginal")
        reports = beta_marginal(params, tol_override.value_or(1e-6));
    else if (name == "bgr-consistency")
        reports = bgr_consistency(params, tol_override.value_or(1e-6));
    else if (name == "marginalization")
        reports = marginalization(params);
    else if (name == "kelvin-duality")
        reports = kelvin_duality(params, tol_override.value_or(1e-12));
    else if (name == "phi-minus")
        reports = phi_minus(params, tol_override.value_or(1e-8));
    else if (name == "overshoot-nu")
        reports = overshoot_nu(params, tol_override.value_or(1e-8));
    else if (name == "factorization")
        reports = factorization(params);
    else if (name == "stationary")
        reports = stationary(params);
    else if (name == "poisson-kernel")
        reports = poisson_kernel(params, tol_override.value_or(1e-8));
    else if (name == "escape-limit")
        reports = escape_limit(params, tol_override.value_or(1e-3));
    else
        throw DomainError("unknown suite: " + name);
    if (tol_override && (name == "marginalization" || name == "factorization" ||
                         name == "stationary")) {
        for (IdentityReport& r : reports) {
            r.tol = *tol_override;
            r.pass = (r.rhs == 0.0) ? (r.abs_err <= r.tol) : (r.rel_err <= r.tol);
        }
    }
    return reports;
}

}  // namespace stablefluct::suites
