#include "stablefluct/operators.hpp"

#include <cmath>
#include <vector>

#include "stablefluct/identities.hpp"

namespace stablefluct {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Point unit_of(const Point& x, const char* who) {
    const double n = norm(x);
    if (!(n > 0.0)) throw DomainError(std::string(who) + ": zero direction");
    return (1.0 / n) * x;
}

void require_unit(const Point& theta, const char* who) {
    if (std::abs(norm(theta) - 1.0) > 1e-10)
        throw DomainError(std::string(who) + ": require |theta| = 1");
}

// Orthonormal frame with first axis u (|u| = 1).
std::vector<Point> frame_with_axis(const Point& u) {
    const std::size_t d = u.size();
    std::vector<Point> basis;
    basis.push_back(u);
    for (std::size_t k = 0; k < d && basis.size() < d; ++k) {
        Point e(d);
        e[k] = 1.0;
        for (const Point& b : basis) {
            const double c = dot(e, b);
            for (std::size_t i = 0; i < d; ++i) e[i] -= c * b[i];
        }
        const double n = norm(e);
        if (n > 1e-8) basis.push_back((1.0 / n) * e);
    }
    return basis;
}

// Mean over the unit sphere (normalized surface measure) of
// f(phi) * kernel_t(t), where t is the colatitude angle from axis_unit.
// peak_scale > 0 marks a kernel peak of that angular width at t = 0, which
// would otherwise hide between quadrature nodes of the first panel.
double sphere_mean_with_kernel(const StableParams& params, const SphereFunction& f,
                               const Point& axis_unit,
                               const std::function<double(double)>& kernel_t, double peak_scale,
                               const QuadratureSpec& spec) {
    const int d = params.d;
    QuadratureSpec hinted = spec;
    if (peak_scale > 0.0 && peak_scale < 0.1) {
        const double w = std::max(peak_scale, 1e-14);
        hinted.singularity_hints.push_back(w);
        hinted.singularity_hints.push_back(8.0 * w);
    }
    if (f.is_constant) {
        const double f0 = f.eval(axis_unit);
        return f0 * sphere_average_t(kernel_t, d, hinted);
    }
    if (f.symmetry_axis) {
        const Point a = unit_of(*f.symmetry_axis, "SphereFunction");
        const double c_axes = dot(a, axis_unit);
        if (std::abs(c_axes - 1.0) < 1e-12) {
            // f and the kernel share the axis
            const std::vector<Point> basis = frame_with_axis(axis_unit);
            return sphere_average_t(
                [&](double t) {
                    Point phi(axis_unit.size());
                    const double c = std::cos(t), s = std::sin(t);
                    for (std::size_t i = 0; i < phi.size(); ++i)
                        phi[i] = c * basis[0][i] + s * basis[1][i];
                    return f.eval(phi) * kernel_t(t);
                },
                d, hinted);
        }
    }
    if (d == 2) {
        const double base = std::atan2(axis_unit[1], axis_unit[0]);
        QuadratureSpec two_sided = spec;
        if (peak_scale > 0.0 && peak_scale < 0.1) {
            const double w = std::max(peak_scale, 1e-14);
            two_sided.singularity_hints.insert(two_sided.singularity_hints.end(),
                                               {w, 8.0 * w, 2.0 * kPi - 8.0 * w, 2.0 * kPi - w});
        }
        const auto integrand = [&](double u) {
            const double ang = base + u;
            Point phi{std::cos(ang), std::sin(ang)};
            // angle between phi and the axis is u (mod 2pi), so the kernel
            // argument folds onto [0, pi]
            const double t = u <= kPi ? u : 2.0 * kPi - u;
            return f.eval(phi) * kernel_t(t);
        };
        return integrate_1d_strict(integrand, 0.0, 2.0 * kPi, two_sided) / (2.0 * kPi);
    }
    if (d == 3) {
        const std::vector<Point> basis = frame_with_axis(axis_unit);
        const auto integrand = [&](double t) {
            const double c = std::cos(t), s = std::sin(t);
            QuadratureSpec inner = spec;
            const auto azimuth = [&](double psi) {
                Point phi(3);
                for (int i = 0; i < 3; ++i)
                    phi[i] = c * basis[0][i] +
                             s * (std::cos(psi) * basis[1][i] + std::sin(psi) * basis[2][i]);
                return f.eval(phi);
            };
            const double favg =
                integrate_1d_strict(azimuth, 0.0, 2.0 * kPi, inner) / (2.0 * kPi);
            return favg * kernel_t(t) * s;
        };
        QuadratureSpec outer = hinted;
        return 0.5 * integrate_1d_strict(integrand, 0.0, kPi, outer);
    }
    throw DomainError(
        "sphere integration of a general (non-symmetric) f is only supported for d <= 3");
}

QuadratureSpec inner_spec_from(const QuadratureSpec& outer) {
    QuadratureSpec s = outer;
    s.rel_tol = std::max(outer.rel_tol * 0.01, 1e-13);
    s.abs_tol = std::max(outer.abs_tol * 0.01, 1e-16);
    s.singularity_hints.clear();
    return s;
}

double log_ladder_const(const StableParams& p) {
    // pi^{-d/2} Gamma(d/2)^2 / (Gamma((d-alpha)/2) Gamma(alpha/2))
    return -0.5 * p.d * std::log(kPi) + 2.0 * log_gamma_real(0.5 * p.d) -
           log_gamma_real(0.5 * (p.d - p.alpha)) - log_gamma_real(0.5 * p.alpha);
}

double factor_C(const StableParams& p) {
    // C_{alpha,d} = 2^{-alpha} Gamma((d-alpha)/2)^2 / Gamma(d/2)^2
    return std::exp(-p.alpha * std::log(2.0) + 2.0 * log_gamma_real(0.5 * (p.d - p.alpha)) -
                    2.0 * log_gamma_real(0.5 * p.d));
}

}  // namespace

SphereFunction SphereFunction::constant(double value, std::string label) {
    SphereFunction f;
    f.eval = [value](const Point&) { return value; };
    f.label = std::move(label);
    f.is_constant = true;
    return f;
}

QuadratureSpec default_operator_spec() {
    QuadratureSpec s;
    s.abs_tol = 1e-12;
    s.rel_tol = 1e-9;
    s.max_depth = 100;
    s.max_panels = 60000;
    return s;
}

std::complex<double> rho_op(const StableParams& params, std::complex<double> z,
                            const SphereFunction& f, const Point& theta,
                            const QuadratureSpec& spec) {
    validate(params);
    check_dimension(params, theta, "rho_op");
    require_unit(theta, "rho_op");
    if (!(z.real() > 0.0)) throw DomainError("rho_op: require Re z > 0");
    const int d = params.d;
    const double a = params.alpha;
    const double c = 2.0 * std::exp(log_gamma_real(0.5 * d) - log_gamma_real(0.5 * (d - a)) -
                                    log_gamma_real(0.5 * a));
    const QuadratureSpec inner = inner_spec_from(spec);

    // mean over the sphere of f(phi) |theta - rho phi|^{-d}, with the radial
    // gap rho - 1 kept exact; the kernel peak at gap -> 0 gets panel hints
    const auto mean_at = [&](double gap, double rho) -> double {
        const auto kernel_t = [&](double t) {
            return std::pow(two_center_dist2_gap(gap, 1.0, rho, t), -0.5 * d);
        };
        return sphere_mean_with_kernel(params, f, theta, kernel_t, gap / std::sqrt(rho), inner);
    };
    // phase factor rho^{-Im z}; the amplitude carries rho^{d-1-alpha-Re z},
    // with extra_power absorbing jacobians of radial substitutions
    const auto weighted = [&](double gap, double rho, double r2m1, double extra_power,
                              bool imag_part) {
        const double lr = std::log(rho);
        const double amp = std::exp((d - 1 - a - z.real() + extra_power) * lr) *
                           std::pow(r2m1, 0.5 * a) * mean_at(gap, rho);
        const double phase = -z.imag() * lr;
        return amp * (imag_part ? std::sin(phase) : std::cos(phase));
    };

    // near segment rho in (1,2]: integrate in v = (rho-1)^{alpha/2} so the
    // (rho^2-1)^{alpha/2-1} boundary behavior (after the kernel mean supplies
    // 1/(rho^2-1)) becomes bounded and the gap stays exact at any depth
    const auto near_part = [&](bool imag_part) {
        const double q = 0.5 * a;
        const auto integrand = [&](double v) {
            const double gap = std::pow(v, 1.0 / q);
            const double rho = 1.0 + gap;
            const double r2m1 = gap * (2.0 + gap);
            const double jac = (1.0 / q) * std::pow(v, 1.0 / q - 1.0);
            return weighted(gap, rho, r2m1, 0.0, imag_part) * jac;
        };
        return integrate_1d_strict(integrand, 0.0, 1.0, spec);
    };
    // tail in w = rho^{-Re z}: the integrand decays exactly like rho^{-1-Re z},
    // so this endpoint sits at w = 0 where bisection keeps full precision
    const double s = z.real();
    const auto far_part = [&](bool imag_part) {
        const auto integrand = [&](double w) {
            if (w < 1e-30) return 0.0;
            const double rho = std::pow(w, -1.0 / s);
            const double gap = rho - 1.0;
            return weighted(gap, rho, gap * (rho + 1.0), 1.0 + s, imag_part) / s;
        };
        return integrate_1d_strict(integrand, 0.0, std::pow(2.0, -s), spec);
    };

    const double re = near_part(false) + far_part(false);
    double im = 0.0;
    if (z.imag() != 0.0) im = near_part(true) + far_part(true);
    return c * std::complex<double>(re, im);
}

std::complex<double> resolvent_op(const StableParams& params, std::complex<double> z,
                                  const SphereFunction& f, const Point& theta,
                                  const QuadratureSpec& spec) {
    validate(params);
    check_dimension(params, theta, "resolvent_op");
    require_unit(theta, "resolvent_op");
    const int d = params.d;
    const double a = params.alpha;
    if (!(z.real() > 0.0) || !(z.real() < d - a))
        throw DomainError("resolvent_op: require 0 < Re z < d - alpha");
    // u-constant times the total surface measure
    const double c = std::exp((1.0 - a) * std::log(2.0) + log_gamma_real(0.5 * (d - a)) -
                              log_gamma_real(0.5 * a) - log_gamma_real(0.5 * d));
    const QuadratureSpec inner = inner_spec_from(spec);

    const auto mean_at = [&](double gap, double rho) -> double {
        const auto kernel_t = [&](double t) {
            return std::pow(two_center_dist2_gap(gap, 1.0, rho, t), 0.5 * (a - d));
        };
        return sphere_mean_with_kernel(params, f, theta, kernel_t,
                                       std::abs(gap) / std::sqrt(rho), inner);
    };
    const auto weighted = [&](double gap, double rho, double extra_power, bool imag_part) {
        const double lr = std::log(rho);
        const double amp =
            std::exp((d - 1 - a - z.real() + extra_power) * lr) * mean_at(gap, rho);
        const double phase = -z.imag() * lr;
        return amp * (imag_part ? std::sin(phase) : std::cos(phase));
    };

    // the angular mean behaves like |rho-1|^{alpha-1} on the sphere (log for
    // alpha = 1); integrate both adjacent segments in v = |rho-1|^{min(a,1)}
    // with the gap kept exact
    const double q = std::min(a, 1.0);
    const auto gap_segment = [&](double sign, bool imag_part) {
        const auto integrand = [&](double v) {
            const double gap = sign * std::pow(v, 1.0 / q);
            const double rho = 1.0 + gap;
            const double jac = (1.0 / q) * std::pow(v, 1.0 / q - 1.0);
            return weighted(gap, rho, 0.0, imag_part) * jac;
        };
        return integrate_1d_strict(integrand, 0.0, std::pow(0.5, q), spec);
    };
    // head in v = rho^{d-alpha-Re z}: the rho^{d-1-alpha-Re z} weight at the
    // origin then folds into a bounded profile
    const double kappa = d - a - z.real();
    const auto head_segment = [&](bool imag_part) {
        const auto integrand = [&](double v) {
            if (v < 1e-30) return 0.0;
            const double rho = std::pow(v, 1.0 / kappa);
            return weighted(rho - 1.0, rho, 1.0 - kappa, imag_part) / kappa;
        };
        return integrate_1d_strict(integrand, 0.0, std::pow(0.5, kappa), spec);
    };
    // tail in w = rho^{-Re z} as in rho_op; decay there is rho^{-1-Re z}
    const double s = z.real();
    const auto tail_segment = [&](bool imag_part) {
        const auto integrand = [&](double w) {
            if (w < 1e-30) return 0.0;
            const double rho = std::pow(w, -1.0 / s);
            return weighted(rho - 1.0, rho, 1.0 + s, imag_part) / s;
        };
        return integrate_1d_strict(integrand, 0.0, std::pow(1.5, -s), spec);
    };

    const auto total = [&](bool imag_part) {
        return head_segment(imag_part) + gap_segment(-1.0, imag_part) +
               gap_segment(+1.0, imag_part) + tail_segment(imag_part);
    };
    const double re = total(false);
    double im = 0.0;
    if (z.imag() != 0.0) im = total(true);
    return c * std::complex<double>(re, im);
}

double resolvent_op_as_printed_truncated(const StableParams& params, double z,
                                         const SphereFunction& f, const Point& theta,
                                         double r_min, double r_max,
                                         const QuadratureSpec& spec) {
    validate(params);
    check_dimension(params, theta, "resolvent_op_as_printed");
    require_unit(theta, "resolvent_op_as_printed");
    if (!(0.0 < r_min && r_min < r_max))
        throw DomainError("resolvent_op_as_printed: require 0 < r_min < r_max");
    if (!f.is_constant)
        throw DomainError("resolvent_op_as_printed: only f = const is supported");
    const int d = params.d;
    const double a = params.alpha;
    const double cu = std::exp(log_gamma_real(0.5 * (d - a)) - a * std::log(2.0) -
                               0.5 * d * std::log(kPi) - log_gamma_real(0.5 * a));
    // integrate over the shifted shell r_min < |y - theta| < r_max; for real z
    // the integrand is f(arg(theta + s omega)) s^{z-d} s^{d-1}.
    const QuadratureSpec inner = inner_spec_from(spec);
    const std::vector<Point> basis = frame_with_axis(theta);
    const auto radial = [&](double s) -> double {
        const auto mean = sphere_average(
            [&](double cc) {
                Point y(theta.coords);
                const double ss = std::sqrt(std::max(0.0, 1.0 - cc * cc));
                for (std::size_t i = 0; i < y.size(); ++i)
                    y[i] += s * (cc * basis[0][i] + ss * basis[1][i]);
                const double yn = norm(y);
                return yn == 0.0 ? 0.0 : f.eval((1.0 / yn) * y);
            },
            d, inner);
        return mean * std::pow(s, z - 1.0);
    };
    return cu * sphere_surface(d) * integrate_1d_strict(radial, r_min, r_max, spec);
}

namespace {

// rho_z[f] tabulated on the circle for d = 2 (periodic cubic interpolation).
SphereFunction tabulate_rho_circle(const StableParams& params, double z,
                                   const SphereFunction& f, const QuadratureSpec& spec,
                                   int n_angles) {
    std::vector<double> vals(n_angles);
    for (int k = 0; k < n_angles; ++k) {
        const double ang = 2.0 * kPi * k / n_angles;
        Point theta{std::cos(ang), std::sin(ang)};
        vals[k] = rho_op(params, z, f, theta, spec).real();
    }
    SphereFunction g;
    g.label = "rho_" + std::to_string(z) + "[" + f.label + "]";
    g.eval = [vals, n_angles](const Point& phi) {
        const double ang = std::atan2(phi[1], phi[0]);
        double u = ang / (2.0 * kPi) * n_angles;
        u -= std::floor(u / n_angles) * n_angles;
        const int i1 = static_cast<int>(std::floor(u)) % n_angles;
        const double t = u - std::floor(u);
        const int i0 = (i1 + n_angles - 1) % n_angles;
        const int i2 = (i1 + 1) % n_angles;
        const int i3 = (i1 + 2) % n_angles;
        const double p0 = vals[i0], p1 = vals[i1], p2 = vals[i2], p3 = vals[i3];
        // Catmull-Rom
        return p1 + 0.5 * t * (p2 - p0 +
                               t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                    t * (3.0 * (p1 - p2) + p3 - p0)));
    };
    return g;
}

}  // namespace

IdentityReport factorization_residual(const StableParams& params, double z,
                                      const SphereFunction& f, double tol,
                                      const QuadratureSpec& spec) {
    validate(params);
    const double strip = params.d - params.alpha;
    if (!(z > 0.0 && z < strip))
        throw DomainError("factorization_residual: require z in (0, d - alpha)");

    std::vector<Point> thetas;
    {
        Point e1(static_cast<std::size_t>(params.d));
        e1[0] = 1.0;
        thetas.push_back(e1);
        if (!f.is_constant) {
            Point u(static_cast<std::size_t>(params.d));
            u[0] = std::cos(0.7);
            u[1] = std::sin(0.7);
            thetas.push_back(u);
        }
    }

    SphereFunction inner_fn;
    if (f.is_constant) {
        const double v = rho_op(params, z, f, thetas[0], spec).real();
        inner_fn = SphereFunction::constant(v, "rho_z[" + f.label + "]");
    } else if (params.d == 2) {
        inner_fn = tabulate_rho_circle(params, z, f, spec, 128);
    } else {
        throw DomainError("factorization_residual: non-constant f requires d = 2");
    }

    const double C = factor_C(params);
    double lhs = 0.0, rhs = 0.0;
    for (const Point& th : thetas) {
        lhs += resolvent_op(params, z, f, th, spec).real();
        rhs += C * rho_op(params, strip - z, inner_fn, th, spec).real();
    }
    lhs /= thetas.size();
    rhs /= thetas.size();

    return make_report("factorization",
                       {{"d", std::to_string(params.d)},
                        {"alpha", std::to_string(params.alpha)},
                        {"z", std::to_string(z)},
                        {"f", f.label}},
                       lhs, rhs, tol);
}

double excursion_occupation_value(const StableParams& params,
                                  const std::function<double(const Point&)>& g,
                                  double support_lo, double support_hi, const Point& theta,
                                  const QuadratureSpec& spec) {
    validate(params);
    check_dimension(params, theta, "excursion_occupation_value");
    require_unit(theta, "excursion_occupation_value");
    if (!(1.0 < support_lo && support_lo <= support_hi))
        throw DomainError("excursion_occupation_value: require 1 < support_lo <= support_hi");
    const int d = params.d;
    const double a = params.alpha;
    const double C = factor_C(params);
    const double lc = log_ladder_const(params);
    const QuadratureSpec inner = inner_spec_from(spec);

    // U^+ density at (theta, rho*phi) depends on rho and the angle between
    // theta and phi; integrate radius (outer) against the spherical mean.
    const auto radial = [&](double rho) -> double {
        const auto kernel_t = [&](double t) {
            return std::pow(two_center_dist2(1.0, rho, t), -0.5 * d);
        };
        SphereFunction grho;
        grho.eval = [&](const Point& phi) { return g(rho * phi); };
        grho.label = "g_rho";
        const double mean =
            sphere_mean_with_kernel(params, grho, theta, kernel_t, std::abs(rho - 1.0), inner);
        return std::pow(rho, d - 1.0 - a) * std::pow((rho - 1.0) * (rho + 1.0), 0.5 * a) * mean;
    };
    const double integral =
        sphere_surface(d) * std::exp(lc) * integrate_1d_strict(radial, support_lo, support_hi, spec);
    return C * integral;
}

IdentityReport kelvin_duality_check(const StableParams& params, const Point& x, const Point& z,
                                    double tol) {
    validate(params);
    check_dimension(params, x, "kelvin_duality_check");
    check_dimension(params, z, "kelvin_duality_check");
    const double xn = norm(x), zn = norm(z);
    if (!(xn > 0.0 && xn < zn))
        throw DomainError("kelvin_duality_check: require 0 < |x| < |z|");
    const double a = params.alpha;
    const int d = params.d;

    // (i) ladder potential duality
    const Point kx = kelvin_invert(x), kz = kelvin_invert(z);
    const double u_lhs = ladder_potential_density(params, LadderSide::plus, x, z);
    const double u_rhs = ladder_potential_density(params, LadderSide::minus, kx, kz) *
                         std::pow(xn / zn, a - d) * std::pow(zn, -2.0 * d);
    const double u_rel = std::abs(u_lhs - u_rhs) / std::max(std::abs(u_rhs), 1e-300);

    // (ii) resolvent duality, at points pushed strictly outside the unit ball
    const Point P = (1.0 + xn) * unit_of(x, "kelvin_duality_check");
    const Point Q = (1.0 + zn) * unit_of(z, "kelvin_duality_check");
    const double pn = norm(P), qn = norm(Q);
    const Point kP = kelvin_invert(P), kQ = kelvin_invert(Q);
    const double h_lhs = resolvent_density(params, 1.0, EntranceExitMode::entrance, P, Q);
    const double h_rhs = resolvent_density(params, 1.0, EntranceExitMode::exit, kP, kQ) *
                         std::pow(pn / qn, a - d) * std::pow(qn, 2.0 * a - 2.0 * d);
    const double h_rel = std::abs(h_lhs - h_rhs) / std::max(std::abs(h_rhs), 1e-300);

    const bool u_worse = u_rel >= h_rel;
    IdentityReport rep = make_report(
        "kelvin-duality",
        {{"d", std::to_string(d)},
         {"alpha", std::to_string(a)},
         {"|x|", std::to_string(xn)},
         {"|z|", std::to_string(zn)},
         {"ladder_rel_err", std::to_string(u_rel)},
         {"resolvent_rel_err", std::to_string(h_rel)}},
        u_worse ? u_lhs : h_lhs, u_worse ? u_rhs : h_rhs, tol);
    rep.pass = (u_rel <= tol) && (h_rel <= tol);
    return rep;
}

}  // namespace stablefluct
