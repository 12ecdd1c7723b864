#include "stablefluct/numerics.hpp"
#include <cstdio>

#include <algorithm>
#include <cmath>
#include <set>

namespace stablefluct {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrt2Pi = 2.50662827463100050241576528481104525;

// Lanczos, g = 607/128, 15 terms.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC0 = 0.99999999999999709182;
constexpr double kLanczosC[14] = {
    57.156235665862923517,     -59.597960355475491248,    14.136097974741747174,
    -0.49191381609762019978,   0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3, -0.21026444172410488319e-3,
    0.21743961811521264320e-3, -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5};

std::complex<double> lanczos_log_gamma(std::complex<double> z) {
    // valid for Re z >= 0.5
    std::complex<double> ser(kLanczosC0, 0.0);
    for (int j = 0; j < 14; ++j) ser += kLanczosC[j] / (z + static_cast<double>(j + 1));
    const std::complex<double> tmp = z + (kLanczosG + 0.5);
    return (z + 0.5) * std::log(tmp) - tmp + std::log(kSqrt2Pi * ser / z);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() == 0.0) {
        const double x = z.real();
        if (x <= 0.0 && x == std::floor(x))
            throw PoleError("log_gamma: pole at nonpositive integer z=" + std::to_string(x));
    }
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
        return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
    }
    return lanczos_log_gamma(z);
}

double log_gamma_real(double x) {
    if (x <= 0.0) throw DomainError("log_gamma_real: require x > 0, got " + std::to_string(x));
    return std::lgamma(x);
}

double log_abs_gamma_neg_half_alpha(double alpha) {
    // Gamma(1-a) = -a Gamma(-a) with a = alpha/2 in (0,1), so
    // |Gamma(-alpha/2)| = Gamma(1-alpha/2) / (alpha/2).
    const double a = 0.5 * alpha;
    return log_gamma_real(1.0 - a) - std::log(a);
}

double log_beta(double a, double b) {
    return log_gamma_real(a) + log_gamma_real(b) - log_gamma_real(a + b);
}

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double betacf(double a, double b, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= eps) break;
    }
    return h;
}

}  // namespace

double reg_inc_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("reg_inc_beta: require a > 0 and b > 0");
    if (!(x >= 0.0) || !(x <= 1.0))
        throw DomainError("reg_inc_beta: require x in [0,1], got " + std::to_string(x));
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double lbt = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
    const double bt = std::exp(lbt);
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double j_integral(double zeta, const StableParams& params) {
    validate(params);
    if (!(zeta >= 0.0)) throw DomainError("j_integral: require zeta >= 0");
    const double a = 0.5 * params.alpha;
    const double b = 0.5 * (params.d - params.alpha);
    const double full = std::exp(log_beta(a, b));
    if (zeta == 0.0) return 0.0;
    if (std::isinf(zeta)) return full;
    return full * reg_inc_beta(zeta / (1.0 + zeta), a, b);
}

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod 7-15
// ---------------------------------------------------------------------------

namespace {

const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEval {
    double value;
    double error;
    double resabs;
};

PanelEval gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double fc = f(center);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    double fv[15];
    fv[7] = fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = hlgth * kXgk[i];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[i] = f1;
        fv[14 - i] = f2;
        resk += kWgk[i] * (f1 + f2);
        resabs += kWgk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i] - reskh) + std::abs(fv[14 - i] - reskh));
    resasc *= std::abs(hlgth);
    resabs *= std::abs(hlgth);
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
    return {resk * hlgth, err, resabs};
}

struct Panel {
    double a, b;
    double value, error, resabs;
    int depth;
    bool saturated;
};

struct PanelOrder {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.error != q.error) return p.error > q.error;
        return p.a < q.a;
    }
};

QuadResult adapt(const std::function<double(double)>& f, const std::vector<double>& breaks,
                 const QuadratureSpec& spec) {
    std::multiset<Panel, PanelOrder> panels;
    int n_panels = 0;
    double value = 0.0, error = 0.0, resabs = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const PanelEval e = gk15(f, breaks[i], breaks[i + 1]);
        panels.insert({breaks[i], breaks[i + 1], e.value, e.error, e.resabs, 0, false});
        value += e.value;
        error += e.error;
        resabs += e.resabs;
        ++n_panels;
    }
    auto resum = [&]() {
        // refresh running sums; incremental updates drift after many splits
        value = 0.0;
        error = 0.0;
        resabs = 0.0;
        for (const Panel& p : panels) {
            value += p.value;
            error += p.error;
            resabs += p.resabs;
        }
    };
    int since_resum = 0;
    const double eps = std::numeric_limits<double>::epsilon();
    while (true) {
        // a signed value much smaller than the absolute mass cannot beat the
        // per-panel round-off floor; that state counts as converged
        const double target = std::max({spec.abs_tol, spec.rel_tol * std::abs(value),
                                        100.0 * eps * resabs});
        if (error <= target || !std::isfinite(error)) {
            resum();
            const bool ok = error <= std::max({spec.abs_tol, spec.rel_tol * std::abs(value),
                                               100.0 * eps * resabs});
            return {value, error, ok, n_panels};
        }
        // split the worst non-saturated panel
        auto it = panels.begin();
        while (it != panels.end() && it->saturated) ++it;
        if (it == panels.end() || n_panels >= spec.max_panels) {
            resum();
            return {value, error, false, n_panels};
        }
        Panel worst = *it;
        panels.erase(it);
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.depth >= spec.max_depth || mid <= worst.a || mid >= worst.b) {
            worst.saturated = true;
            panels.insert(worst);
            continue;
        }
        const PanelEval left = gk15(f, worst.a, mid);
        const PanelEval right = gk15(f, mid, worst.b);
        panels.insert({worst.a, mid, left.value, left.error, left.resabs, worst.depth + 1, false});
        panels.insert({mid, worst.b, right.value, right.error, right.resabs, worst.depth + 1,
                       false});
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        resabs += left.resabs + right.resabs - worst.resabs;
        ++n_panels;
        if (++since_resum >= 512) {
            resum();
            since_resum = 0;
        }
    }
}

}  // namespace

QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec) {
    if (!std::isfinite(a)) throw DomainError("integrate_1d: lower endpoint must be finite");
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_depth < 1)
        throw DomainError("integrate_1d: invalid QuadratureSpec");
    std::function<double(double)> g = f;
    double lo = a, hi = b;
    std::vector<double> hints = spec.singularity_hints;
    if (std::isinf(b)) {
        // fixed infinite-domain transform u = t/(1-t)
        g = [f, a](double t) {
            const double om = 1.0 - t;
            return f(a + t / om) / (om * om);
        };
        lo = 0.0;
        hi = 1.0;
        for (double& h : hints) {
            const double s = h - a;
            h = (s <= 0.0) ? 0.0 : s / (1.0 + s);
        }
    }
    if (!(lo < hi)) {
        if (lo == hi) return {0.0, 0.0, true, 0};
        throw DomainError("integrate_1d: require a < b");
    }
    std::vector<double> breaks = {lo};
    std::sort(hints.begin(), hints.end());
    for (double h : hints)
        if (h > lo && h < hi && h != breaks.back()) breaks.push_back(h);
    breaks.push_back(hi);
    QuadratureSpec s = spec;
    s.singularity_hints.clear();
    return adapt(g, breaks, s);
}

double integrate_1d_strict(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
    const QuadResult r = integrate_1d(f, a, b, spec);
    if (!r.converged) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "integrate_1d: tolerance not met (estimate %.9e, error %.3e, %d panels, "
                      "domain [%.6g, %.6g])",
                      r.value, r.error, r.panels, a, b);
        throw ToleranceNotMet(buf, r.value, r.error);
    }
    return r.value;
}

std::complex<double> integrate_1d_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, const QuadratureSpec& spec) {
    const double re = integrate_1d_strict([&f](double t) { return f(t).real(); }, a, b, spec);
    const double im = integrate_1d_strict([&f](double t) { return f(t).imag(); }, a, b, spec);
    return {re, im};
}

double sphere_average(const std::function<double(double)>& g, int d, const QuadratureSpec& spec) {
    return sphere_average_t([&g](double t) { return g(std::cos(t)); }, d, spec);
}

double sphere_average_t(const std::function<double(double)>& g_of_t, int d,
                        const QuadratureSpec& spec) {
    if (d < 2) throw DomainError("sphere_average: require d >= 2");
    const double cd = std::exp(log_gamma_real(0.5 * d) - log_gamma_real(0.5 * (d - 1))) /
                      std::sqrt(kPi);
    std::function<double(double)> integrand;
    if (d == 2) {
        integrand = g_of_t;
    } else {
        integrand = [&g_of_t, d](double t) {
            return g_of_t(t) * std::pow(std::sin(t), d - 2);
        };
    }
    return cd * integrate_1d_strict(integrand, 0.0, kPi, spec);
}

double two_center_dist2(double a, double b, double t) {
    return two_center_dist2_gap(a - b, a, b, t);
}

double two_center_dist2_gap(double gap, double a, double b, double t) {
    const double s = std::sin(0.5 * t);
    return gap * gap + 4.0 * a * b * s * s;
}

double sphere_surface(int d) {
    return 2.0 * std::pow(kPi, 0.5 * d) / std::exp(log_gamma_real(0.5 * d));
}

double poisson_kernel_average_radial(double wnorm, int d, const QuadratureSpec& spec) {
    if (!(wnorm >= 0.0) || wnorm >= 1.0)
        throw DomainError("poisson_kernel_average: require |w| < 1");
    if (wnorm == 0.0) return 1.0;
    const double s = wnorm;
    return sphere_average(
        [s, d](double c) { return std::pow(1.0 + s * s - 2.0 * s * c, -0.5 * d); }, d, spec);
}

double poisson_kernel_average(const Point& w, int d, const QuadratureSpec& spec) {
    return poisson_kernel_average_radial(norm(w), d, spec);
}

}  // namespace stablefluct
