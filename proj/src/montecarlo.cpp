#include "stablefluct/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "stablefluct/numerics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stablefluct::mc {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 6.28318530717958647692528676655900577;
}  // namespace

std::uint64_t SeedSpec::stream_seed() const {
    std::uint64_t z = master_seed + static_cast<std::uint64_t>(worker_index) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64_next(sm);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform_open01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::exponential() { return -std::log(uniform_open01()); }

void Rng::gauss_pair(double& g1, double& g2) {
    const double r = std::sqrt(2.0 * exponential());
    const double a = kTwoPi * uniform_open01();
    g1 = r * std::cos(a);
    g2 = r * std::sin(a);
}

double sample_one_sided_stable(double beta, Rng& rng) {
    if (!(beta > 0.0 && beta < 1.0))
        throw DomainError("sample_one_sided_stable: require beta in (0,1)");
    const double u = kPi * rng.uniform_open01();
    const double e = rng.exponential();
    // log A(u); the 1/(1-beta) power overflows in linear space as beta -> 1
    const double log_a = (beta * std::log(std::sin(beta * u)) +
                          (1.0 - beta) * std::log(std::sin((1.0 - beta) * u)) -
                          std::log(std::sin(u))) /
                         (1.0 - beta);
    return std::exp(((1.0 - beta) / beta) * (log_a - std::log(e)));
}

void add_stable_increment(const StableParams& params, double dt, Rng& rng,
                          std::vector<double>& pos) {
    const double s = std::pow(dt, 2.0 / params.alpha) *
                     sample_one_sided_stable(0.5 * params.alpha, rng);
    const double scale = std::sqrt(2.0 * s);
    const int d = params.d;
    double g1, g2;
    for (int i = 0; i + 1 < d; i += 2) {
        rng.gauss_pair(g1, g2);
        pos[i] += scale * g1;
        pos[i + 1] += scale * g2;
    }
    if (d % 2 == 1) {
        rng.gauss_pair(g1, g2);
        pos[d - 1] += scale * g1;
    }
}

Point sample_stable_increment(const StableParams& params, double dt, Rng& rng) {
    validate(params);
    if (!(dt > 0.0)) throw DomainError("sample_stable_increment: require dt > 0");
    std::vector<double> inc(params.d, 0.0);
    add_stable_increment(params, dt, rng, inc);
    return Point(std::move(inc));
}

namespace {

double norm_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

}  // namespace

PathRecord simulate_path(const StableParams& params, const Point& x0, double dt, double inner_r,
                         std::optional<double> outer_R, double horizon, const SeedSpec& seeds) {
    validate(params);
    check_dimension(params, x0, "simulate_path");
    if (!(dt > 0.0)) throw DomainError("simulate_path: require dt > 0");
    if (!(norm(x0) > inner_r)) throw DomainError("simulate_path: require |x0| > inner_r");
    Rng rng(seeds.stream_seed());

    std::vector<double> pos = x0.coords;
    PathRecord rec;
    rec.min_radius = norm_of(pos);
    rec.max_radius = rec.min_radius;
    rec.argmin_point = Point(pos);
    rec.exit_reason = ExitReason::horizon;

    double t = 0.0;
    while (t + dt <= horizon) {
        add_stable_increment(params, dt, rng, pos);
        t += dt;
        const double rho = norm_of(pos);
        if (rho < rec.min_radius) {
            rec.min_radius = rho;
            rec.argmin_point = Point(pos);
        }
        rec.max_radius = std::max(rec.max_radius, rho);
        if (rho < inner_r) {
            rec.exit_reason = ExitReason::hit_inner;
            rec.first_passage_time = t;
            rec.first_passage_position = Point(pos);
            return rec;
        }
        if (outer_R && rho > *outer_R) {
            rec.exit_reason = ExitReason::hit_outer;
            rec.first_passage_time = t;
            rec.first_passage_position = Point(pos);
            return rec;
        }
    }
    return rec;
}

// ---------------------------------------------------------------------------
// First-entrance sampler
// ---------------------------------------------------------------------------

namespace {

constexpr int kRadialGridCells = 4096;

// Radial marginal of the entrance law, up to normalization:
//   u(rho) = rho^{d-1} (r^2-rho^2)^{-alpha/2} / (|x|^2 - rho^2).
// The substitution v = r^{2-alpha} - (r^2-rho^2)^{(2-alpha)/2} absorbs the
// boundary singularity: u(rho) drho = g(v) dv with g smooth, so a uniform
// grid in v with Simpson increments is accurate.
struct RadialSub {
    double r, xnorm, alpha;
    int d;

    double v_max() const { return std::pow(r, 2.0 - alpha); }
    double rho_of_v(double v) const {
        const double w = std::max(0.0, v_max() - v);
        return std::sqrt(std::max(0.0, r * r - std::pow(w, 2.0 / (2.0 - alpha))));
    }
    double g_of_v(double v) const {
        const double rho = rho_of_v(v);
        return std::pow(rho, d - 2) / ((xnorm - rho) * (xnorm + rho) * (2.0 - alpha));
    }
};

}  // namespace

FirstEntranceSampler::FirstEntranceSampler(const StableParams& params, const Point& x, double r)
    : params_(params), x_(x), xnorm_(norm(x)), r_(r) {
    validate(params);
    check_dimension(params, x, "FirstEntranceSampler");
    if (!(r > 0.0) || !(xnorm_ > r))
        throw DomainError("FirstEntranceSampler: require |x| > r > 0");
    survival_ = survival_probability_radial(params, xnorm_, r);

    const RadialSub sub{r_, xnorm_, params_.alpha, params_.d};
    v_max_ = sub.v_max();
    cdf_.assign(kRadialGridCells + 1, 0.0);
    const double h = v_max_ / kRadialGridCells;
    double acc = 0.0;
    for (int k = 0; k < kRadialGridCells; ++k) {
        const double a = k * h, b = (k + 1) * h;
        acc += (h / 6.0) * (sub.g_of_v(a) + 4.0 * sub.g_of_v(0.5 * (a + b)) + sub.g_of_v(b));
        cdf_[k + 1] = acc;
    }
}

double FirstEntranceSampler::sample_radius(Rng& rng) const {
    const double target = rng.uniform_open01() * cdf_.back();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
    const int k = std::max(1, static_cast<int>(it - cdf_.begin()));
    const int idx = std::min(k, kRadialGridCells);
    const double c0 = cdf_[idx - 1], c1 = cdf_[idx];
    const double frac = (c1 > c0) ? (target - c0) / (c1 - c0) : 0.5;
    const double h = v_max_ / kRadialGridCells;
    const double v = (idx - 1 + frac) * h;
    const RadialSub sub{r_, xnorm_, params_.alpha, params_.d};
    return sub.rho_of_v(v);
}

std::optional<Point> FirstEntranceSampler::sample(Rng& rng) const {
    if (rng.uniform_open01() < survival_) return std::nullopt;
    const double rho = sample_radius(rng);
    const int d = params_.d;
    // angle by rejection against sup_phi |x - rho phi|^{-d} = (|x|-rho)^{-d}
    std::vector<double> phi(d);
    for (long iter = 0; iter < 100000; ++iter) {
        double g1, g2;
        for (int i = 0; i + 1 < d; i += 2) {
            rng.gauss_pair(g1, g2);
            phi[i] = g1;
            phi[i + 1] = g2;
        }
        if (d % 2 == 1) {
            rng.gauss_pair(g1, g2);
            phi[d - 1] = g1;
        }
        const double pn = norm_of(phi);
        if (pn == 0.0) continue;
        double dist2 = 0.0;
        for (int i = 0; i < d; ++i) {
            const double diff = x_[i] - rho * phi[i] / pn;
            dist2 += diff * diff;
        }
        const double accept = std::pow((xnorm_ - rho) * (xnorm_ - rho) / dist2, 0.5 * d);
        if (rng.uniform_open01() < accept) {
            Point y(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) y[i] = rho * phi[i] / pn;
            return y;
        }
    }
    throw RejectionBudgetExceeded("FirstEntranceSampler: angular rejection stalled");
}

// ---------------------------------------------------------------------------
// Experiments
// ---------------------------------------------------------------------------

namespace {

struct WorkerAccum {
    std::size_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;
    std::vector<double> samples;

    void add(double v) {
        ++count;
        const double delta = v - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (v - mean);
    }
};

void merge_into(WorkerAccum& a, const WorkerAccum& b) {
    if (b.count == 0) return;
    if (a.count == 0) {
        a.count = b.count;
        a.mean = b.mean;
        a.m2 = b.m2;
    } else {
        const double na = static_cast<double>(a.count), nb = static_cast<double>(b.count);
        const double delta = b.mean - a.mean;
        const double n = na + nb;
        a.mean += delta * nb / n;
        a.m2 += b.m2 + delta * delta * na * nb / n;
        a.count += b.count;
    }
    a.samples.insert(a.samples.end(), b.samples.begin(), b.samples.end());
}

// One survival trial: walk from x0 until the radius drops below r (entered)
// or exceeds the truncation radius (never returns, by transience).
bool walk_survives(const ExperimentConfig& cfg, Rng& rng, std::vector<double>& pos) {
    const double r = cfg.r;
    const double trunc = cfg.truncation_factor * norm(cfg.x0);
    const double far = cfg.far_multiple * r;
    pos = cfg.x0.coords;
    while (true) {
        const double rho = norm_of(pos);
        if (rho < r) return false;
        if (rho > trunc) return true;
        double step = cfg.dt;
        if (rho > far) step *= std::pow(rho / far, cfg.params.alpha);
        add_stable_increment(cfg.params, step, rng, pos);
    }
}

// Running radial minimum (normalized by |x0|) until escape to the truncation
// radius; steps stretch only far above the current record.
double walk_min_radius(const ExperimentConfig& cfg, Rng& rng, std::vector<double>& pos) {
    const double x0n = norm(cfg.x0);
    const double trunc = cfg.truncation_factor * x0n;
    pos = cfg.x0.coords;
    double min_r = x0n;
    while (true) {
        const double rho = norm_of(pos);
        min_r = std::min(min_r, rho);
        if (rho > trunc) return min_r / x0n;
        double step = cfg.dt;
        const double far = cfg.far_multiple * min_r;
        if (rho > far) step *= std::pow(rho / far, cfg.params.alpha);
        add_stable_increment(cfg.params, step, rng, pos);
    }
}

// Ratio |X|/M measured a fixed stretch of multiplicative time after the
// running maximum has doubled cfg.doublings times.  Each doubling renormalizes
// space by 1/M, which by self-similarity is the same walk observed at the new
// scale; dt therefore always resolves the current maximum scale.
double walk_reflected_ratio_sq(const ExperimentConfig& cfg, Rng& rng, std::vector<double>& pos) {
    const double x0n = norm(cfg.x0);
    pos = cfg.x0.coords;
    for (double& c : pos) c /= x0n;
    double running_max = 1.0;
    int doubled = 0;
    auto renormalize = [&]() {
        for (double& c : pos) c /= running_max;
        running_max = 1.0;
    };
    while (doubled < cfg.doublings) {
        add_stable_increment(cfg.params, cfg.dt, rng, pos);
        const double rho = norm_of(pos);
        if (rho > running_max) running_max = rho;
        if (running_max >= 2.0) {
            renormalize();
            ++doubled;
        }
    }
    const long relax_steps = static_cast<long>(cfg.relax_time / cfg.dt);
    for (long k = 0; k < relax_steps; ++k) {
        add_stable_increment(cfg.params, cfg.dt, rng, pos);
        const double rho = norm_of(pos);
        if (rho > running_max) running_max = rho;
        if (running_max >= 2.0) renormalize();
    }
    const double ratio = norm_of(pos) / running_max;
    return ratio * ratio;
}

// Time spent in the shell before first exit from the ball of radius r.
double walk_occupation(const ExperimentConfig& cfg, Rng& rng, std::vector<double>& pos) {
    pos = cfg.x0.coords;
    const double lo = cfg.shell_lo;
    const double hi = (cfg.shell_hi > cfg.shell_lo) ? cfg.shell_hi : cfg.r;
    double occupied = 0.0;
    while (true) {
        const double rho = norm_of(pos);
        if (rho > cfg.r) return occupied;
        if (rho >= lo && rho < hi) occupied += cfg.dt;
        add_stable_increment(cfg.params, cfg.dt, rng, pos);
    }
}

double occupation_reference(const ExperimentConfig& cfg) {
    const double lo = cfg.shell_lo;
    const double hi = (cfg.shell_hi > cfg.shell_lo) ? cfg.shell_hi : cfg.r;
    const StableParams& p = cfg.params;
    const double xn = norm(cfg.x0);
    QuadratureSpec spec;
    spec.rel_tol = 1e-9;
    spec.abs_tol = 1e-12;
    const auto radial = [&](double rho) {
        const double mean = sphere_average(
            [&](double c) {
                const double dist2 = std::max(1e-300, xn * xn + rho * rho - 2.0 * xn * rho * c);
                const double sep = std::sqrt(dist2);
                const double lc = -p.alpha * std::log(2.0) - 0.5 * p.d * std::log(kPi) +
                                  log_gamma_real(0.5 * p.d) - 2.0 * log_gamma_real(0.5 * p.alpha);
                return std::exp(lc + (p.alpha - p.d) * std::log(sep)) *
                       j_integral(zeta_r(cfg.r, xn, rho, sep), p);
            },
            p.d, spec);
        return std::pow(rho, p.d - 1.0) * mean;
    };
    QuadratureSpec outer;
    outer.rel_tol = 1e-8;
    outer.abs_tol = 1e-12;
    outer.singularity_hints = {xn, cfg.r};
    return sphere_surface(p.d) * integrate_1d_strict(radial, lo, hi, outer);
}

// Reference CDF of the entrance radius, by per-cell adaptive quadrature of the
// radial marginal with the angular factor done by spherical quadrature (an
// independent route from the sampler's substituted Simpson grid).
struct EntranceRadialCdf {
    std::vector<double> rho_nodes;
    std::vector<double> cum;

    EntranceRadialCdf(const StableParams& p, double xnorm, double r) {
        const int cells = 256;
        const RadialSub sub{r, xnorm, p.alpha, p.d};
        QuadratureSpec inner;
        inner.rel_tol = 1e-9;
        inner.abs_tol = 1e-14;
        const auto marginal = [&](double rho) {
            const double angular = sphere_average(
                [&](double c) {
                    const double dist2 = xnorm * xnorm + rho * rho - 2.0 * xnorm * rho * c;
                    return std::pow(dist2, -0.5 * p.d);
                },
                p.d, inner);
            return std::pow(rho, p.d - 1.0) *
                   std::pow((r - rho) * (r + rho), -0.5 * p.alpha) * angular;
        };
        rho_nodes.resize(cells + 1);
        cum.assign(cells + 1, 0.0);
        for (int k = 0; k <= cells; ++k)
            rho_nodes[k] = sub.rho_of_v(sub.v_max() * k / cells);
        QuadratureSpec cellspec;
        cellspec.rel_tol = 1e-8;
        cellspec.abs_tol = 1e-14;
        for (int k = 0; k < cells; ++k) {
            QuadratureSpec s = cellspec;
            if (k == cells - 1) s.singularity_hints = {r};
            cum[k + 1] = cum[k] + integrate_1d(marginal, rho_nodes[k], rho_nodes[k + 1], s).value;
        }
    }

    double operator()(double rho) const {
        if (rho <= rho_nodes.front()) return 0.0;
        if (rho >= rho_nodes.back()) return 1.0;
        const auto it = std::upper_bound(rho_nodes.begin(), rho_nodes.end(), rho);
        const std::size_t k = static_cast<std::size_t>(it - rho_nodes.begin()) - 1;
        const double t = (rho - rho_nodes[k]) / (rho_nodes[k + 1] - rho_nodes[k]);
        const double total = cum.back();
        return (cum[k] + t * (cum[k + 1] - cum[k])) / total;
    }
};

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        ks = std::max(ks, std::abs(f - static_cast<double>(i) / n));
        ks = std::max(ks, std::abs(f - static_cast<double>(i + 1) / n));
    }
    return ks;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, std::size_t n, const SeedSpec& seeds,
                                int workers, bool parallel) {
    validate(cfg.params);
    check_dimension(cfg.params, cfg.x0, "estimate");
    if (n < 100) throw DomainError("estimate: require n >= 100");
    if (workers < 1) throw DomainError("estimate: require workers >= 1");
    if (!(cfg.dt > 0.0)) throw DomainError("estimate: require dt > 0");

    const bool wants_samples = cfg.kind == ExperimentKind::closest_reach_radial ||
                               cfg.kind == ExperimentKind::first_entrance_position;

    std::optional<FirstEntranceSampler> entrance;
    if (cfg.kind == ExperimentKind::first_entrance_position)
        entrance.emplace(cfg.params, cfg.x0, cfg.r);
    if (cfg.kind == ExperimentKind::survival || cfg.kind == ExperimentKind::closest_reach_radial) {
        if (!(norm(cfg.x0) > 0.0)) throw DomainError("estimate: require |x0| > 0");
    }
    if (cfg.kind == ExperimentKind::survival && !(norm(cfg.x0) > cfg.r))
        throw DomainError("estimate: survival requires |x0| > r");
    if (cfg.kind == ExperimentKind::occupation && !(norm(cfg.x0) < cfg.r))
        throw DomainError("estimate: occupation requires |x0| < r");

    std::vector<WorkerAccum> acc(static_cast<std::size_t>(workers));
    const auto run_worker = [&](int w) {
        Rng rng(SeedSpec{seeds.master_seed, static_cast<std::uint32_t>(w)}.stream_seed());
        WorkerAccum& a = acc[static_cast<std::size_t>(w)];
        const std::size_t base = n / static_cast<std::size_t>(workers);
        const std::size_t extra = n % static_cast<std::size_t>(workers);
        const std::size_t n_w = base + (static_cast<std::size_t>(w) < extra ? 1 : 0);
        std::vector<double> pos;
        for (std::size_t i = 0; i < n_w; ++i) {
            switch (cfg.kind) {
                case ExperimentKind::survival:
                    a.add(walk_survives(cfg, rng, pos) ? 1.0 : 0.0);
                    break;
                case ExperimentKind::closest_reach_radial: {
                    const double m = walk_min_radius(cfg, rng, pos);
                    a.add(m * m);
                    if (wants_samples) a.samples.push_back(m * m);
                    break;
                }
                case ExperimentKind::first_entrance_position: {
                    const auto y = entrance->sample(rng);
                    a.add(y ? 0.0 : 1.0);
                    if (y && wants_samples) a.samples.push_back(norm(*y));
                    break;
                }
                case ExperimentKind::reflected_stationary:
                    a.add(walk_reflected_ratio_sq(cfg, rng, pos));
                    break;
                case ExperimentKind::occupation:
                    a.add(walk_occupation(cfg, rng, pos));
                    break;
            }
        }
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int w = 0; w < workers; ++w) run_worker(w);
    } else {
        for (int w = 0; w < workers; ++w) run_worker(w);
    }

    WorkerAccum total;
    for (const WorkerAccum& a : acc) merge_into(total, a);

    ExperimentResult res;
    res.estimate.mean = total.mean;
    res.estimate.n = total.count;
    res.estimate.stderr_ =
        (total.count >= 2)
            ? std::sqrt(total.m2 / static_cast<double>(total.count - 1)) /
                  std::sqrt(static_cast<double>(total.count))
            : 0.0;
    res.estimate.seed = seeds;

    const StableParams& p = cfg.params;
    switch (cfg.kind) {
        case ExperimentKind::survival:
            res.reference = survival_probability_radial(p, norm(cfg.x0), cfg.r);
            break;
        case ExperimentKind::closest_reach_radial: {
            res.reference = (p.d - p.alpha) / p.d;  // Beta((d-a)/2, a/2) mean
            const double a2 = 0.5 * (p.d - p.alpha), b2 = 0.5 * p.alpha;
            res.ks = ks_statistic(total.samples,
                                  [a2, b2](double u) { return reg_inc_beta(u, a2, b2); });
            break;
        }
        case ExperimentKind::first_entrance_position: {
            res.reference = entrance->survival();
            const EntranceRadialCdf cdf(p, norm(cfg.x0), cfg.r);
            res.ks = ks_statistic(total.samples, [&cdf](double rho) { return cdf(rho); });
            break;
        }
        case ExperimentKind::reflected_stationary:
            res.reference = static_cast<double>(p.d) / (p.d + p.alpha);
            break;
        case ExperimentKind::occupation:
            res.reference = occupation_reference(cfg);
            break;
    }
    return res;
}

}  // namespace

ExperimentResult estimate(const ExperimentConfig& config, std::size_t n, const SeedSpec& seeds,
                          int workers) {
    return run_experiment(config, n, seeds, workers, true);
}

ExperimentResult estimate_serial(const ExperimentConfig& config, std::size_t n,
                                 const SeedSpec& seeds, int workers) {
    return run_experiment(config, n, seeds, workers, false);
}

}  // namespace stablefluct::mc
