#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stablefluct/identities.hpp"
#include "stablefluct/model.hpp"

namespace stablefluct::mc {

// Derives one bit-exact stream per worker:
//   stream = splitmix64_finalizer(master_seed + worker_index * 0x9E3779B97F4A7C15).
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint32_t worker_index = 0;

    std::uint64_t stream_seed() const;
};

// xoshiro256++ with explicit 53-bit double conversion; all distributions are
// hand-rolled so streams are bit-exact across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    double uniform_open01();  // (0,1), never returns an endpoint
    double exponential();     // rate 1
    void gauss_pair(double& g1, double& g2);

  private:
    std::uint64_t s_[4];
};

// One-sided stable draw with Laplace transform E[e^{-lambda S}] = e^{-lambda^beta},
// via the Kanter representation S = (A(U)/E)^{(1-beta)/beta},
// A(u) = [sin(beta u)^beta sin((1-beta)u)^{1-beta} / sin(u)]^{1/(1-beta)}.
double sample_one_sided_stable(double beta, Rng& rng);

// Exact-in-law isotropic stable increment over time dt (subordinated Brownian
// motion): sqrt(2 S) Z with S = dt^{2/alpha} * one-sided(alpha/2), Z standard
// d-dimensional Gaussian.  Adds the increment to pos in place.
void add_stable_increment(const StableParams& params, double dt, Rng& rng,
                          std::vector<double>& pos);
Point sample_stable_increment(const StableParams& params, double dt, Rng& rng);

enum class ExitReason { hit_inner, hit_outer, horizon };

struct PathRecord {
    double min_radius = 0.0;
    Point argmin_point;
    double max_radius = 0.0;
    std::optional<double> first_passage_time;
    std::optional<Point> first_passage_position;
    ExitReason exit_reason = ExitReason::horizon;
};

// Euler random walk on the grid {k dt} with exact increments; stops at the
// first grid time with radius < inner_r (hit_inner), > outer_R (hit_outer),
// or at the horizon.  Same SeedSpec => identical PathRecord.
PathRecord simulate_path(const StableParams& params, const Point& x0, double dt, double inner_r,
                         std::optional<double> outer_R, double horizon, const SeedSpec& seeds);

// Exact draw from the first-entrance law (Blumenthal-Getoor-Ray): returns
// nullopt with probability P_x(tau_r^+ = infinity), otherwise a point with
// |y| < r.  The radial inverse CDF is cached on a 4096-cell grid per (x, r);
// the angle is drawn by rejection against the bound (|x|-rho)^{-d}.
class FirstEntranceSampler {
  public:
    FirstEntranceSampler(const StableParams& params, const Point& x, double r);

    std::optional<Point> sample(Rng& rng) const;
    double survival() const { return survival_; }
    double sample_radius(Rng& rng) const;  // radial marginal only

  private:
    StableParams params_;
    Point x_;
    double xnorm_;
    double r_;
    double survival_;
    double v_max_;
    std::vector<double> cdf_;  // cumulative mass on the substituted grid
};

struct MonteCarloEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::size_t n = 0;
    SeedSpec seed;
};

enum class ExperimentKind {
    survival,
    closest_reach_radial,
    first_entrance_position,
    reflected_stationary,
    occupation,
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::survival;
    StableParams params;
    Point x0;
    double r = 1.0;
    double dt = 1e-3;
    // occupation shell (defaults to the whole ball when hi <= lo)
    double shell_lo = 0.0;
    double shell_hi = 0.0;
    // "never returns" stands in at this multiple of |x0|
    double truncation_factor = 1000.0;
    // far-field step scaling: steps stretch as (rho / (far_multiple * scale))^alpha
    // once the radius exceeds far_multiple times the decision scale; increments
    // stay exact in law at any step size, so this only coarsens infimum
    // detection far from the target ball.
    double far_multiple = 8.0;
    // reflected-process experiment
    int doublings = 15;
    double relax_time = 4.0;
};

struct ExperimentResult {
    MonteCarloEstimate estimate;
    double reference = 0.0;
    std::optional<double> ks;  // distributional experiments only
};

// Deterministic for fixed (seeds.master_seed, workers, n): worker w owns the
// stream SeedSpec{master_seed, w} and a fixed slice of n; partial moments are
// merged in worker order.  Parallelized with OpenMP when available.
ExperimentResult estimate(const ExperimentConfig& config, std::size_t n, const SeedSpec& seeds,
                          int workers);

// Serial reference implementation; bit-identical to estimate() by contract.
ExperimentResult estimate_serial(const ExperimentConfig& config, std::size_t n,
                                 const SeedSpec& seeds, int workers);

}  // namespace stablefluct::mc
