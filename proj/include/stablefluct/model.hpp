#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stablefluct {

// Thrown when an argument lies outside the support or parameter window of an
// identity.  Support violations are never mapped to a silent zero.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularityError : std::runtime_error {
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature gave up before reaching the requested tolerance.  The
// best estimate and the error actually achieved ride along.
struct ToleranceNotMet : std::runtime_error {
    ToleranceNotMet(const std::string& what, double estimate_, double achieved_)
        : std::runtime_error(what), estimate(estimate_), achieved(achieved_) {}
    double estimate;
    double achieved;
};

struct RejectionBudgetExceeded : std::runtime_error {
    explicit RejectionBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Dimension d >= 2 and stability index alpha in (0,2).
struct StableParams {
    int d = 2;
    double alpha = 1.0;
};

// Throws DomainError naming the violated constraint.
void validate(const StableParams& params);

// Dense point of R^d.  Dimension checks happen at call boundaries against the
// StableParams in play.
struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> v) : coords(v) {}
    explicit Point(std::vector<double> v) : coords(std::move(v)) {}
    explicit Point(std::size_t n) : coords(n, 0.0) {}

    std::size_t size() const { return coords.size(); }
    double& operator[](std::size_t i) { return coords[i]; }
    double operator[](std::size_t i) const { return coords[i]; }
};

double norm(const Point& x);
double dist(const Point& x, const Point& y);
double dot(const Point& x, const Point& y);
Point operator-(const Point& x, const Point& y);
Point operator*(double c, const Point& x);

// Checks x.size() == params.d, throws DomainError otherwise.
void check_dimension(const StableParams& params, const Point& x, const char* name);

struct BallSpec {
    double radius = 1.0;
};

// Sphere inversion through S_{d-1}: x -> x/|x|^2.  Involution; fixes |x|=1.
Point kelvin_invert(const Point& x);

// One validation case: lhs vs rhs with tolerance verdict.
struct IdentityReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// abs_err = |lhs-rhs|, rel_err = abs_err / max(|rhs|, 1e-300),
// pass <=> rel_err <= tol, except abs_err <= tol when rhs == 0.
IdentityReport make_report(std::string name,
                           std::vector<std::pair<std::string, std::string>> params,
                           double lhs, double rhs, double tol);

}  // namespace stablefluct
