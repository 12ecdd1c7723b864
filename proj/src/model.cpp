#include "stablefluct/model.hpp"

#include <algorithm>
#include <cmath>

namespace stablefluct {

void validate(const StableParams& params) {
    if (params.d < 2)
        throw DomainError("StableParams: require integer dimension d >= 2, got d=" +
                          std::to_string(params.d));
    if (!(params.alpha > 0.0) || !(params.alpha < 2.0))
        throw DomainError("StableParams: require alpha in (0,2) strictly, got alpha=" +
                          std::to_string(params.alpha));
}

double norm(const Point& x) {
    double s = 0.0;
    for (double c : x.coords) s += c * c;
    return std::sqrt(s);
}

double dist(const Point& x, const Point& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        const double d = x.coords[i] - y.coords[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double dot(const Point& x, const Point& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.coords.size(); ++i) s += x.coords[i] * y.coords[i];
    return s;
}

Point operator-(const Point& x, const Point& y) {
    Point r(x.coords);
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= y.coords[i];
    return r;
}

Point operator*(double c, const Point& x) {
    Point r(x.coords);
    for (double& v : r.coords) v *= c;
    return r;
}

void check_dimension(const StableParams& params, const Point& x, const char* name) {
    if (x.size() != static_cast<std::size_t>(params.d))
        throw DomainError(std::string(name) + ": point dimension " + std::to_string(x.size()) +
                          " does not match d=" + std::to_string(params.d));
}

Point kelvin_invert(const Point& x) {
    const double n2 = dot(x, x);
    if (n2 == 0.0) throw DomainError("kelvin_invert: x = 0 has no image");
    Point r(x.coords);
    for (double& v : r.coords) v /= n2;
    return r;
}

IdentityReport make_report(std::string name,
                           std::vector<std::pair<std::string, std::string>> params,
                           double lhs, double rhs, double tol) {
    IdentityReport rep;
    rep.name = std::move(name);
    rep.params = std::move(params);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.tol = tol;
    rep.abs_err = std::abs(lhs - rhs);
    rep.rel_err = rep.abs_err / std::max(std::abs(rhs), 1e-300);
    rep.pass = (rhs == 0.0) ? (rep.abs_err <= tol) : (rep.rel_err <= tol);
    return rep;
}

}  // namespace stablefluct
