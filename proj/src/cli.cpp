#include "stablefluct/cli.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stablefluct/identities.hpp"
#include "stablefluct/montecarlo.hpp"
#include "stablefluct/numerics.hpp"
#include "stablefluct/operators.hpp"
#include "stablefluct/suites.hpp"

namespace stablefluct::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// All numeric output carries 9 significant digits.
ordered_json num9(double v) {
    if (!std::isfinite(v)) return std::string(v > 0 ? "inf" : (v < 0 ? "-inf" : "nan"));
    return ordered_json::parse(fmt9(v));
}

const std::string& require_arg(const RunConfig& c, const std::string& key) {
    const auto it = c.args.find(key);
    if (it == c.args.end() || it->second.empty())
        throw DomainError("missing required argument --" + key);
    return it->second;
}

std::vector<double> parse_reals(const std::string& s, const std::string& key) {
    std::vector<double> vals;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw DomainError("--" + key + ": cannot parse '" + item + "' as a real");
        }
        if (pos != item.size())
            throw DomainError("--" + key + ": trailing junk in '" + item + "'");
        vals.push_back(v);
    }
    if (vals.empty()) throw DomainError("--" + key + ": empty value");
    return vals;
}

Point parse_point(const RunConfig& c, const std::string& key) {
    const std::vector<double> vals = parse_reals(require_arg(c, key), key);
    if (vals.size() != static_cast<std::size_t>(c.d))
        throw DomainError("--" + key + ": got " + std::to_string(vals.size()) +
                          " coordinates, require d=" + std::to_string(c.d));
    return Point(vals);
}

double parse_scalar(const RunConfig& c, const std::string& key) {
    const std::vector<double> vals = parse_reals(require_arg(c, key), key);
    if (vals.size() != 1) throw DomainError("--" + key + ": expected a single real");
    return vals[0];
}

EntranceExitMode parse_mode(const RunConfig& c) {
    const std::string& m = require_arg(c, "mode");
    if (m == "entrance") return EntranceExitMode::entrance;
    if (m == "exit") return EntranceExitMode::exit;
    throw DomainError("--mode: expected 'entrance' or 'exit', got '" + m + "'");
}

LadderSide parse_side(const RunConfig& c) {
    const std::string& s = require_arg(c, "side");
    if (s == "minus") return LadderSide::minus;
    if (s == "plus") return LadderSide::plus;
    throw DomainError("--side: expected 'minus' or 'plus', got '" + s + "'");
}

SphereFunction parse_sphere_function(const RunConfig& c) {
    const auto it = c.args.find("f");
    const std::string name = (it == c.args.end() || it->second.empty()) ? "one" : it->second;
    if (name == "one") return SphereFunction::constant(1.0, "1");
    if (name == "coord1") {
        SphereFunction f;
        f.eval = [](const Point& phi) { return phi[0]; };
        f.label = "coord1";
        return f;
    }
    throw DomainError("--f: expected 'one' or 'coord1', got '" + name + "'");
}

ordered_json complex_json(std::complex<double> v) {
    ordered_json j;
    j["re"] = num9(v.real());
    j["im"] = num9(v.imag());
    return j;
}

ordered_json report_json(const IdentityReport& r) {
    ordered_json j;
    j["name"] = r.name;
    ordered_json pj;
    for (const auto& [k, v] : r.params) pj[k] = v;
    j["params"] = pj;
    j["lhs"] = num9(r.lhs);
    j["rhs"] = num9(r.rhs);
    j["abs_err"] = num9(r.abs_err);
    j["rel_err"] = num9(r.rel_err);
    j["tol"] = num9(r.tol);
    j["pass"] = r.pass;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += "\"\"";
        else quoted += ch;
    }
    quoted += "\"";
    return quoted;
}

void write_output(const RunConfig& c, const std::string& body, std::ostream& out) {
    if (c.out.empty()) {
        out << body;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw DomainError("cannot open output file " + c.out);
    f << body;
}

}  // namespace

int run_eval(const RunConfig& c, std::ostream& out, std::ostream& err) {
    (void)err;
    const StableParams p{c.d, c.alpha};
    validate(p);
    if (c.identity.empty()) throw DomainError("eval: missing --identity");

    ordered_json params;
    params["d"] = c.d;
    params["alpha"] = num9(c.alpha);
    for (const auto& [k, v] : c.args) params[k] = v;

    ordered_json value;
    const std::string& id = c.identity;
    if (id == "jump-density") {
        value = num9(jump_density(p, parse_point(c, "w")));
    } else if (id == "levy-exponent") {
        value = complex_json(levy_exponent(p, parse_scalar(c, "theta")));
    } else if (id == "closest-reach-density") {
        value = num9(closest_reach_density(p, parse_point(c, "x"), parse_point(c, "y")));
    } else if (id == "closest-reach-cdf") {
        value = num9(closest_reach_radial_cdf(p, parse_scalar(c, "rho")));
    } else if (id == "first-passage-density") {
        value = num9(first_passage_density(p, parse_point(c, "x"), parse_scalar(c, "r"),
                                           parse_mode(c), parse_point(c, "y")));
    } else if (id == "survival") {
        value = num9(survival_probability(p, parse_point(c, "x"), parse_scalar(c, "r")));
    } else if (id == "resolvent-density") {
        value = num9(resolvent_density(p, parse_scalar(c, "r"), parse_mode(c),
                                       parse_point(c, "x"), parse_point(c, "y")));
    } else if (id == "triple-density") {
        value = num9(triple_density(p, parse_scalar(c, "r"), parse_mode(c), parse_point(c, "x"),
                                    parse_point(c, "z"), parse_point(c, "y"),
                                    parse_point(c, "v")));
    } else if (id == "pair-reach-density") {
        value = num9(pair_reach_density(p, parse_scalar(c, "r"), parse_mode(c),
                                        parse_point(c, "x"), parse_point(c, "z"),
                                        parse_point(c, "v")));
    } else if (id == "pair-jump-density") {
        value = num9(pair_jump_density(p, parse_scalar(c, "r"), parse_mode(c),
                                       parse_point(c, "x"), parse_point(c, "y"),
                                       parse_point(c, "v")));
    } else if (id == "ladder-potential-density") {
        value = num9(ladder_potential_density(p, parse_side(c), parse_point(c, "x"),
                                              parse_point(c, "z")));
    } else if (id == "ladder-levy-density") {
        value = num9(ladder_levy_density(p, parse_scalar(c, "y")));
    } else if (id == "ladder-laplace-exponent") {
        value = num9(ladder_laplace_exponent(p, parse_scalar(c, "lam")));
    } else if (id == "excursion-overshoot-density") {
        value = num9(excursion_overshoot_density(p, parse_point(c, "theta"),
                                                 parse_point(c, "y")));
    } else if (id == "stationary-density") {
        value = num9(stationary_density(p, parse_point(c, "w")));
    } else if (id == "stationary-radial-moment") {
        value = num9(stationary_radial_moment(p, parse_scalar(c, "gamma")));
    } else if (id == "poisson-kernel-average") {
        value = num9(poisson_kernel_average(parse_point(c, "w"), c.d));
    } else if (id == "rho-op") {
        value = complex_json(rho_op(p, parse_scalar(c, "opz"), parse_sphere_function(c),
                                    parse_point(c, "theta")));
    } else if (id == "resolvent-op") {
        value = complex_json(resolvent_op(p, parse_scalar(c, "opz"), parse_sphere_function(c),
                                          parse_point(c, "theta")));
    } else {
        throw DomainError("unknown identity: " + id);
    }

    ordered_json doc;
    doc["identity"] = id;
    doc["params"] = params;
    doc["value"] = value;
    write_output(c, doc.dump() + "\n", out);
    return 0;
}

int run_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
    (void)err;
    const StableParams p{c.d, c.alpha};
    validate(p);
    if (c.suite.empty()) throw DomainError("check: missing --suite");
    const std::vector<IdentityReport> reports = suites::run_suite(c.suite, p, c.tol);
    int passed = 0, failed = 0;
    ordered_json cases = ordered_json::array();
    for (const IdentityReport& r : reports) {
        cases.push_back(report_json(r));
        (r.pass ? passed : failed)++;
    }
    ordered_json doc;
    doc["suite"] = c.suite;
    doc["cases"] = cases;
    doc["summary"] = ordered_json{{"passed", passed}, {"failed", failed}};
    write_output(c, doc.dump() + "\n", out);
    return failed == 0 ? 0 : 1;
}

namespace {

struct SimulateSetup {
    mc::ExperimentConfig config;
    std::vector<std::string> extra_columns;  // between alpha and estimate
    std::vector<std::string> extra_values;
    bool has_ks = false;
};

SimulateSetup make_experiment(const RunConfig& c) {
    SimulateSetup s;
    s.config.params = StableParams{c.d, c.alpha};
    validate(s.config.params);
    s.config.x0 = parse_point(c, "x");
    s.config.dt = c.dt;
    const std::string& name = c.experiment;
    const std::string xraw = require_arg(c, "x");
    if (name == "survival") {
        s.config.kind = mc::ExperimentKind::survival;
        s.config.r = parse_scalar(c, "r");
        s.extra_columns = {"x", "r", "dt"};
        s.extra_values = {xraw, fmt9(s.config.r), fmt9(c.dt)};
    } else if (name == "closest-reach-radial") {
        s.config.kind = mc::ExperimentKind::closest_reach_radial;
        s.extra_columns = {"x", "dt"};
        s.extra_values = {xraw, fmt9(c.dt)};
        s.has_ks = true;
    } else if (name == "first-entrance") {
        s.config.kind = mc::ExperimentKind::first_entrance_position;
        s.config.r = parse_scalar(c, "r");
        s.extra_columns = {"x", "r"};
        s.extra_values = {xraw, fmt9(s.config.r)};
        s.has_ks = true;
    } else if (name == "reflected-stationary") {
        s.config.kind = mc::ExperimentKind::reflected_stationary;
        s.extra_columns = {"x", "dt"};
        s.extra_values = {xraw, fmt9(c.dt)};
    } else if (name == "occupation") {
        s.config.kind = mc::ExperimentKind::occupation;
        s.config.r = parse_scalar(c, "r");
        if (c.args.count("shell")) {
            const std::vector<double> sh = parse_reals(c.args.at("shell"), "shell");
            if (sh.size() != 2) throw DomainError("--shell: expected 'lo,hi'");
            s.config.shell_lo = sh[0];
            s.config.shell_hi = sh[1];
        }
        const double hi = s.config.shell_hi > s.config.shell_lo ? s.config.shell_hi : s.config.r;
        s.extra_columns = {"x", "r", "shell_lo", "shell_hi", "dt"};
        s.extra_values = {xraw, fmt9(s.config.r), fmt9(s.config.shell_lo), fmt9(hi), fmt9(c.dt)};
    } else {
        throw DomainError("unknown experiment: " + name);
    }
    return s;
}

}  // namespace

int run_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
    (void)err;
    if (c.experiment.empty()) throw DomainError("simulate: missing --experiment");
    if (c.workers < 1) throw DomainError("--workers: require at least 1");
    SimulateSetup setup = make_experiment(c);

    const auto t0 = std::chrono::steady_clock::now();
    const mc::SeedSpec seeds{c.seed, 0};
    const mc::ExperimentResult res =
        mc::estimate(setup.config, static_cast<std::size_t>(c.n), seeds, c.workers);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string csv = "experiment,d,alpha";
    for (const std::string& col : setup.extra_columns) csv += "," + col;
    csv += ",estimate,stderr,n,reference";
    if (setup.has_ks) csv += ",ks";
    csv += ",seed\n";
    csv += csv_field(c.experiment) + "," + std::to_string(c.d) + "," + fmt9(c.alpha);
    for (const std::string& v : setup.extra_values) csv += "," + csv_field(v);
    csv += "," + fmt9(res.estimate.mean) + "," + fmt9(res.estimate.stderr_) + "," +
           std::to_string(res.estimate.n) + "," + fmt9(res.reference);
    if (setup.has_ks) csv += "," + fmt9(res.ks.value_or(0.0));
    csv += "," + std::to_string(c.seed) + "\n";

    ordered_json manifest;
    manifest["command"] = "simulate";
    manifest["experiment"] = c.experiment;
    ordered_json cfg;
    cfg["d"] = c.d;
    cfg["alpha"] = num9(c.alpha);
    for (const auto& [k, v] : c.args) cfg[k] = v;
    cfg["n"] = c.n;
    cfg["dt"] = num9(c.dt);
    cfg["seed"] = c.seed;
    cfg["workers"] = c.workers;
    if (!c.out.empty()) cfg["out"] = c.out;
    manifest["config"] = cfg;
    manifest["wall_time_s"] = num9(wall);

    if (c.out.empty()) {
        out << csv << manifest.dump() << "\n";
    } else {
        {
            std::ofstream f(c.out, std::ios::binary);
            if (!f) throw DomainError("cannot open output file " + c.out);
            f << csv;
        }
        std::ofstream mf(c.out + ".manifest.json", std::ios::binary);
        if (!mf) throw DomainError("cannot open manifest file " + c.out + ".manifest.json");
        mf << manifest.dump() << "\n";
    }
    return 0;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        switch (c.command) {
            case Command::eval:
                return run_eval(c, out, err);
            case Command::check:
                return run_check(c, out, err);
            case Command::simulate:
                return run_simulate(c, out, err);
        }
        return 2;
    } catch (const ToleranceNotMet& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace stablefluct::cli
