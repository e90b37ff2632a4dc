#pragma once

#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "epsiso/calapso.hpp"
#include "epsiso/checks.hpp"
#include "epsiso/dupin.hpp"

namespace epsiso {

// Configuration problems carry exit code 2; failing checks carry 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputPaths {
    std::string mesh;
    std::string csv;
    std::string report;
    bool operator==(const OutputPaths&) const = default;
};

struct JobConfig {
    std::optional<std::string> preset;  // set when the case came from the catalogue
    DupinSpec spec;                     // validated base constants
    std::map<std::string, double> perturb;  // applied after validation
    std::array<int, 2> grid{21, 21};
    std::vector<std::string> checks;
    Method method = Method::Jet;
    OutputPaths out;
    std::optional<HolomorphicFn> holomorphic;

    // Spec with the perturbation applied; what verify/construct operate on.
    DupinSpec active_spec() const {
        DupinSpec s = spec;
        for (const auto& [k, v] : perturb) {
            if (!s.constants.count(k))
                throw ConfigError("perturb refers to unknown constant '" + k + "'");
            s.constants[k] += v;
        }
        return s;
    }

    bool operator==(const JobConfig& o) const {
        return preset == o.preset && spec.kase == o.spec.kase && spec.sig == o.spec.sig &&
               spec.constants == o.spec.constants && spec.domain.lo1 == o.spec.domain.lo1 &&
               spec.domain.hi1 == o.spec.domain.hi1 && spec.domain.lo2 == o.spec.domain.lo2 &&
               spec.domain.hi2 == o.spec.domain.hi2 && perturb == o.perturb && grid == o.grid &&
               checks == o.checks && method == o.method && out == o.out &&
               holomorphic.has_value() == o.holomorphic.has_value() &&
               (!holomorphic ||
                (holomorphic->eps2 == o.holomorphic->eps2 &&
                 holomorphic->coeffs.size() == o.holomorphic->coeffs.size()));
    }
};

namespace detail {

inline const std::set<std::string>& config_keys() {
    static const std::set<std::string> keys = {
        "signature", "case", "c", "b", "a11", "a12", "a21", "a22", "domain", "grid",
        "checks", "solve_for", "perturb", "method", "output", "holomorphic"};
    return keys;
}

inline bool is_preset_name(const std::string& s) {
    const auto names = preset_names();
    return std::find(names.begin(), names.end(), s) != names.end();
}

}  // namespace detail

inline JobConfig parse_config(const std::string& text,
                              std::optional<std::string> free_override = std::nullopt) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed config document: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("malformed config document: top level must be an object");

    for (const auto& [key, _] : j.items())
        if (!detail::config_keys().count(key)) throw ConfigError("unknown config key '" + key + "'");

    JobConfig cfg;

    if (!j.contains("case") || !j["case"].is_string())
        throw ConfigError("config needs a string 'case'");
    const std::string case_str = j["case"].get<std::string>();

    if (detail::is_preset_name(case_str)) {
        cfg.preset = case_str;
        cfg.spec = preset_surface(case_str);
    } else {
        try {
            cfg.spec.kase = dupin_case_from_string(case_str);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }

    if (j.contains("signature")) {
        const auto& s = j["signature"];
        if (!s.is_array() || s.size() != 3) throw ConfigError("signature must be [e1,e2,e3]");
        Signature sig;
        try {
            sig = Signature(s[0].get<int>(), s[1].get<int>(), s[2].get<int>());
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
        if (cfg.preset && !(sig == cfg.spec.sig))
            throw ConfigError("signature does not match preset '" + *cfg.preset + "'");
        cfg.spec.sig = sig;
    } else if (!cfg.preset) {
        throw ConfigError("non-preset case needs an explicit signature");
    }

    for (const std::string name : {"c", "b", "a11", "a12", "a21", "a22"})
        if (j.contains(name)) {
            if (!j[name].is_number()) throw ConfigError("constant '" + name + "' must be a number");
            cfg.spec.constants[name] = j[name].get<double>();
        }

    if (j.contains("domain")) {
        const auto& d = j["domain"];
        if (!d.is_array() || d.size() != 2 || !d[0].is_array() || d[0].size() != 2 ||
            !d[1].is_array() || d[1].size() != 2)
            throw ConfigError("domain must be [[lo1,hi1],[lo2,hi2]]");
        cfg.spec.domain = {d[0][0].get<double>(), d[0][1].get<double>(), d[1][0].get<double>(),
                           d[1][1].get<double>()};
    } else if (!cfg.preset) {
        throw ConfigError("non-preset case needs an explicit domain");
    }
    if (cfg.spec.domain.empty()) throw ConfigError("degenerate domain");

    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (!g.is_array() || g.size() != 2) throw ConfigError("grid must be [n1,n2]");
        cfg.grid = {g[0].get<int>(), g[1].get<int>()};
    }
    if (cfg.grid[0] < 2 || cfg.grid[1] < 2) throw ConfigError("grid too small");

    std::optional<std::string> solve_for = free_override;
    if (j.contains("solve_for") && !solve_for) solve_for = j["solve_for"].get<std::string>();
    if (solve_for) {
        if (!cfg.spec.constants.count(*solve_for)) cfg.spec.constants[*solve_for] = 0.0;
        try {
            cfg.spec = solve_constraint(cfg.spec, *solve_for);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("solve_constraint failed: ") + e.what());
        }
    }

    // Validate the base constants (perturbations are applied afterwards).
    try {
        const double r = constraint_residual(cfg.spec);
        if (std::abs(r) >= kConstraintTol)
            throw ConfigError("constraint violated (residual " + std::to_string(r) + ")");
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    if (j.contains("perturb")) {
        if (!j["perturb"].is_object()) throw ConfigError("perturb must be an object");
        for (const auto& [k, v] : j["perturb"].items()) {
            if (!cfg.spec.constants.count(k))
                throw ConfigError("perturb refers to unknown constant '" + k + "'");
            cfg.perturb[k] = v.get<double>();
        }
    }

    if (j.contains("checks")) {
        if (!j["checks"].is_array()) throw ConfigError("checks must be an array of names");
        for (const auto& c : j["checks"]) {
            const std::string name = c.get<std::string>();
            if (name == "all") {
                for (const auto& n : default_checks(cfg.spec)) cfg.checks.push_back(n);
                continue;
            }
            const auto& known = check_names();
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw ConfigError("unknown check '" + name + "'");
            if (!check_applies(name, cfg.spec))
                throw ConfigError("check '" + name + "' does not apply to case " +
                                  to_string(cfg.spec.kase));
            cfg.checks.push_back(name);
        }
        if (cfg.checks.empty()) throw ConfigError("no checks requested");
    } else {
        cfg.checks = default_checks(cfg.spec);
    }

    if (j.contains("method")) {
        const std::string m = j["method"].get<std::string>();
        if (m == "jet")
            cfg.method = Method::Jet;
        else if (m == "fd")
            cfg.method = Method::Fd;
        else
            throw ConfigError("method must be 'jet' or 'fd'");
    }

    if (j.contains("output")) {
        const auto& o = j["output"];
        if (!o.is_object()) throw ConfigError("output must be an object");
        for (const auto& [k, v] : o.items()) {
            if (k == "mesh")
                cfg.out.mesh = v.get<std::string>();
            else if (k == "csv")
                cfg.out.csv = v.get<std::string>();
            else if (k == "report")
                cfg.out.report = v.get<std::string>();
            else
                throw ConfigError("unknown output key '" + k + "'");
        }
    }

    if (j.contains("holomorphic")) {
        const auto& h = j["holomorphic"];
        if (!h.is_object() || !h.contains("coeffs"))
            throw ConfigError("holomorphic must be {coeffs: [[re,im],...], eps2: +-1}");
        HolomorphicFn f;
        f.eps2 = h.value("eps2", 1);
        if (f.eps2 != 1 && f.eps2 != -1) throw ConfigError("holomorphic eps2 must be +1 or -1");
        for (const auto& c : h["coeffs"]) {
            if (!c.is_array() || c.size() != 2)
                throw ConfigError("holomorphic coeffs entries must be [re,im]");
            f.coeffs.push_back({c[0].get<double>(), c[1].get<double>(), f.eps2});
        }
        if (f.coeffs.empty()) throw ConfigError("holomorphic coeffs must be nonempty");
        cfg.holomorphic = f;
    }

    return cfg;
}

inline JobConfig load_config(const std::string& path,
                             std::optional<std::string> free_override = std::nullopt) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), free_override);
}

// Canonical serialized form; parse(serialize(cfg)) == cfg.
inline std::string serialize_config(const JobConfig& cfg) {
    nlohmann::ordered_json j;
    j["signature"] = {cfg.spec.sig.e1, cfg.spec.sig.e2, cfg.spec.sig.e3};
    j["case"] = cfg.preset ? *cfg.preset : to_string(cfg.spec.kase);
    for (const std::string name : {"c", "b", "a11", "a12", "a21", "a22"})
        if (cfg.spec.constants.count(name)) j[name] = cfg.spec.constants.at(name);
    j["domain"] = {{cfg.spec.domain.lo1, cfg.spec.domain.hi1},
                   {cfg.spec.domain.lo2, cfg.spec.domain.hi2}};
    j["grid"] = {cfg.grid[0], cfg.grid[1]};
    j["checks"] = cfg.checks;
    if (!cfg.perturb.empty()) j["perturb"] = cfg.perturb;
    j["method"] = cfg.method == Method::Jet ? "jet" : "fd";
    if (!cfg.out.mesh.empty() || !cfg.out.csv.empty() || !cfg.out.report.empty()) {
        nlohmann::ordered_json o;
        if (!cfg.out.mesh.empty()) o["mesh"] = cfg.out.mesh;
        if (!cfg.out.csv.empty()) o["csv"] = cfg.out.csv;
        if (!cfg.out.report.empty()) o["report"] = cfg.out.report;
        j["output"] = o;
    }
    if (cfg.holomorphic) {
        nlohmann::ordered_json h;
        h["eps2"] = cfg.holomorphic->eps2;
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const auto& c : cfg.holomorphic->coeffs) coeffs.push_back({c.re, c.im});
        h["coeffs"] = coeffs;
        j["holomorphic"] = h;
    }
    return j.dump(2) + "\n";
}

inline nlohmann::ordered_json report_line(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["check"] = r.name;
    j["grid"] = {r.n1, r.n2};
    j["max_abs"] = r.max_abs;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["excluded"] = r.excluded;
    return j;
}

}  // namespace epsiso
