// Command-line driver: construct surface meshes, run verification reports,
// certify pseudo-Calapso solution families and solve case constraints.
//
// Exit codes: 0 success, 1 check failure, 2 configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epsiso/checks.hpp"
#include "epsiso/config.hpp"
#include "epsiso/mesh_io.hpp"

namespace {

using namespace epsiso;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

Method resolve_method(const JobConfig& cfg, const std::string& flag) {
    if (flag == "jet") return Method::Jet;
    if (flag == "fd") return Method::Fd;
    return cfg.method;
}

int run_construct(const std::string& config_path, std::string mesh_path, std::string csv_path,
                  const std::string& /*method*/) {
    const JobConfig cfg = load_config(config_path);
    if (mesh_path.empty()) mesh_path = cfg.out.mesh.empty() ? "surface.obj" : cfg.out.mesh;
    if (csv_path.empty()) {
        csv_path = cfg.out.csv;
        if (csv_path.empty()) {
            csv_path = mesh_path;
            const auto dot = csv_path.rfind('.');
            if (dot != std::string::npos) csv_path.resize(dot);
            csv_path += ".csv";
        }
    }
    const DupinSurface ds = build_dupin(cfg.active_spec());
    const MeshStats st = export_mesh(ds, cfg.grid[0], cfg.grid[1], mesh_path, csv_path);
    std::cout << "wrote " << mesh_path << " (" << st.vertices << " vertices, " << st.faces
              << " quads, " << st.excluded << " excluded) and " << csv_path << "\n";
    return kExitOk;
}

int run_verify(const std::string& config_path, std::string report_path,
               const std::string& method_flag) {
    const JobConfig cfg = load_config(config_path);
    if (report_path.empty())
        report_path = cfg.out.report.empty() ? "report.jsonl" : cfg.out.report;
    const Method method = resolve_method(cfg, method_flag);

    const DupinSurface ds = build_dupin(cfg.active_spec());
    std::ofstream rep(report_path);
    if (!rep) throw ConfigError("cannot open report file '" + report_path + "'");

    bool all_pass = true;
    for (const auto& name : cfg.checks) {
        const CheckResult r = run_check(name, ds, cfg.grid[0], cfg.grid[1], method);
        rep << report_line(r).dump() << "\n";
        std::cout << (r.pass ? "pass " : "FAIL ") << r.name << "  max_abs=" << r.max_abs
                  << " tol=" << r.tol << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitCheckFailure;
}

int run_calapso(const std::string& config_path, const std::string& solution,
                std::string report_path, const std::string& method_flag) {
    const JobConfig cfg = load_config(config_path);
    if (report_path.empty())
        report_path = cfg.out.report.empty() ? "calapso.jsonl" : cfg.out.report;
    const Method method = resolve_method(cfg, method_flag);

    std::ofstream rep(report_path);
    if (!rep) throw ConfigError("cannot open report file '" + report_path + "'");

    bool all_pass = true;
    auto emit = [&](const CheckResult& r) {
        rep << report_line(r).dump() << "\n";
        std::cout << (r.pass ? "pass " : "FAIL ") << r.name << "  max_abs=" << r.max_abs
                  << " tol=" << r.tol << " excluded=" << r.excluded << "\n";
        all_pass = all_pass && r.pass;
    };

    if (solution == "corollary1") {
        const DupinSurface ds = build_dupin(cfg.active_spec());
        emit(run_check("calapso_omega", ds, cfg.grid[0], cfg.grid[1], method));
        emit(run_check("calapso_Omega", ds, cfg.grid[0], cfg.grid[1], method));
    } else if (solution == "prop2" || solution == "prop3" || solution == "prop4") {
        const PropositionId which = solution == "prop2"   ? PropositionId::Prop2
                                    : solution == "prop3" ? PropositionId::Prop3
                                                          : PropositionId::Prop4;
        const DupinSpec spec = cfg.active_spec();
        ScalarField field;
        try {
            field = proposition_field(which, spec);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        const double tol = method == Method::Jet ? 1e-9 : 1e-5;
        CheckResult r{"calapso_" + solution, cfg.grid[0], cfg.grid[1], 0.0, tol, false, 0};
        const Domain& d = spec.domain;
        for (int j2 = 0; j2 < cfg.grid[1]; ++j2)
            for (int i1 = 0; i1 < cfg.grid[0]; ++i1) {
                const double u1 = d.lo1 + (d.hi1 - d.lo1) * i1 / (cfg.grid[0] - 1);
                const double u2 = d.lo2 + (d.hi2 - d.lo2) * j2 / (cfg.grid[1] - 1);
                try {
                    const double v = method == Method::Jet
                                         ? calapso_residual(field, u1, u2, spec.sig)
                                         : calapso_residual_fd(field, u1, u2, spec.sig).value;
                    r.max_abs = std::max(r.max_abs, std::abs(v));
                } catch (const std::domain_error&) {
                    ++r.excluded;
                }
            }
        r.pass = r.max_abs <= r.tol;
        emit(r);
    } else if (solution == "prop5") {
        HolomorphicFn f;
        if (cfg.holomorphic)
            f = *cfg.holomorphic;
        else
            f = HolomorphicFn{{{0.0, 0.0, 1}, {1.0, 0.0, 1}}, 1};  // f(z) = z
        ScalarField field;
        try {
            field = holomorphic_omega(f);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        const Signature sig(1, f.eps2, 1);  // sphere chart: eps1 = 1, eps = eps2
        const double tol = method == Method::Jet ? 1e-8 : 1e-5;
        CheckResult r{"calapso_prop5", cfg.grid[0], cfg.grid[1], 0.0, tol, false, 0};
        const Domain& d = cfg.spec.domain;
        for (int j2 = 0; j2 < cfg.grid[1]; ++j2)
            for (int i1 = 0; i1 < cfg.grid[0]; ++i1) {
                const double u1 = d.lo1 + (d.hi1 - d.lo1) * i1 / (cfg.grid[0] - 1);
                const double u2 = d.lo2 + (d.hi2 - d.lo2) * j2 / (cfg.grid[1] - 1);
                if (holomorphic_point_status(f, u1, u2) != PointStatus::Ok) {
                    ++r.excluded;
                    continue;
                }
                try {
                    const double v = method == Method::Jet
                                         ? calapso_residual(field, u1, u2, sig)
                                         : calapso_residual_fd(field, u1, u2, sig).value;
                    r.max_abs = std::max(r.max_abs, std::abs(v));
                } catch (const std::domain_error&) {
                    ++r.excluded;
                }
            }
        r.pass = r.max_abs <= r.tol;
        emit(r);
    } else {
        throw ConfigError("unknown solution '" + solution + "'");
    }
    return all_pass ? kExitOk : kExitCheckFailure;
}

int run_solve(const std::string& config_path, const std::string& free_name) {
    const JobConfig cfg = load_config(config_path, free_name.empty()
                                                       ? std::optional<std::string>{}
                                                       : std::optional<std::string>{free_name});
    std::cout << serialize_config(cfg);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"epsilon-isothermic Dupin surfaces and pseudo-Calapso certification"};
    app.require_subcommand(1);

    std::string method_flag;
    app.add_option("--method", method_flag, "residual method: jet (default) or fd")
        ->check(CLI::IsMember({"jet", "fd"}));

    std::string config_path, mesh_path, csv_path, report_path, solution, free_name;

    auto* construct = app.add_subcommand("construct", "sample a surface to OBJ + CSV");
    construct->add_option("--config", config_path, "config JSON path")->required();
    construct->add_option("--out", mesh_path, "output OBJ path");
    construct->add_option("--csv", csv_path, "output CSV path");

    auto* verify = app.add_subcommand("verify", "run the invariant checks, write JSON lines");
    verify->add_option("--config", config_path, "config JSON path")->required();
    verify->add_option("--report", report_path, "report JSONL path");

    auto* calapso = app.add_subcommand("calapso", "certify a pseudo-Calapso solution family");
    calapso->add_option("--config", config_path, "config JSON path")->required();
    calapso->add_option("--solution", solution, "corollary1|prop2|prop3|prop4|prop5")->required();
    calapso->add_option("--report", report_path, "report JSONL path");

    auto* solve = app.add_subcommand("solve-constraint", "solve the case constraint for one constant");
    solve->add_option("--config", config_path, "config JSON path")->required();
    solve->add_option("--free", free_name, "name of the free constant");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(config_path, mesh_path, csv_path, method_flag);
        if (verify->parsed()) return run_verify(config_path, report_path, method_flag);
        if (calapso->parsed()) return run_calapso(config_path, solution, report_path, method_flag);
        if (solve->parsed()) return run_solve(config_path, free_name);
    } catch (const epsiso::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
