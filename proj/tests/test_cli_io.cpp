#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "epsiso/config.hpp"
#include "epsiso/mesh_io.hpp"

using namespace epsiso;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long count_lines_starting(const std::string& text, const std::string& prefix) {
    long n = 0;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("minimal preset config parses", "[io]") {
    const JobConfig cfg = parse_config(
        R"({"signature":[1,1,1],"case":"cylinder-euclidean","c":1,"grid":[21,21]})");
    CHECK(cfg.preset == "cylinder-euclidean");
    CHECK(cfg.spec.kase == DupinCase::Cylinder);
    CHECK(cfg.spec.constants.at("c") == 1.0);
    CHECK(cfg.grid[0] == 21);
    CHECK(cfg.checks.size() >= 10);
}

TEST_CASE("solve_for completes a missing constant", "[io]") {
    const JobConfig cfg = parse_config(
        R"({"case":"ex1","signature":[1,1,1],"c":1,"a11":0,"a21":0,"a22":2,
            "domain":[[-1,1],[-1,1]],"grid":[11,11],"solve_for":"a12"})");
    CHECK(cfg.spec.constants.at("a12") == Catch::Approx(1.5));
    CHECK(std::abs(constraint_residual(cfg.spec)) < 1e-12);
}

TEST_CASE("config validation errors", "[io]") {
    CHECK_THROWS_AS(parse_config("{"), ConfigError);
    CHECK_THROWS_WITH(parse_config(R"({"case":"ex1-a","grid":[1,21]})"), "grid too small");
    CHECK_THROWS_AS(parse_config(R"({"case":"ex1-a","frobnicate":1})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"grid":[5,5]})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"case":"moebius"})"), ConfigError);
    CHECK_THROWS_WITH(
        parse_config(R"({"case":"ex1-a","domain":[[1,-1],[0,1]],"grid":[5,5]})"),
        "degenerate domain");
    CHECK_THROWS_AS(parse_config(R"({"case":"ex1-a","checks":["warp_drive"]})"), ConfigError);
    CHECK_THROWS_WITH(parse_config(R"({"case":"ex1-a","checks":[]})"), "no checks requested");
    CHECK_THROWS_AS(parse_config(R"({"case":"ex1-a","signature":[1,-1,1]})"), ConfigError);
    // explicit constants violating the constraint are a config error
    CHECK_THROWS_AS(parse_config(R"({"case":"ex1-a","a22":3.0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"case":"ex1-a","perturb":{"zz":0.1}})"), ConfigError);
}

TEST_CASE("perturbations apply after validation", "[io]") {
    const JobConfig cfg =
        parse_config(R"({"case":"ex1-a","perturb":{"a22":0.1},"checks":["gauss_residual"]})");
    CHECK(cfg.spec.constants.at("a22") == 2.0);
    CHECK(cfg.active_spec().constants.at("a22") == Catch::Approx(2.1));
    CHECK(std::abs(constraint_residual(cfg.active_spec())) > 1e-3);
}

TEST_CASE("config round-trip is identical", "[io]") {
    for (const std::string text :
         {R"({"signature":[1,1,1],"case":"cylinder-euclidean","c":1,"grid":[21,21]})",
          R"({"case":"ex2-a","grid":[11,7],"checks":["gauss_residual","eq5_conservation"],
              "method":"fd","perturb":{"a12":0.05},
              "output":{"mesh":"m.obj","report":"r.jsonl"}})",
          R"({"case":"ex1","signature":[1,1,1],"c":1,"a11":0,"a21":0,"a22":2,
              "domain":[[-1,1],[-1,1]],"solve_for":"a12"})"}) {
        const JobConfig a = parse_config(text);
        const JobConfig b = parse_config(serialize_config(a));
        CHECK(a == b);
        CHECK(serialize_config(a) == serialize_config(b));
    }
}

TEST_CASE("mesh export counts and determinism", "[io]") {
    const DupinSurface ds = build_dupin(preset_surface("cylinder-euclidean"));
    const std::string obj = "test_cyl.obj", csv = "test_cyl.csv";

    const MeshStats tiny = export_mesh(ds, 2, 2, obj, csv);
    CHECK(tiny.vertices == 4);
    CHECK(tiny.faces == 1);
    const std::string tiny_text = slurp(obj);
    CHECK(count_lines_starting(tiny_text, "v ") == 4);
    CHECK(count_lines_starting(tiny_text, "f ") == 1);

    const MeshStats full = export_mesh(ds, 21, 21, obj, csv);
    CHECK(full.vertices == 441);
    CHECK(full.faces == 400);
    CHECK(full.excluded == 0);
    const std::string first = slurp(obj);
    const std::string first_csv = slurp(csv);
    export_mesh(ds, 21, 21, obj, csv);
    CHECK(slurp(obj) == first);
    CHECK(slurp(csv) == first_csv);

    // grid origin of ex1-a maps to the origin
    const DupinSurface ex1 = build_dupin(preset_surface("ex1-a"));
    export_mesh(ex1, 21, 21, obj, csv);
    CHECK(slurp(obj).find("\nv 0 0 0\n") != std::string::npos);

    CHECK_THROWS_AS(export_mesh(ds, 5, 5, "/nonexistent-dir/x.obj", csv), std::runtime_error);
    std::remove(obj.c_str());
    std::remove(csv.c_str());
}

TEST_CASE("csv columns carry the curvature and calapso data", "[io]") {
    const DupinSurface ex1 = build_dupin(preset_surface("ex1-a"));
    const std::string obj = "test_ex1.obj", csv = "test_ex1.csv";
    export_mesh(ex1, 3, 3, obj, csv);
    const std::string text = slurp(csv);
    CHECK(text.rfind("u1,u2,x,y,z,lambda1,lambda2,omega\n", 0) == 0);
    // center row: u1 = u2 = 0, lambda1 = 1, lambda2 = 1.5, omega = 5 sqrt2/2
    CHECK(text.find("0,0,0,0,0,1,1.5,3.5355339059327378") != std::string::npos);
    std::remove(obj.c_str());
    std::remove(csv.c_str());
}

TEST_CASE("report lines carry the contract fields in order", "[io]") {
    const CheckResult r{"gauss_residual", 21, 21, 1.5e-12, 1e-8, true, 0};
    const auto j = report_line(r);
    CHECK(j.dump() ==
          R"({"check":"gauss_residual","grid":[21,21],"max_abs":1.5e-12,"tol":1e-08,"pass":true,"excluded":0})");
}

TEST_CASE("holomorphic config block", "[io]") {
    const JobConfig cfg = parse_config(
        R"({"case":"ex1-a","holomorphic":{"eps2":-1,"coeffs":[[0,0],[1,0],[1,0]]}})");
    REQUIRE(cfg.holomorphic.has_value());
    CHECK(cfg.holomorphic->eps2 == -1);
    CHECK(cfg.holomorphic->coeffs.size() == 3);
    const JobConfig rt = parse_config(serialize_config(cfg));
    CHECK(rt.holomorphic->coeffs.size() == 3);
}
