#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "epsiso/calapso.hpp"
#include "epsiso/checks.hpp"
#include "epsiso/dupin.hpp"
#include "epsiso/forms.hpp"
#include "epsiso/residuals.hpp"
#include "epsiso/surface.hpp"

using namespace epsiso;

namespace {

Surface unit_cylinder() {
    return build_dupin(preset_surface("cylinder-euclidean")).surface;
}

Surface flat_plane() {
    Surface s;
    s.comp = {ScalarField([](const Jet& a, const Jet&) { return a; }),
              ScalarField([](const Jet&, const Jet& b) { return b; }), ScalarField::constant(0.0)};
    s.domain = {-2, 2, -2, 2};
    s.sig = Signature(1, 1, 1);
    return s;
}

}  // namespace

TEST_CASE("jet_eval on the cylinder and the plane", "[diffgeo]") {
    const Surface cyl = unit_cylinder();
    const SurfaceJet j0 = jet_eval(cyl, 0, 0, 2);
    CHECK(sup_norm(j0.X) == Catch::Approx(0.0).margin(1e-15));
    CHECK(sup_norm(j0.X1 - Vec3d{1, 0, 0}) == Catch::Approx(0.0).margin(1e-15));
    CHECK(sup_norm(j0.X2 - Vec3d{0, 1, 0}) == Catch::Approx(0.0).margin(1e-15));
    CHECK(sup_norm(j0.X11 - Vec3d{0, 0, -1}) == Catch::Approx(0.0).margin(1e-15));

    // second derivative of (sin u1, u2, cos u1 - 1) at u1 = pi/2
    const SurfaceJet j1 = jet_eval(cyl, M_PI / 2, 0, 2);
    CHECK(sup_norm(j1.X11 - Vec3d{-1, 0, 0}) == Catch::Approx(0.0).margin(1e-12));
    CHECK(sup_norm(j1.X22) == 0.0);
    CHECK(sup_norm(j1.X12) == 0.0);

    const Surface plane = flat_plane();
    const SurfaceJet jp = jet_eval(plane, 0.3, -0.7, 2);
    CHECK(sup_norm(jp.X11) == 0.0);
    CHECK(sup_norm(jp.X12) == 0.0);
    CHECK(sup_norm(jp.X22) == 0.0);

    CHECK_THROWS_AS(jet_eval(cyl, 100.0, 0.0, 2), std::domain_error);
}

TEST_CASE("fundamental forms of the cylinder and the plane", "[diffgeo]") {
    const Surface cyl = unit_cylinder();
    const FundamentalForms f = fundamental_forms(jet_eval(cyl, 0, 0, 2), cyl.sig);
    CHECK(f.g11 == Catch::Approx(1.0));
    CHECK(f.g22 == Catch::Approx(1.0));
    CHECK(f.g12 == Catch::Approx(0.0).margin(1e-15));
    CHECK(sup_norm(f.N - Vec3d{0, 0, 1}) == Catch::Approx(0.0).margin(1e-15));
    CHECK(f.II11 == Catch::Approx(-1.0));
    CHECK(f.II22 == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(f.phi.has_value());
    CHECK(*f.phi == Catch::Approx(0.0).margin(1e-15));

    const Surface plane = flat_plane();
    const FundamentalForms fp = fundamental_forms(jet_eval(plane, 0.5, 0.5, 2), plane.sig);
    CHECK(fp.II11 == 0.0);
    CHECK(fp.II12 == 0.0);
    CHECK(fp.II22 == 0.0);
}

TEST_CASE("degenerate normals are rejected", "[diffgeo]") {
    // graph of x3 = x1 with signature (+,+,-): the coordinate frame spans a
    // plane whose pseudo-normal is lightlike
    Surface s;
    s.comp = {ScalarField([](const Jet& a, const Jet&) { return a; }),
              ScalarField([](const Jet&, const Jet& b) { return b; }),
              ScalarField([](const Jet& a, const Jet&) { return a; })};
    s.domain = {-1, 1, -1, 1};
    s.sig = Signature(1, 1, -1);
    CHECK_THROWS_AS(fundamental_forms(jet_eval(s, 0, 0, 2), s.sig), std::domain_error);
    CHECK_THROWS_WITH(fundamental_forms(jet_eval(s, 0, 0, 2), s.sig), "degenerate normal");

    // plane spanned by the two spacelike axes of (+,-,+): its normal is
    // timelike while eps3 = +1
    Surface t;
    t.comp = {ScalarField([](const Jet& a, const Jet&) { return a; }),
              ScalarField::constant(0.0),
              ScalarField([](const Jet&, const Jet& b) { return b; })};
    t.domain = {-1, 1, -1, 1};
    t.sig = Signature(1, -1, 1);
    CHECK_THROWS_WITH(fundamental_forms(jet_eval(t, 0, 0, 2), t.sig),
                      "normal causal type mismatch");
}

TEST_CASE("Weingarten coefficients", "[diffgeo]") {
    const DupinSurface cyl = build_dupin(preset_surface("cylinder-euclidean"));
    const SurfaceJet j = jet_eval(cyl.surface, 0.4, -0.3, 1);
    const Vec3j nj = cyl.surface.normal_jets(0.4, -0.3);
    const NormalJet n{value(nj), value(d1(nj)), value(d2(nj))};
    const WeingartenResult w = weingarten_lambdas(j, n, cyl.spec.sig);
    CHECK(w.lambda1 == Catch::Approx(1.0).margin(1e-12));
    CHECK(w.lambda2 == Catch::Approx(0.0).margin(1e-12));
    CHECK(w.defect < 1e-12);

    const Surface plane = flat_plane();
    const NormalJet np{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}};
    const WeingartenResult wp = weingarten_lambdas(jet_eval(plane, 0, 0, 1), np, plane.sig);
    CHECK(wp.lambda1 == 0.0);
    CHECK(wp.lambda2 == 0.0);

    const DupinSurface ex1 = build_dupin(preset_surface("ex1-a"));
    const SurfaceJet je = jet_eval(ex1.surface, 0, 0, 1);
    const Vec3j ne = ex1.surface.normal_jets(0, 0);
    const WeingartenResult we =
        weingarten_lambdas(je, {value(ne), value(d1(ne)), value(d2(ne))}, ex1.spec.sig);
    CHECK(we.lambda1 == Catch::Approx(1.0).margin(1e-12));
    CHECK(we.lambda2 == Catch::Approx(1.5).margin(1e-12));
}

TEST_CASE("curvature scalars", "[diffgeo]") {
    const auto a = curvature_scalars(2.0, 0.0);
    CHECK(a.H == 1.0);
    CHECK(a.Hp == -1.0);
    CHECK(curvature_scalars(0.7, 0.7).Hp == 0.0);
    const auto c = curvature_scalars(1.0, 1.5);
    CHECK(c.H == Catch::Approx(1.25));
    CHECK(c.Hp == Catch::Approx(0.25));
}

TEST_CASE("Christoffel symbols", "[diffgeo]") {
    const ChristoffelSet zero = christoffel({2.0, 3.0, 0, 0, 0, 0});
    CHECK(zero.G1_11 == 0.0);
    CHECK(zero.G2_12 == 0.0);
    CHECK_THROWS_AS(christoffel({0.0, 1.0, 0, 0, 0, 0}), std::domain_error);

    // on a Dupin chart the metric formulas must reproduce the curvature
    // formula G^i_ij = lambda_i,j / (lambda_j - lambda_i)
    const DupinSurface ex1 = build_dupin(preset_surface("ex1-a"));
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> uni(-0.9, 0.9);
    for (int k = 0; k < 12; ++k) {
        const double u1 = uni(rng), u2 = uni(rng);
        const FrameJets f = frame_jets(ex1.surface, u1, u2);
        const ChristoffelSet c = christoffel({f.g11.value(), f.g22.value(), f.g11.deriv(1, 0),
                                              f.g11.deriv(0, 1), f.g22.deriv(1, 0),
                                              f.g22.deriv(0, 1)});
        const Jet h1 = ex1.forms.h1(Jet::variable1(u1));
        const Jet h2 = ex1.forms.h2(Jet::variable1(u2));
        const double sep = h1.value() - h2.value();
        // lambda2 = h1(u1), lambda1 = h2(u2): Gamma^2_12 = h1'/(h2 - h1)
        CHECK(c.G2_12 == Catch::Approx(h1.deriv(1, 0) / (-sep)).margin(1e-9));
        CHECK(c.G1_12 == Catch::Approx(h2.deriv(1, 0) / sep).margin(1e-9));
        // identity (metric form): G^j_ii = -G^i_ij g_ii / g_jj
        CHECK(c.G2_11 ==
              Catch::Approx(-c.G1_12 * f.g11.value() / f.g22.value()).margin(1e-12));
        CHECK(c.G1_22 ==
              Catch::Approx(-c.G2_12 * f.g22.value() / f.g11.value()).margin(1e-12));
    }
}

TEST_CASE("scalar field jets agree with central differences on presets", "[diffgeo]") {
    std::mt19937_64 rng(23);
    for (const auto& name : preset_names()) {
        const DupinSurface ds = build_dupin(preset_surface(name));
        const Domain& d = ds.spec.domain;
        std::uniform_real_distribution<double> U1(d.lo1 + 0.1, d.hi1 - 0.1);
        std::uniform_real_distribution<double> U2(d.lo2 + 0.1, d.hi2 - 0.1);
        const double h = 1e-4;
        for (int k = 0; k < 4; ++k) {
            const double u1 = U1(rng), u2 = U2(rng);
            for (const ScalarField& f : ds.surface.comp) {
                const Jet j = f.jet(u1, u2);
                const double d1fd = (f.value(u1 + h, u2) - f.value(u1 - h, u2)) / (2 * h);
                const double d2fd = (f.value(u1, u2 + h) - f.value(u1, u2 - h)) / (2 * h);
                const double d11fd =
                    (f.value(u1 + h, u2) - 2 * f.value(u1, u2) + f.value(u1 - h, u2)) / (h * h);
                const double scale = std::max(1.0, std::abs(j.value()));
                CHECK(std::abs(j.deriv(1, 0) - d1fd) < 1e-6 * scale);
                CHECK(std::abs(j.deriv(0, 1) - d2fd) < 1e-6 * scale);
                CHECK(std::abs(j.deriv(2, 0) - d11fd) < 1e-5 * scale);
            }
        }
    }
}

TEST_CASE("Gauss-Codazzi residuals vanish on presets and flag broken constants", "[diffgeo]") {
    const DupinSurface cyl = build_dupin(preset_surface("cylinder-euclidean"));
    const auto rc = gauss_codazzi_residuals(cyl.surface, 0.3, 0.5);
    CHECK(std::abs(rc.r_cod1) < 1e-14);
    CHECK(std::abs(rc.r_cod2) < 1e-14);
    CHECK(std::abs(rc.r_gauss) < 1e-14);

    const DupinSurface ex1 = build_dupin(preset_surface("ex1-a"));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const auto r = gauss_codazzi_residuals(ex1.surface, -1 + 0.5 * i, -1 + 0.5 * j);
            CHECK(std::abs(r.r_cod1) < 1e-9);
            CHECK(std::abs(r.r_cod2) < 1e-9);
            CHECK(std::abs(r.r_gauss) < 1e-9);
        }

    // a12 perturbed by 0.1: the assembled map stops being eps-isothermic and
    // the Gauss equation fails at the 1e-3 level
    DupinSpec broken = preset_surface("ex1-a");
    broken.constants["a12"] += 0.1;
    auto forms = detail::case_forms(broken);
    Surface s;
    s.sig = broken.sig;
    s.domain = broken.domain;
    {
        const int e1 = broken.sig.e1, e2 = broken.sig.e2;
        const double h10 = forms.h1(Jet::constant(0)).value();
        const double h20 = forms.h2(Jet::constant(0)).value();
        const double h1p0 = forms.h1(Jet::variable1(0)).deriv(1, 0);
        const double h2p0 = forms.h2(Jet::variable1(0)).deriv(1, 0);
        const double den = h20 - h10;
        const Vec3d v1 = Vec3d{-e1 * h1p0, -e2 * h2p0, -h20 - forms.b1 * den} * (double(e1) / den);
        const OdeCurve G1 = linear_ode_solution(e1 * forms.b1, {0, 0, 1}, {1, 0, 0}, v1);
        const OdeCurve G2 =
            linear_ode_solution(e2 * forms.b2, {0, 0, 1}, {0, 1, 0}, v1 * double(-e1 * e2));
        auto h1 = forms.h1;
        auto h2 = forms.h2;
        for (int k = 0; k < 3; ++k)
            s.comp[k] = ScalarField([=](const Jet& a, const Jet& b) {
                const Vec3j g1 = G1.jet(a), g2 = G2.jet(b);
                const Jet num = (k == 0 ? g2.x - g1.x : k == 1 ? g2.y - g1.y : g2.z - g1.z);
                return num / (h1(a) - h2(b));
            });
    }
    CHECK_THROWS_WITH(gauss_codazzi_residuals(s, 0.5, 0.5), "not eps-isothermic at point");
    double max_gauss = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const auto r = gauss_codazzi_residuals(s, -1 + 0.5 * i, -1 + 0.5 * j,
                                                   std::numeric_limits<double>::infinity());
            max_gauss = std::max(max_gauss, std::abs(r.r_gauss));
        }
    CHECK(max_gauss > 1e-3);
}

TEST_CASE("reduced Gauss residual for curvature pairs", "[diffgeo]") {
    // constant pair (c, 0)
    const ScalarField hc = ScalarField::constant(2.0);
    const ScalarField hz = ScalarField::constant(0.0);
    CHECK(gauss2_residual(hz, hc, 0.1, 0.2, Signature(1, 1, 1)) == 0.0);

    const DupinSurface ex1 = build_dupin(preset_surface("ex1-a"));
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int k = 0; k < 16; ++k)
        CHECK(std::abs(gauss2_residual(ex1.pair.h1, ex1.pair.h2, uni(rng), uni(rng),
                                       ex1.spec.sig)) < 1e-10);

    DupinSpec broken = preset_surface("ex1-a");
    broken.constants["a22"] += 0.1;
    const auto f = detail::case_forms(broken);
    const double r = gauss2_residual(field_of_u1(f.h1), field_of_u2(f.h2), 0.3, 0.4, broken.sig);
    CHECK(std::abs(r) > 1e-3);

    CHECK_THROWS_WITH(gauss2_residual(ScalarField::constant(1.0), ScalarField::constant(1.0), 0,
                                      0, Signature(1, 1, 1)),
                      "umbilic point");
}

TEST_CASE("Theorem-style log-derivative identities hold on presets", "[diffgeo]") {
    // omega,12/omega = phi,12 + phi,1 phi,2 and Omega,12/Omega = -phi,12 + phi,1 phi,2
    for (const auto& name : preset_names()) {
        const DupinSurface ds = build_dupin(preset_surface(name));
        const CalapsoPair cp = omega_from_surface(ds.surface);
        const Domain& d = ds.spec.domain;
        for (double t1 : {0.25, 0.7})
            for (double t2 : {0.3, 0.65}) {
                const double u1 = d.lo1 + (d.hi1 - d.lo1) * t1;
                const double u2 = d.lo2 + (d.hi2 - d.lo2) * t2;
                const FrameJets f = frame_jets(ds.surface, u1, u2);
                const Jet phi = 0.5 * log(f.g11 * double(ds.spec.sig.e1));
                const double rhs_plus = phi.deriv(1, 1) + phi.deriv(1, 0) * phi.deriv(0, 1);
                const double rhs_minus = -phi.deriv(1, 1) + phi.deriv(1, 0) * phi.deriv(0, 1);
                const Jet om = cp.omega.jet(u1, u2);
                const Jet Om = cp.Omega.jet(u1, u2);
                CHECK(std::abs(om.deriv(1, 1) / om.value() - rhs_plus) < 1e-8);
                CHECK(std::abs(Om.deriv(1, 1) / Om.value() - rhs_minus) < 1e-8);
            }
    }
}
