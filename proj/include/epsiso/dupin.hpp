#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "epsiso/residuals.hpp"
#include "epsiso/scalar_field.hpp"
#include "epsiso/surface.hpp"

namespace epsiso {

// Classified Dupin families. Ex1/Ex2/Ex3 are the b1-branch with b1 = 0,
// -1 < b1 < 0 and b1 > 0; B2Zero/B2General mirror them with the roles of the
// two curvature directions swapped.
enum class DupinCase { Cylinder, Ex1, Ex2, Ex3, B2Zero, B2General };

inline std::string to_string(DupinCase c) {
    switch (c) {
        case DupinCase::Cylinder: return "cylinder";
        case DupinCase::Ex1: return "ex1";
        case DupinCase::Ex2: return "ex2";
        case DupinCase::Ex3: return "ex3";
        case DupinCase::B2Zero: return "b2zero";
        case DupinCase::B2General: return "b2general";
    }
    throw std::logic_error("unreachable");
}

inline DupinCase dupin_case_from_string(const std::string& s) {
    if (s == "cylinder") return DupinCase::Cylinder;
    if (s == "ex1") return DupinCase::Ex1;
    if (s == "ex2") return DupinCase::Ex2;
    if (s == "ex3") return DupinCase::Ex3;
    if (s == "b2zero") return DupinCase::B2Zero;
    if (s == "b2general") return DupinCase::B2General;
    throw std::invalid_argument("unknown Dupin case '" + s + "'");
}

// Case tag plus the constant set and evaluation box defining one classified
// Dupin surface. Constants: c always; b for Ex2/Ex3/B2General; a11..a22 for
// every non-cylinder case.
struct DupinSpec {
    DupinCase kase = DupinCase::Cylinder;
    Signature sig;
    std::map<std::string, double> constants;
    Domain domain;

    double get(const std::string& name) const {
        auto it = constants.find(name);
        if (it == constants.end())
            throw std::invalid_argument("missing constant '" + name + "' for case " + to_string(kase));
        return it->second;
    }
    bool has(const std::string& name) const { return constants.count(name) > 0; }
};

// Curvature profiles of a Dupin surface: h1 = lambda2 depends on u1 only,
// h2 = lambda1 on u2 only.
struct CurvaturePair {
    ScalarField h1;
    ScalarField h2;
};

namespace detail {

// t -> amp_f F(t) + amp_g C(t) + offset with F/C = sinh/cosh of sqrt(kappa) t
// for kappa > 0 and sin/cos of sqrt(-kappa) t for kappa < 0.
inline Fn1 kernel_profile(double amp_f, double amp_g, double kappa, double offset) {
    if (kappa == 0.0) throw std::logic_error("kernel_profile needs kappa != 0");
    const double mu = std::sqrt(std::abs(kappa));
    const bool hyp = kappa > 0;
    return [=](const Jet& t) {
        const Jet a = t * mu;
        const Jet F = hyp ? sinh(a) : sin(a);
        const Jet C = hyp ? cosh(a) : cos(a);
        return F * amp_f + C * amp_g + offset;
    };
}

inline Fn1 quadratic_profile(double half_lead, double lin, double constant) {
    return [=](const Jet& t) { return t * t * half_lead + t * lin + constant; };
}

inline Fn1 constant_profile(double v) {
    return [=](const Jet&) { return Jet::constant(v); };
}

// Closed-form curvature profiles with the ODE constants of the b1-branch
// (h1'' - e1 b1 h1 = c1, h2'' + e2 (1+b1) h2 = -e1 e2 c1). The b2-branch
// cases are expressed through the same data via b1 = -(1+b2), c1 = -e1 e2 c2.
struct CaseForms {
    Fn1 h1;
    Fn1 h2;
    double b1 = 0;
    double b2 = 0;
    double c1 = 0;
};

inline CaseForms case_forms(const DupinSpec& spec) {
    const int e1 = spec.sig.e1, e2 = spec.sig.e2;
    CaseForms f;
    switch (spec.kase) {
        case DupinCase::Cylinder: {
            const double c = spec.get("c");
            if (c == 0.0) throw std::invalid_argument("cylinder needs c != 0");
            f.h1 = constant_profile(0.0);
            f.h2 = constant_profile(c);
            f.b1 = -1.0;
            f.b2 = 0.0;
            f.c1 = 0.0;
            return f;
        }
        case DupinCase::Ex1: {
            const double c = spec.get("c");
            f.h1 = quadratic_profile(c / 2.0, spec.get("a11"), spec.get("a12"));
            f.h2 = kernel_profile(spec.get("a21"), spec.get("a22"), -e2, -e1 * c);
            f.b1 = 0.0;
            f.b2 = -1.0;
            f.c1 = c;
            return f;
        }
        case DupinCase::Ex2:
        case DupinCase::Ex3: {
            const double c = spec.get("c");
            const double b = spec.get("b");
            if (spec.kase == DupinCase::Ex2 && !(b > -1.0 && b < 0.0))
                throw std::invalid_argument("case ex2 requires -1 < b < 0");
            if (spec.kase == DupinCase::Ex3 && !(b > 0.0))
                throw std::invalid_argument("case ex3 requires b > 0");
            f.h1 = kernel_profile(spec.get("a11"), spec.get("a12"), e1 * b, -e1 * c / b);
            f.h2 = kernel_profile(spec.get("a21"), spec.get("a22"), -e2 * (1.0 + b),
                                  -e1 * c / (1.0 + b));
            f.b1 = b;
            f.b2 = -(1.0 + b);
            f.c1 = c;
            return f;
        }
        case DupinCase::B2Zero: {
            const double c = spec.get("c");
            f.h2 = quadratic_profile(c / 2.0, spec.get("a21"), spec.get("a22"));
            f.h1 = kernel_profile(spec.get("a11"), spec.get("a12"), -e1, -e2 * c);
            f.b1 = -1.0;
            f.b2 = 0.0;
            f.c1 = -e1 * e2 * c;
            return f;
        }
        case DupinCase::B2General: {
            const double c = spec.get("c");
            const double b = spec.get("b");
            if (!((b > -1.0 && b < 0.0) || b > 0.0))
                throw std::invalid_argument("case b2general requires -1 < b < 0 or b > 0");
            f.h2 = kernel_profile(spec.get("a21"), spec.get("a22"), e2 * b, -e2 * c / b);
            f.h1 = kernel_profile(spec.get("a11"), spec.get("a12"), -e1 * (1.0 + b),
                                  -e2 * c / (1.0 + b));
            f.b1 = -(1.0 + b);
            f.b2 = b;
            f.c1 = -e1 * e2 * c;
            return f;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

// Left side of the case's admissibility constraint; zero means the pair of
// curvature profiles satisfies the reduced Gauss equation identically.
inline double constraint_residual(const DupinSpec& spec) {
    const int e1 = spec.sig.e1, e2 = spec.sig.e2;
    switch (spec.kase) {
        case DupinCase::Cylinder:
            return 0.0;
        case DupinCase::Ex1: {
            const double c = spec.get("c");
            const double a11 = spec.get("a11"), a12 = spec.get("a12");
            const double a21 = spec.get("a21"), a22 = spec.get("a22");
            return a22 * a22 + e2 * a21 * a21 + e1 * a11 * a11 - 2.0 * e1 * c * a12 - c * c;
        }
        case DupinCase::Ex2: {
            const double c = spec.get("c"), b = spec.get("b");
            const double a11 = spec.get("a11"), a12 = spec.get("a12");
            const double a21 = spec.get("a21"), a22 = spec.get("a22");
            return -b * (e1 * a11 * a11 + a12 * a12) +
                   (e2 * a21 * a21 + a22 * a22) * (1.0 + b) + c * c / (b * (b + 1.0));
        }
        case DupinCase::Ex3: {
            const double c = spec.get("c"), b = spec.get("b");
            const double a11 = spec.get("a11"), a12 = spec.get("a12");
            const double a21 = spec.get("a21"), a22 = spec.get("a22");
            return b * (e1 * a11 * a11 - a12 * a12) +
                   (e2 * a21 * a21 + a22 * a22) * (1.0 + b) + c * c / (b * (b + 1.0));
        }
        case DupinCase::B2Zero: {
            const double c = spec.get("c");
            const double a11 = spec.get("a11"), a12 = spec.get("a12");
            const double a21 = spec.get("a21"), a22 = spec.get("a22");
            return a12 * a12 + e1 * a11 * a11 + e2 * a21 * a21 - 2.0 * e2 * c * a22 - c * c;
        }
        case DupinCase::B2General: {
            const double c = spec.get("c"), b = spec.get("b");
            const double a11 = spec.get("a11"), a12 = spec.get("a12");
            const double a21 = spec.get("a21"), a22 = spec.get("a22");
            if (b > 0.0)
                return b * (e2 * a21 * a21 - a22 * a22) +
                       (e1 * a11 * a11 + a12 * a12) * (1.0 + b) + c * c / (b * (b + 1.0));
            return -b * (e2 * a21 * a21 + a22 * a22) +
                   (e1 * a11 * a11 + a12 * a12) * (1.0 + b) + c * c / (b * (b + 1.0));
        }
    }
    throw std::logic_error("unreachable");
}

inline constexpr double kConstraintTol = 1e-12;

// Initial principal-curvature separation lambda2(0) - lambda1(0); the
// construction degenerates when it vanishes.
inline double initial_separation(const DupinSpec& spec) {
    const auto f = detail::case_forms(spec);
    return f.h1(Jet::constant(0.0)).value() - f.h2(Jet::constant(0.0)).value();
}

// Closed-form curvature profiles of an admissible spec.
inline CurvaturePair curvature_pair(const DupinSpec& spec) {
    const auto f = detail::case_forms(spec);
    const double r = constraint_residual(spec);
    if (std::abs(r) >= kConstraintTol)
        throw std::invalid_argument("constraint violated (residual " + std::to_string(r) + ")");
    return {field_of_u1(f.h1), field_of_u2(f.h2)};
}

// Closed-form solution of G'' - kappa G = v with G(0) = g0, G'(0) = g0p.
struct OdeCurve {
    double kappa = 0;
    Vec3d g0{}, g0p{}, v{};

    Vec3j jet(const Jet& t) const {
        Jet C, S, P;
        if (kappa > 0) {
            const double mu = std::sqrt(kappa);
            C = cosh(t * mu);
            S = sinh(t * mu) / mu;
            P = (C - 1.0) / kappa;
        } else if (kappa < 0) {
            const double mu = std::sqrt(-kappa);
            C = cos(t * mu);
            S = sin(t * mu) / mu;
            P = (C - 1.0) / kappa;
        } else {
            C = Jet::constant(1.0);
            S = t;
            P = t * t * 0.5;
        }
        return {C * g0.x + S * g0p.x + P * v.x, C * g0.y + S * g0p.y + P * v.y,
                C * g0.z + S * g0p.z + P * v.z};
    }

    Vec3d at(double t) const { return value(jet(Jet::variable1(t))); }

    Vec3d deriv(double t) const {
        const Vec3j j = jet(Jet::variable1(t));
        return {j.x.deriv(1, 0), j.y.deriv(1, 0), j.z.deriv(1, 0)};
    }

    Vec3d second(double t) const {
        const Vec3j j = jet(Jet::variable1(t));
        return {j.x.deriv(2, 0), j.y.deriv(2, 0), j.z.deriv(2, 0)};
    }
};

inline OdeCurve linear_ode_solution(double kappa, const Vec3d& g0, const Vec3d& g0p,
                                    const Vec3d& v) {
    if (std::abs(kappa) < 1e-12) kappa = 0.0;
    return OdeCurve{kappa, g0, g0p, v};
}

// Frame data of the Theorem-style assembly: G_i(0) = e3, G_i'(0) = e_i and
// G_i'' - kappa_i G_i = v_i with kappa_i = eps_i b_i.
struct FrameData {
    Vec3d v1{}, v2{};
    OdeCurve G1, G2;
    double kappa1 = 0, kappa2 = 0;
};

struct DupinSurface {
    DupinSpec spec;
    Surface surface;  // carries the construction's unit normal
    CurvaturePair pair;
    FrameData frame;
    double b1 = 0, b2 = 0, c1 = 0;
    detail::CaseForms forms;
};

namespace detail {

// Extremum of a single-variable profile over [lo,hi]: coarse scan plus
// ternary refinement around the bracketing samples.
inline double refine_extremum(const Fn1& h, double lo, double hi, bool want_max) {
    constexpr int n = 2049;
    auto val = [&](double t) {
        const double v = h(Jet::constant(t)).value();
        return want_max ? v : -v;
    };
    int best = 0;
    double bestv = val(lo);
    for (int i = 1; i < n; ++i) {
        const double t = lo + (hi - lo) * i / (n - 1);
        const double v = val(t);
        if (v > bestv) {
            bestv = v;
            best = i;
        }
    }
    double a = lo + (hi - lo) * std::max(0, best - 1) / (n - 1);
    double b = lo + (hi - lo) * std::min(n - 1, best + 1) / (n - 1);
    for (int it = 0; it < 120; ++it) {
        const double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
        if (val(m1) < val(m2))
            a = m1;
        else
            b = m2;
    }
    const double v = val(0.5 * (a + b));
    return want_max ? std::max(v, bestv) : -std::max(v, bestv);
}

// h1 and h2 each depend on one coordinate, so the separation minimum over the
// box is the gap between their value ranges; overlapping ranges mean an exact
// umbilic point inside the domain.
inline void check_umbilic_free(const CaseForms& f, const Domain& dom) {
    const double h1_min = refine_extremum(f.h1, dom.lo1, dom.hi1, false);
    const double h1_max = refine_extremum(f.h1, dom.lo1, dom.hi1, true);
    const double h2_min = refine_extremum(f.h2, dom.lo2, dom.hi2, false);
    const double h2_max = refine_extremum(f.h2, dom.lo2, dom.hi2, true);
    const double gap = std::max(h1_min - h2_max, h2_min - h1_max);
    if (!(gap > 1e-8)) throw std::domain_error("lambda1 = lambda2 on domain");
}

}  // namespace detail

// Assembles the surface X = (G2 - G1)/(h1 - h2) with unit normal
// N = (h1 G2 - h2 G1)/(h1 - h2); the cylinder case returns the explicit
// trigonometric/hyperbolic chart (third component a function of u1).
inline DupinSurface build_dupin(const DupinSpec& spec) {
    const auto f = detail::case_forms(spec);
    const double res = constraint_residual(spec);
    if (std::abs(res) >= kConstraintTol)
        throw std::invalid_argument("constraint violated (residual " + std::to_string(res) + ")");
    detail::check_umbilic_free(f, spec.domain);

    const int e1 = spec.sig.e1, e2 = spec.sig.e2;
    const Vec3d E1{1, 0, 0}, E2{0, 1, 0}, E3{0, 0, 1};

    DupinSurface out;
    out.spec = spec;
    out.pair = {field_of_u1(f.h1), field_of_u2(f.h2)};
    out.b1 = f.b1;
    out.b2 = f.b2;
    out.c1 = f.c1;
    out.forms = f;

    if (spec.kase == DupinCase::Cylinder) {
        const double c = spec.get("c");
        const bool hyp = (e1 == -1);
        auto sinf = [hyp](const Jet& t) { return hyp ? sinh(t) : sin(t); };
        auto cosf = [hyp](const Jet& t) { return hyp ? cosh(t) : cos(t); };
        out.surface.comp = {
            ScalarField([=](const Jet& u1, const Jet&) { return sinf(u1) / c; }),
            ScalarField([=](const Jet&, const Jet& u2) { return u2 / c; }),
            ScalarField([=](const Jet& u1, const Jet&) { return (cosf(u1) - 1.0) / c; })};
        out.surface.normal = {{ScalarField([=](const Jet& u1, const Jet&) { return sinf(u1); }),
                               ScalarField::constant(0.0),
                               ScalarField([=](const Jet& u1, const Jet&) { return cosf(u1); })}};
        out.frame.v1 = Vec3d{};
        out.frame.v2 = Vec3d{};
        out.frame.kappa1 = -e1;
        out.frame.kappa2 = 0.0;
        out.frame.G1 = linear_ode_solution(-e1, E3, E1, Vec3d{});
        out.frame.G2 = linear_ode_solution(0.0, E3, E2, Vec3d{});
    } else {
        const Jet zero = Jet::constant(0.0);
        const double h10 = f.h1(zero).value();
        const double h20 = f.h2(zero).value();
        const double h1p0 = f.h1(Jet::variable1(0.0)).deriv(1, 0);
        const double h2p0 = f.h2(Jet::variable1(0.0)).deriv(1, 0);
        const double denom = h20 - h10;

        const Vec3d v1 = Vec3d{-e1 * h1p0, -e2 * h2p0, -h20 - f.b1 * denom} * (double(e1) / denom);
        const Vec3d v2 = v1 * double(-e1 * e2);
        out.frame.v1 = v1;
        out.frame.v2 = v2;
        out.frame.kappa1 = e1 * f.b1;
        out.frame.kappa2 = e2 * f.b2;
        out.frame.G1 = linear_ode_solution(out.frame.kappa1, E3, E1, v1);
        out.frame.G2 = linear_ode_solution(out.frame.kappa2, E3, E2, v2);

        const OdeCurve G1 = out.frame.G1;
        const OdeCurve G2 = out.frame.G2;
        const Fn1 h1 = f.h1;
        const Fn1 h2 = f.h2;
        auto comp = [=](int k) {
            return ScalarField([=](const Jet& u1, const Jet& u2) {
                const Vec3j a = G1.jet(u1);
                const Vec3j b = G2.jet(u2);
                const Jet num = (k == 0 ? b.x - a.x : k == 1 ? b.y - a.y : b.z - a.z);
                return num / (h1(u1) - h2(u2));
            });
        };
        auto ncomp = [=](int k) {
            return ScalarField([=](const Jet& u1, const Jet& u2) {
                const Vec3j a = G1.jet(u1);
                const Vec3j b = G2.jet(u2);
                const Jet H1 = h1(u1);
                const Jet H2 = h2(u2);
                const Jet num = (k == 0 ? H1 * b.x - H2 * a.x
                                        : k == 1 ? H1 * b.y - H2 * a.y : H1 * b.z - H2 * a.z);
                return num / (H1 - H2);
            });
        };
        out.surface.comp = {comp(0), comp(1), comp(2)};
        out.surface.normal = {{ncomp(0), ncomp(1), ncomp(2)}};
    }

    out.surface.domain = spec.domain;
    out.surface.sig = spec.sig;
    return out;
}

// The conserved combination from the assembly's compatibility identity:
//   v1 h2 + e1(1+b1) h2 G2 + c1 G2 + e1 e2 h2' G2'
// - v1 h1 - e1 b1 h1 G1 - c1 G1 + h1' G1'.
// Constant over the domain for every admissible spec.
inline Vec3d theorem_identity_vector(const DupinSurface& ds, double u1, double u2) {
    const int e1 = ds.spec.sig.e1, e2 = ds.spec.sig.e2;
    const Jet j1 = ds.forms.h1(Jet::variable1(u1));
    const Jet j2 = ds.forms.h2(Jet::variable1(u2));
    const double h1 = j1.value(), h1p = j1.deriv(1, 0);
    const double h2 = j2.value(), h2p = j2.deriv(1, 0);
    const Vec3d G1 = ds.frame.G1.at(u1), G1p = ds.frame.G1.deriv(u1);
    const Vec3d G2 = ds.frame.G2.at(u2), G2p = ds.frame.G2.deriv(u2);
    return ds.frame.v1 * h2 + G2 * (e1 * (1.0 + ds.b1) * h2) + G2 * ds.c1 +
           G2p * (e1 * e2 * h2p) - ds.frame.v1 * h1 - G1 * (e1 * ds.b1 * h1) - G1 * ds.c1 +
           G1p * h1p;
}

// Resolves the designated free constant so the case constraint vanishes.
// The constraint must be affine or quadratic in the free constant; on a tie
// between two real roots of equal magnitude the nonnegative one is taken.
inline DupinSpec solve_constraint(const DupinSpec& spec, const std::string& free_name) {
    static const std::map<DupinCase, std::vector<std::string>> allowed = {
        {DupinCase::Cylinder, {"c"}},
        {DupinCase::Ex1, {"c", "a11", "a12", "a21", "a22"}},
        {DupinCase::Ex2, {"c", "a11", "a12", "a21", "a22"}},
        {DupinCase::Ex3, {"c", "a11", "a12", "a21", "a22"}},
        {DupinCase::B2Zero, {"c", "a11", "a12", "a21", "a22"}},
        {DupinCase::B2General, {"c", "a11", "a12", "a21", "a22"}}};
    const auto& names = allowed.at(spec.kase);
    if (std::find(names.begin(), names.end(), free_name) == names.end())
        throw std::invalid_argument("constant '" + free_name + "' is not solvable for case " +
                                    to_string(spec.kase));

    auto residual_at = [&](double x) {
        DupinSpec t = spec;
        t.constants[free_name] = x;
        return constraint_residual(t);
    };
    const double r0 = residual_at(0.0), r1 = residual_at(1.0), rm1 = residual_at(-1.0);
    const double A = 0.5 * (r1 + rm1) - r0;
    const double B = 0.5 * (r1 - rm1);
    const double C = r0;
    if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C) ||
        std::abs(residual_at(2.0) - (4 * A + 2 * B + C)) > 1e-9 * std::max(1.0, std::abs(C)))
        throw std::invalid_argument("constraint is not polynomial in '" + free_name + "'");

    double root;
    if (std::abs(A) < 1e-14) {
        if (std::abs(B) < 1e-14) {
            if (std::abs(C) >= kConstraintTol)
                throw std::invalid_argument("inadmissible constants");
            root = 0.0;  // constraint independent of the free constant
        } else {
            root = -C / B;
        }
    } else {
        const double disc = B * B - 4 * A * C;
        if (disc < 0) throw std::invalid_argument("inadmissible constants");
        const double sq = std::sqrt(disc);
        const double x1 = (-B + sq) / (2 * A);
        const double x2 = (-B - sq) / (2 * A);
        if (std::abs(x1) < std::abs(x2))
            root = x1;
        else if (std::abs(x2) < std::abs(x1))
            root = x2;
        else
            root = std::max(x1, x2);
    }

    DupinSpec solved = spec;
    solved.constants[free_name] = root;
    if (std::abs(constraint_residual(solved)) >= kConstraintTol)
        throw std::invalid_argument("inadmissible constants");
    if (std::abs(initial_separation(solved)) <= 1e-10)
        throw std::domain_error("degenerate (m1 = 0)");
    return solved;
}

inline std::vector<std::string> preset_names() {
    return {"cylinder-euclidean", "cylinder-lorentz", "ex1-a", "ex2-a", "ex3-a"};
}

// Catalogued specs; domains keep |lambda2 - lambda1| >= 0.25 throughout.
inline DupinSpec preset_surface(const std::string& name) {
    DupinSpec s;
    if (name == "cylinder-euclidean") {
        s.kase = DupinCase::Cylinder;
        s.sig = Signature(1, 1, 1);
        s.constants = {{"c", 1.0}};
        s.domain = {-3.14159265358979323846, 3.14159265358979323846, -2.0, 2.0};
    } else if (name == "cylinder-lorentz") {
        s.kase = DupinCase::Cylinder;
        s.sig = Signature(-1, 1, 1);
        s.constants = {{"c", 1.0}};
        s.domain = {-1.5, 1.5, -2.0, 2.0};
    } else if (name == "ex1-a") {
        s.kase = DupinCase::Ex1;
        s.sig = Signature(1, 1, 1);
        s.constants = {{"c", 1.0}, {"a11", 0.0}, {"a12", 1.5}, {"a21", 0.0}, {"a22", 2.0}};
        s.domain = {-1.0, 1.0, -1.0, 1.0};
    } else if (name == "ex2-a") {
        s.kase = DupinCase::Ex2;
        s.sig = Signature(1, 1, 1);
        s.constants = {{"c", 1.0}, {"b", -0.5}, {"a11", 0.0}, {"a12", 2.0}, {"a21", 0.0}, {"a22", 2.0}};
        s.domain = {-2.0, 2.0, -2.0, 2.0};
    } else if (name == "ex3-a") {
        s.kase = DupinCase::Ex3;
        s.sig = Signature(1, 1, 1);
        s.constants = {{"c", std::sqrt(2.0)},
                       {"b", 1.0},
                       {"a11", 0.0},
                       {"a12", 1.0},
                       {"a21", 0.0},
                       {"a22", 0.0}};
        s.domain = {1.0, 2.0, -1.0, 1.0};
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return s;
}

}  // namespace epsiso
