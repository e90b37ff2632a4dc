#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "epsiso/surface.hpp"

namespace epsiso {

// Threshold below which an inner square counts as lightlike/degenerate.
inline constexpr double kLightlikeTol = 1e-14;

struct FundamentalForms {
    double g11 = 0, g12 = 0, g22 = 0;
    Vec3d N{};
    double II11 = 0, II12 = 0, II22 = 0;
    // Conformal exponent, set when the metric is eps-isothermic at the point.
    std::optional<double> phi;
};

// First form, unit normal and second form from a second-order jet.
// Conventions: N = (X,1 x X,2)/sqrt(|<.,.>|) and II_ij = e3 <X,ij, N>.
inline FundamentalForms fundamental_forms(const SurfaceJet& jet, const Signature& sig,
                                          double iso_tol = 1e-8) {
    if (jet.order < 2) throw std::invalid_argument("fundamental_forms needs a jet of order >= 2");

    FundamentalForms f;
    f.g11 = inner(jet.X1, jet.X1, sig);
    f.g12 = inner(jet.X1, jet.X2, sig);
    f.g22 = inner(jet.X2, jet.X2, sig);

    const Vec3d w = pseudo_cross(jet.X1, jet.X2, sig);
    const double q = inner(w, w, sig);
    if (std::abs(q) <= kLightlikeTol) throw std::domain_error("degenerate normal");
    if ((q > 0 ? 1 : -1) != sig.e3) throw std::domain_error("normal causal type mismatch");
    f.N = w / std::sqrt(std::abs(q));

    f.II11 = sig.e3 * inner(jet.X11, f.N, sig);
    f.II12 = sig.e3 * inner(jet.X12, f.N, sig);
    f.II22 = sig.e3 * inner(jet.X22, f.N, sig);

    const double a = f.g11 * sig.e1;
    const double b = f.g22 * sig.e2;
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (a > 0 && std::abs(a - b) <= iso_tol * scale && std::abs(f.g12) <= iso_tol * scale)
        f.phi = 0.5 * std::log(a);
    return f;
}

struct NormalJet {
    Vec3d N, N1, N2;
};

struct WeingartenResult {
    double lambda1 = 0;
    double lambda2 = 0;
    // sup norm of N,i - lambda_i X,i over both directions; vanishes exactly
    // when the parametrization is by lines of curvature.
    double defect = 0;
};

// Diagonal Weingarten coefficients from N,i = lambda_i X,i.
inline WeingartenResult weingarten_lambdas(const SurfaceJet& jet, const NormalJet& nj,
                                           const Signature& sig) {
    const double d1sq = inner(jet.X1, jet.X1, sig);
    const double d2sq = inner(jet.X2, jet.X2, sig);
    if (std::abs(d1sq) <= kLightlikeTol || std::abs(d2sq) <= kLightlikeTol)
        throw std::domain_error("lightlike coordinate direction");

    WeingartenResult r;
    r.lambda1 = inner(nj.N1, jet.X1, sig) / d1sq;
    r.lambda2 = inner(nj.N2, jet.X2, sig) / d2sq;
    r.defect = std::max(sup_norm(nj.N1 - jet.X1 * r.lambda1), sup_norm(nj.N2 - jet.X2 * r.lambda2));
    return r;
}

struct CurvatureScalars {
    double H = 0;   // mean curvature (lambda1 + lambda2)/2
    double Hp = 0;  // skew curvature (lambda2 - lambda1)/2
};

inline CurvatureScalars curvature_scalars(double lambda1, double lambda2) {
    return {(lambda1 + lambda2) / 2.0, (lambda2 - lambda1) / 2.0};
}

// Diagonal metric components and their first partials.
struct MetricDerivs {
    double g11 = 0, g22 = 0;
    double g11_1 = 0, g11_2 = 0;
    double g22_1 = 0, g22_2 = 0;
};

struct ChristoffelSet {
    double G1_11 = 0, G2_11 = 0;
    double G1_12 = 0, G2_12 = 0;
    double G1_22 = 0, G2_22 = 0;
};

// Christoffel symbols of a diagonal metric.
inline ChristoffelSet christoffel(const MetricDerivs& m) {
    if (m.g11 == 0.0 || m.g22 == 0.0) throw std::domain_error("vanishing metric coefficient");
    ChristoffelSet c;
    c.G1_11 = m.g11_1 / (2 * m.g11);
    c.G2_11 = -m.g11_2 / (2 * m.g22);
    c.G1_12 = m.g11_2 / (2 * m.g11);
    c.G2_12 = m.g22_1 / (2 * m.g22);
    c.G1_22 = -m.g22_1 / (2 * m.g11);
    c.G2_22 = m.g22_2 / (2 * m.g22);
    return c;
}

// Jet-level frame of a surface at a point: coordinate derivatives, metric,
// unit normal and the Weingarten coefficients, everything carried as jets so
// derived fields stay differentiable. Uses the bundled analytic normal when
// present (preserving its orientation), else the normalized pseudo-cross.
struct FrameJets {
    Vec3j X, X1, X2;
    Jet g11, g12, g22;
    Vec3j N;
    Jet lam1, lam2;
};

inline FrameJets frame_jets(const Surface& s, double u1, double u2) {
    FrameJets f;
    f.X = s.jets(u1, u2);
    f.X1 = d1(f.X);
    f.X2 = d2(f.X);
    f.g11 = inner(f.X1, f.X1, s.sig);
    f.g12 = inner(f.X1, f.X2, s.sig);
    f.g22 = inner(f.X2, f.X2, s.sig);
    if (std::abs(f.g11.value()) <= kLightlikeTol || std::abs(f.g22.value()) <= kLightlikeTol)
        throw std::domain_error("lightlike coordinate direction");

    if (s.normal) {
        f.N = s.normal_jets(u1, u2);
    } else {
        const Vec3j w = pseudo_cross(f.X1, f.X2, s.sig);
        const Jet q = inner(w, w, s.sig);
        if (std::abs(q.value()) <= kLightlikeTol) throw std::domain_error("degenerate normal");
        if ((q.value() > 0 ? 1 : -1) != s.sig.e3)
            throw std::domain_error("normal causal type mismatch");
        f.N = w / sqrt(abs(q));
    }

    f.lam1 = inner(d1(f.N), f.X1, s.sig) / f.g11;
    f.lam2 = inner(d2(f.N), f.X2, s.sig) / f.g22;
    return f;
}

}  // namespace epsiso
