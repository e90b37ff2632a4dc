#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "epsiso/forms.hpp"
#include "epsiso/scalar_field.hpp"
#include "epsiso/surface.hpp"

namespace epsiso {

struct GaussCodazziResiduals {
    double r_cod1 = 0;  // e,2 - (e + eps g) phi,2
    double r_cod2 = 0;  // g,1 - eps (e + eps g) phi,1
    double r_gauss = 0;  // Lap_eps phi + eps2 e g exp(-2 phi)
};

// Structure-equation residuals of an eps-isothermic chart, evaluated with
// analytic jets. II convention: e = e3 <X,11, N>, g = e3 <X,22, N>. With
// iso_tol finite, non-isothermic input is rejected; the perturbation checks
// pass +inf to measure how badly a broken construction violates the system.
inline GaussCodazziResiduals gauss_codazzi_residuals(
    const Surface& s, double u1, double u2,
    double iso_tol = 1e-6) {
    if (!s.domain.contains(u1, u2)) throw std::domain_error("point outside surface domain");

    const FrameJets f = frame_jets(s, u1, u2);
    const double a = f.g11.value() * s.sig.e1;
    const double b = f.g22.value() * s.sig.e2;
    if (a <= 0) throw std::domain_error("not eps-isothermic at point");
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a - b) > iso_tol * scale || std::abs(f.g12.value()) > iso_tol * scale)
        throw std::domain_error("not eps-isothermic at point");

    const Jet phi = 0.5 * log(f.g11 * double(s.sig.e1));
    const Vec3j X11 = d1(f.X1);
    const Vec3j X22 = d2(f.X2);
    const Jet e = double(s.sig.e3) * inner(X11, f.N, s.sig);
    const Jet g = double(s.sig.e3) * inner(X22, f.N, s.sig);

    const int eps = s.sig.eps();
    GaussCodazziResiduals r;
    const double epg = e.value() + eps * g.value();
    r.r_cod1 = e.deriv(0, 1) - epg * phi.deriv(0, 1);
    r.r_cod2 = g.deriv(1, 0) - eps * epg * phi.deriv(1, 0);
    r.r_gauss = phi.deriv(2, 0) + eps * phi.deriv(0, 2) +
                s.sig.e2 * e.value() * g.value() * std::exp(-2.0 * phi.value());
    return r;
}

// Left side of the reduced Gauss equation for a Dupin curvature pair:
//   h1 h2 + e2 h2''(h1 - h2) + e1 h1''(h2 - h1) + e1 (h1')^2 + e2 (h2')^2.
// Zero identically iff the pair is Gauss-compatible.
inline double gauss2_residual(const ScalarField& h1, const ScalarField& h2, double u1, double u2,
                              const Signature& sig) {
    const Jet a = h1.jet(u1, u2);
    const Jet b = h2.jet(u1, u2);
    const double h1v = a.value(), h2v = b.value();
    if (std::abs(h1v - h2v) <= 1e-12) throw std::domain_error("umbilic point");
    const double h1p = a.deriv(1, 0), h1pp = a.deriv(2, 0);
    const double h2p = b.deriv(0, 1), h2pp = b.deriv(0, 2);
    return h1v * h2v + sig.e2 * h2pp * (h1v - h2v) + sig.e1 * h1pp * (h2v - h1v) +
           sig.e1 * h1p * h1p + sig.e2 * h2p * h2p;
}

}  // namespace epsiso
