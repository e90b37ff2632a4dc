#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "epsiso/dupin.hpp"
#include "epsiso/forms.hpp"
#include "epsiso/pseudo_complex.hpp"
#include "epsiso/scalar_field.hpp"
#include "epsiso/surface.hpp"

namespace epsiso {

enum class Method { Jet, Fd };

inline constexpr double kOmegaZeroTol = 1e-10;

// Pseudo-Calapso residual Lap_eps(w,12 / w) + e2 (w^2),12 from analytic
// fourth-order jets; vanishes to roundoff for exact solutions.
inline double calapso_residual(const ScalarField& w, double u1, double u2, const Signature& sig) {
    const Jet a = w.jet(u1, u2);
    if (std::abs(a.value()) <= kOmegaZeroTol)
        throw std::domain_error("field zero: omega,12/omega undefined");
    const Jet T = a.d1().d2() / a;
    return T.deriv(2, 0) + sig.eps() * T.deriv(0, 2) + sig.e2 * (a * a).deriv(1, 1);
}

struct FdResidual {
    double value = 0;
    double error_estimate = 0;
};

namespace detail {

using PointFn = std::function<double(double, double)>;

// 4th-order central second derivative in one direction.
inline double fd_second(const PointFn& f, double x, double y, double h, int dir) {
    auto at = [&](int k) {
        return dir == 1 ? f(x + k * h, y) : f(x, y + k * h);
    };
    return (-at(2) + 16 * at(1) - 30 * at(0) + 16 * at(-1) - at(-2)) / (12 * h * h);
}

// 4th-order mixed derivative: the 5-point first-derivative stencil nested in
// both directions.
inline double fd_mixed(const PointFn& f, double x, double y, double h) {
    static constexpr int off[4] = {-2, -1, 1, 2};
    static constexpr double wgt[4] = {1.0, -8.0, 8.0, -1.0};
    double acc = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            acc += wgt[i] * wgt[j] * f(x + off[i] * h, y + off[j] * h);
    return acc / (144 * h * h);
}

inline double fd_residual_once(const ScalarField& w, double u1, double u2, const Signature& sig,
                               double h) {
    PointFn wval = [&](double x, double y) {
        const double v = w.value(x, y);
        if (std::abs(v) <= kOmegaZeroTol)
            throw std::domain_error("field zero: omega,12/omega undefined");
        return v;
    };
    PointFn wsq = [&](double x, double y) {
        const double v = w.value(x, y);
        return v * v;
    };
    PointFn T = [&](double x, double y) { return fd_mixed(wval, x, y, h) / wval(x, y); };
    return fd_second(T, u1, u2, h, 1) + sig.eps() * fd_second(T, u1, u2, h, 2) +
           sig.e2 * fd_mixed(wsq, u1, u2, h);
}

}  // namespace detail

// Finite-difference evaluation of the pseudo-Calapso residual, independent of
// the jet path: 4th-order stencils at steps h and h/2 combined by one
// Richardson extrapolation. The step difference serves as a conservative
// error estimate (it bounds both the truncation remainder and the roundoff
// amplification of the stencils).
inline FdResidual calapso_residual_fd(const ScalarField& w, double u1, double u2,
                                      const Signature& sig, double h = 1e-2) {
    const double r1 = detail::fd_residual_once(w, u1, u2, sig, h);
    const double r2 = detail::fd_residual_once(w, u1, u2, sig, h / 2);
    FdResidual out;
    out.value = (16.0 * r2 - r1) / 15.0;
    out.error_estimate = std::abs(r2 - r1) + 1e-13 * std::max(1.0, std::abs(r2));
    return out;
}

// fd residual for certification sweeps: nullopt marks a point excluded, either
// because the stencil hits a zero of the field or because the estimator cannot
// reach the requested accuracy there (the jet path stays binding at such
// points; only the cross-check is skipped).
inline std::optional<double> fd_certified_residual(const ScalarField& w, double u1, double u2,
                                                   const Signature& sig, double accuracy,
                                                   double h = 1e-2) {
    try {
        const FdResidual r = calapso_residual_fd(w, u1, u2, sig, h);
        if (r.error_estimate > accuracy) return std::nullopt;
        return r.value;
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

// The two Calapso solutions attached to an eps-isothermic surface.
struct CalapsoPair {
    ScalarField omega;
    ScalarField Omega;
};

// omega = e1 sqrt2 H e^phi, Omega = e1 sqrt2 H' e^phi with e^phi taken as
// 1/|lambda2 - lambda1| (positive root). The Weingarten coefficients come
// from the surface itself, so for the Dupin constructions these reduce to
// the closed forms up to one global sign.
inline CalapsoPair omega_from_surface(const Surface& s) {
    const double pref = s.sig.e1 * std::numbers::sqrt2;
    auto omega = ScalarField([s, pref](const Jet& U1, const Jet& U2) {
        const FrameJets f = frame_jets(s, U1.value(), U2.value());
        const Jet sep = f.lam2 - f.lam1;
        if (std::abs(sep.value()) <= 1e-8) throw std::domain_error("umbilic point");
        return pref * 0.5 * (f.lam1 + f.lam2) / abs(sep);
    });
    auto Omega = ScalarField([s, pref](const Jet& U1, const Jet& U2) {
        const FrameJets f = frame_jets(s, U1.value(), U2.value());
        const Jet sep = f.lam2 - f.lam1;
        if (std::abs(sep.value()) <= 1e-8) throw std::domain_error("umbilic point");
        return pref * 0.5 * sep / abs(sep);
    });
    return {omega, Omega};
}

enum class PropositionId { Prop2, Prop3, Prop4 };

namespace detail {

inline void require_case(PropositionId which, DupinCase have) {
    const DupinCase want = which == PropositionId::Prop2   ? DupinCase::Ex1
                           : which == PropositionId::Prop3 ? DupinCase::Ex2
                                                           : DupinCase::Ex3;
    if (have != want)
        throw std::invalid_argument("proposition/case mismatch: field for case " +
                                    to_string(want) + ", spec is " + to_string(have));
}

}  // namespace detail

// The literal closed-form solutions of the worked examples. The Ex1 formula
// is built with the corrected signs (numerator 2(lambda2+lambda1), denominator
// 2(lambda2-lambda1)); prop2_field_as_printed below keeps the uncorrected
// variant for the documented negative comparison.
inline ScalarField proposition_field(PropositionId which, const DupinSpec& spec) {
    detail::require_case(which, spec.kase);
    const int e1 = spec.sig.e1, e2 = spec.sig.e2;
    const double pref = e1 * std::numbers::sqrt2 / 2.0;

    if (which == PropositionId::Prop2) {
        const double c = spec.get("c");
        const double a11 = spec.get("a11"), a12 = spec.get("a12");
        const double a21 = spec.get("a21"), a22 = spec.get("a22");
        const Fn1 fg = detail::kernel_profile(a21, a22, -e2, 0.0);  // a21 f + a22 g
        return ScalarField([=](const Jet& u1, const Jet& u2) {
            const Jet q = u1 * u1 * c + u1 * (2.0 * a11) + 2.0 * a12;
            const Jet s2 = fg(u2) * 2.0;
            return pref * (q + s2 - 2.0 * e1 * c) / (q - s2 + 2.0 * e1 * c);
        });
    }

    const double c = spec.get("c"), b = spec.get("b");
    const double bb = b * b + b;
    const Fn1 s1 = detail::kernel_profile(spec.get("a11"), spec.get("a12"), e1 * b, 0.0);
    const Fn1 s2 = detail::kernel_profile(spec.get("a21"), spec.get("a22"), -e2 * (1.0 + b), 0.0);
    return ScalarField([=](const Jet& u1, const Jet& u2) {
        const Jet A = s1(u1);
        const Jet B = s2(u2);
        return pref * ((A + B) * bb - e1 * c * (2.0 * b + 1.0)) / ((A - B) * bb - e1 * c);
    });
}

// The Ex1 solution exactly as printed (the sign of the c-terms and of the
// a22 g term in the denominator disagree with direct substitution); exposed
// only so tests can document the discrepancy.
inline ScalarField prop2_field_as_printed(const DupinSpec& spec) {
    detail::require_case(PropositionId::Prop2, spec.kase);
    const int e1 = spec.sig.e1, e2 = spec.sig.e2;
    const double pref = e1 * std::numbers::sqrt2 / 2.0;
    const double c = spec.get("c");
    const double a11 = spec.get("a11"), a12 = spec.get("a12");
    const double a21 = spec.get("a21"), a22 = spec.get("a22");
    const Fn1 f = detail::kernel_profile(1.0, 0.0, -e2, 0.0);
    const Fn1 g = detail::kernel_profile(0.0, 1.0, -e2, 0.0);
    return ScalarField([=](const Jet& u1, const Jet& u2) {
        const Jet q = u1 * u1 * c + u1 * (2.0 * a11) + 2.0 * a12;
        const Jet fv = f(u2), gv = g(u2);
        const Jet num = q + fv * (2.0 * a21) + gv * (2.0 * a22) + 2.0 * e1 * c;
        const Jet den = q - fv * (2.0 * a21) + gv * (2.0 * a22) - 2.0 * e1 * c;
        return pref * num / den;
    });
}

// eps2-holomorphic polynomial, coefficients ascending in degree.
struct HolomorphicFn {
    std::vector<Pc> coeffs;
    int eps2 = 1;

    bool nonconstant() const {
        for (std::size_t k = 1; k < coeffs.size(); ++k)
            if (coeffs[k].re != 0.0 || coeffs[k].im != 0.0) return true;
        return false;
    }
};

enum class PointStatus { Ok, SingularDenominator, LightlikeDerivative, CausalMismatch };

namespace detail {

template <typename T>
std::pair<T, T> holomorphic_squares(const HolomorphicFn& f, const PseudoComplex<T>& z) {
    auto [fv, fd] = pc_eval_poly(f.coeffs, z);
    return {pc_metric_square(fv), pc_metric_square(fd)};
}

}  // namespace detail

// Admissibility of a chart point for certifying the holomorphic solution
// family against the (eps1 = 1, eps = eps2) equation: excludes the singular
// set 1 + |f|^2 ~ 0, the lightlike set <f',f'> ~ 0, and points where the
// causal type of f' disagrees with eps2. On the mismatched set the field
// satisfies the opposite-sign companion equation instead (regression-tested);
// for eps2 = +1 the mismatch set is empty and this reduces to the singular
// and lightlike exclusions alone.
inline PointStatus holomorphic_point_status(const HolomorphicFn& f, double u1, double u2) {
    const Pc z{u1, u2, f.eps2};
    auto [S, P] = detail::holomorphic_squares(f, z);
    if (std::abs(1.0 + S) < 1e-6) return PointStatus::SingularDenominator;
    if (std::abs(P) < 1e-10) return PointStatus::LightlikeDerivative;
    if ((P > 0 ? 1 : -1) != f.eps2) return PointStatus::CausalMismatch;
    return PointStatus::Ok;
}

// omega = 2 sqrt(2 |<f',f'>|) / (1 + |f|^2) with |f|^2 = Re(f)^2 + eps2 Im(f)^2.
inline ScalarField holomorphic_omega(const HolomorphicFn& f) {
    if (!f.nonconstant()) throw std::invalid_argument("degenerate: omega == 0");
    return ScalarField([f](const Jet& U1, const Jet& U2) {
        const Pcj z{U1, U2, f.eps2};
        auto [S, P] = detail::holomorphic_squares(f, z);
        if (std::abs(1.0 + S.value()) < 1e-6)
            throw std::domain_error("singular point: 1 + |f|^2 vanishes");
        if (std::abs(P.value()) < 1e-10)
            throw std::domain_error("lightlike point: <f',f'> vanishes");
        return 2.0 * sqrt(2.0 * abs(P)) / (1.0 + S);
    });
}

// Chart of the unit sphere <X,X> = eps3 in the metric du1^2 + eps2 du2^2 +
// eps3 du3^2, pulled back through f.
inline Surface sphere_map(const HolomorphicFn& f, int eps3,
                          Domain domain = {-0.75, 0.75, -0.75, 0.75}) {
    if (eps3 != 1 && eps3 != -1) throw std::invalid_argument("eps3 must be +1 or -1");
    Surface s;
    s.sig = Signature(1, f.eps2, eps3);
    s.domain = domain;

    auto denom_jet = [f, eps3](const Jet& U1, const Jet& U2) {
        const Pcj z{U1, U2, f.eps2};
        auto [fv, fd] = pc_eval_poly(f.coeffs, z);
        const Jet S = pc_metric_square(fv);
        const Jet den = 1.0 + double(eps3) * S;
        if (std::abs(den.value()) < 1e-6)
            throw std::domain_error("sphere chart singular: 1 + eps3 <f,f> vanishes");
        return std::make_pair(fv, den);
    };
    s.comp = {ScalarField([=](const Jet& U1, const Jet& U2) {
                  auto [fv, den] = denom_jet(U1, U2);
                  return 2.0 * fv.re / den;
              }),
              ScalarField([=](const Jet& U1, const Jet& U2) {
                  auto [fv, den] = denom_jet(U1, U2);
                  return 2.0 * fv.im / den;
              }),
              ScalarField([=](const Jet& U1, const Jet& U2) {
                  auto [fv, den] = denom_jet(U1, U2);
                  return (den - 2.0) / den;
              })};
    return s;
}

}  // namespace epsiso
