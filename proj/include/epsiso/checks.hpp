#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "epsiso/calapso.hpp"
#include "epsiso/dupin.hpp"
#include "epsiso/residuals.hpp"

namespace epsiso {

struct CheckResult {
    std::string name;
    int n1 = 0, n2 = 0;
    double max_abs = 0;
    double tol = 0;
    bool pass = false;
    long excluded = 0;
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "metric_diagonal",   "conformal_factor", "unit_normal",     "weingarten_defect",
        "weingarten_match",  "dupin_property",   "codazzi_residual", "gauss_residual",
        "gauss2_residual",   "eq5_conservation", "normal_consistency", "constraint_residual",
        "calapso_omega",     "calapso_Omega",    "prop_literal_match"};
    return names;
}

inline bool check_applies(const std::string& name, const DupinSpec& spec) {
    if (name == "prop_literal_match")
        return spec.kase == DupinCase::Ex1 || spec.kase == DupinCase::Ex2 ||
               spec.kase == DupinCase::Ex3;
    return true;
}

inline std::vector<std::string> default_checks(const DupinSpec& spec) {
    std::vector<std::string> out;
    for (const auto& n : check_names())
        if (check_applies(n, spec)) out.push_back(n);
    return out;
}

namespace detail {

inline std::vector<double> grid_axis(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

// Max of |f(u1,u2)| over the grid; f may mark a point excluded.
template <typename F>
CheckResult grid_check(const std::string& name, const DupinSurface& ds, int n1, int n2, double tol,
                       F&& per_point) {
    CheckResult r{name, n1, n2, 0.0, tol, false, 0};
    const auto us = grid_axis(ds.spec.domain.lo1, ds.spec.domain.hi1, n1);
    const auto vs = grid_axis(ds.spec.domain.lo2, ds.spec.domain.hi2, n2);
    for (double u2 : vs)
        for (double u1 : us) {
            bool excluded = false;
            const double val = per_point(u1, u2, excluded);
            if (excluded) {
                ++r.excluded;
                continue;
            }
            r.max_abs = std::max(r.max_abs, std::abs(val));
        }
    r.pass = r.max_abs <= tol;
    return r;
}

inline NormalJet normal_jet_from_bundle(const DupinSurface& ds, double u1, double u2) {
    const Vec3j nj = ds.surface.normal_jets(u1, u2);
    return {value(nj), value(d1(nj)), value(d2(nj))};
}

}  // namespace detail

inline CheckResult run_check(const std::string& name, const DupinSurface& ds, int n1, int n2,
                             Method method = Method::Jet) {
    const Signature sig = ds.spec.sig;
    const auto h1 = [&](double u1) { return ds.forms.h1(Jet::constant(u1)).value(); };
    const auto h2 = [&](double u2) { return ds.forms.h2(Jet::constant(u2)).value(); };

    if (name == "metric_diagonal")
        return detail::grid_check(name, ds, n1, n2, 1e-10, [&](double u1, double u2, bool&) {
            const SurfaceJet j = jet_eval(ds.surface, u1, u2, 1);
            return inner(j.X1, j.X2, sig);
        });

    if (name == "conformal_factor")
        return detail::grid_check(name, ds, n1, n2, 1e-9, [&](double u1, double u2, bool&) {
            const SurfaceJet j = jet_eval(ds.surface, u1, u2, 1);
            const double sep = h1(u1) - h2(u2);
            const double want = 1.0 / (sep * sep);
            const double d11 = inner(j.X1, j.X1, sig) - sig.e1 * want;
            const double d22 = inner(j.X2, j.X2, sig) - sig.e2 * want;
            return std::max(std::abs(d11), std::abs(d22));
        });

    if (name == "unit_normal")
        return detail::grid_check(name, ds, n1, n2, 1e-10, [&](double u1, double u2, bool&) {
            const Vec3d N = value(ds.surface.normal_jets(u1, u2));
            return inner(N, N, sig) - sig.e3;
        });

    if (name == "weingarten_defect")
        return detail::grid_check(name, ds, n1, n2, 1e-8, [&](double u1, double u2, bool&) {
            const SurfaceJet j = jet_eval(ds.surface, u1, u2, 1);
            const auto nj = detail::normal_jet_from_bundle(ds, u1, u2);
            return weingarten_lambdas(j, nj, sig).defect;
        });

    if (name == "weingarten_match")
        return detail::grid_check(name, ds, n1, n2, 1e-7, [&](double u1, double u2, bool&) {
            const SurfaceJet j = jet_eval(ds.surface, u1, u2, 1);
            const auto nj = detail::normal_jet_from_bundle(ds, u1, u2);
            const auto w = weingarten_lambdas(j, nj, sig);
            return std::max(std::abs(w.lambda1 - h2(u2)), std::abs(w.lambda2 - h1(u1)));
        });

    if (name == "dupin_property")
        return detail::grid_check(name, ds, n1, n2, 1e-9, [&](double u1, double u2, bool&) {
            const FrameJets f = frame_jets(ds.surface, u1, u2);
            return std::max(std::abs(f.lam1.deriv(1, 0)), std::abs(f.lam2.deriv(0, 1)));
        });

    if (name == "codazzi_residual")
        return detail::grid_check(name, ds, n1, n2, 1e-8, [&](double u1, double u2, bool&) {
            const auto r = gauss_codazzi_residuals(ds.surface, u1, u2,
                                                   std::numeric_limits<double>::infinity());
            return std::max(std::abs(r.r_cod1), std::abs(r.r_cod2));
        });

    if (name == "gauss_residual")
        return detail::grid_check(name, ds, n1, n2, 1e-8, [&](double u1, double u2, bool&) {
            const auto r = gauss_codazzi_residuals(ds.surface, u1, u2,
                                                   std::numeric_limits<double>::infinity());
            return r.r_gauss;
        });

    if (name == "gauss2_residual")
        return detail::grid_check(name, ds, n1, n2, 1e-10, [&](double u1, double u2, bool&) {
            return gauss2_residual(ds.pair.h1, ds.pair.h2, u1, u2, sig);
        });

    if (name == "eq5_conservation") {
        const Vec3d at0 = theorem_identity_vector(ds, 0.0, 0.0);
        return detail::grid_check(name, ds, n1, n2, 1e-9, [&](double u1, double u2, bool&) {
            return sup_norm(theorem_identity_vector(ds, u1, u2) - at0);
        });
    }

    if (name == "normal_consistency") {
        // overall orientation fixed from the first grid point
        return detail::grid_check(name, ds, n1, n2, 1e-8, [&, orient = 0.0](double u1, double u2,
                                                                            bool&) mutable {
            const FrameJets f = frame_jets(ds.surface, u1, u2);  // bundled normal
            const Vec3j w = pseudo_cross(f.X1, f.X2, sig);
            const Jet q = inner(w, w, sig);
            const Vec3d nc = value(w) / std::sqrt(std::abs(q.value()));
            const Vec3d nb = value(f.N);
            if (orient == 0.0)
                orient = (inner(nb, nc, sig) * sig.e3 >= 0) ? 1.0 : -1.0;
            return sup_norm(nb - nc * orient);
        });
    }

    if (name == "constraint_residual") {
        CheckResult r{name, n1, n2, std::abs(constraint_residual(ds.spec)), 1e-12, false, 0};
        r.pass = r.max_abs <= r.tol;
        return r;
    }

    if (name == "calapso_omega" || name == "calapso_Omega") {
        const CalapsoPair pair = omega_from_surface(ds.surface);
        const ScalarField& field = (name == "calapso_omega") ? pair.omega : pair.Omega;
        const double tol = (method == Method::Jet) ? 1e-9 : 1e-5;
        return detail::grid_check(name, ds, n1, n2, tol,
                                  [&](double u1, double u2, bool& excluded) -> double {
                                      if (method == Method::Jet) {
                                          try {
                                              return calapso_residual(field, u1, u2, sig);
                                          } catch (const std::domain_error&) {
                                              excluded = true;  // zero of the field
                                              return 0.0;
                                          }
                                      }
                                      const auto r =
                                          fd_certified_residual(field, u1, u2, sig, 0.1 * tol);
                                      if (!r) {
                                          excluded = true;
                                          return 0.0;
                                      }
                                      return *r;
                                  });
    }

    if (name == "prop_literal_match") {
        const PropositionId which = ds.spec.kase == DupinCase::Ex1   ? PropositionId::Prop2
                                    : ds.spec.kase == DupinCase::Ex2 ? PropositionId::Prop3
                                                                     : PropositionId::Prop4;
        const ScalarField lit = proposition_field(which, ds.spec);
        const CalapsoPair pair = omega_from_surface(ds.surface);
        return detail::grid_check(name, ds, n1, n2, 1e-12,
                                  [&, orient = 0.0](double u1, double u2, bool&) mutable {
                                      const double a = lit.value(u1, u2);
                                      const double b = pair.omega.value(u1, u2);
                                      if (orient == 0.0) orient = (a * b >= 0) ? 1.0 : -1.0;
                                      return a - orient * b;
                                  });
    }

    throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace epsiso
