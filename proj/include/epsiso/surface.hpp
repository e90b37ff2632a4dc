#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "epsiso/scalar_field.hpp"
#include "epsiso/signature.hpp"
#include "epsiso/vec3.hpp"

namespace epsiso {

struct Domain {
    double lo1 = 0.0;
    double hi1 = 0.0;
    double lo2 = 0.0;
    double hi2 = 0.0;

    bool empty() const { return !(lo1 < hi1 && lo2 < hi2); }

    bool contains(double u1, double u2, double slack = 1e-12) const {
        return u1 >= lo1 - slack && u1 <= hi1 + slack && u2 >= lo2 - slack && u2 <= hi2 + slack;
    }
};

// Parametrized surface X(u1,u2) in E^3 with its evaluation box and ambient
// signature. Constructions that come with a closed-form unit normal (the
// Dupin builders, the sphere chart) bundle it so downstream consumers can
// use the intended orientation; otherwise the normalized pseudo-cross of the
// coordinate frame is used.
struct Surface {
    std::array<ScalarField, 3> comp;
    Domain domain;
    Signature sig;
    std::optional<std::array<ScalarField, 3>> normal;

    Vec3j jets(double u1, double u2) const {
        return {comp[0].jet(u1, u2), comp[1].jet(u1, u2), comp[2].jet(u1, u2)};
    }

    Vec3d point(double u1, double u2) const {
        return {comp[0].value(u1, u2), comp[1].value(u1, u2), comp[2].value(u1, u2)};
    }

    Vec3j normal_jets(double u1, double u2) const {
        if (!normal) throw std::logic_error("surface carries no analytic normal");
        return {(*normal)[0].jet(u1, u2), (*normal)[1].jet(u1, u2), (*normal)[2].jet(u1, u2)};
    }
};

// Position and partial derivatives of a surface at a point, to the requested
// order (1..3). Mixed partials are computed once, so symmetry is structural.
struct SurfaceJet {
    int order = 2;
    Vec3d X, X1, X2;
    Vec3d X11, X12, X22;
    Vec3d X111, X112, X122, X222;
};

inline SurfaceJet jet_eval(const Surface& s, double u1, double u2, int order = 2) {
    if (order < 1 || order > 3) throw std::invalid_argument("jet order must be 1..3");
    if (!s.domain.contains(u1, u2)) throw std::domain_error("point outside surface domain");

    const Vec3j J = s.jets(u1, u2);
    auto pick = [&J](int a, int b) -> Vec3d {
        return {J.x.deriv(a, b), J.y.deriv(a, b), J.z.deriv(a, b)};
    };

    SurfaceJet out;
    out.order = order;
    out.X = pick(0, 0);
    out.X1 = pick(1, 0);
    out.X2 = pick(0, 1);
    if (order >= 2) {
        out.X11 = pick(2, 0);
        out.X12 = pick(1, 1);
        out.X22 = pick(0, 2);
    }
    if (order >= 3) {
        out.X111 = pick(3, 0);
        out.X112 = pick(2, 1);
        out.X122 = pick(1, 2);
        out.X222 = pick(0, 3);
    }
    return out;
}

}  // namespace epsiso
