#pragma once

#include <functional>
#include <utility>

#include "epsiso/jet.hpp"

namespace epsiso {

// Analytic scalar function of (u1, u2), evaluated through jet propagation so
// every partial derivative up to Jet::kOrder comes out exactly. The stored
// callable receives the coordinate seed jets; it may use any jet arithmetic,
// and may extract partials (d1/d2) because it is only ever invoked on seeds.
class ScalarField {
public:
    using Evaluator = std::function<Jet(const Jet& u1, const Jet& u2)>;

    ScalarField() = default;
    explicit ScalarField(Evaluator fn) : fn_(std::move(fn)) {}

    static ScalarField constant(double v) {
        return ScalarField([v](const Jet&, const Jet&) { return Jet::constant(v); });
    }

    bool valid() const { return static_cast<bool>(fn_); }

    Jet jet(double u1, double u2) const { return fn_(Jet::variable1(u1), Jet::variable2(u2)); }

    double value(double u1, double u2) const { return jet(u1, u2).value(); }

    double deriv(double u1, double u2, int a, int b) const { return jet(u1, u2).deriv(a, b); }

private:
    Evaluator fn_;
};

// Single-variable analytic function, used for curvature profiles h_i and the
// components of the frame curves G_i.
using Fn1 = std::function<Jet(const Jet&)>;

inline ScalarField field_of_u1(Fn1 f) {
    return ScalarField([f = std::move(f)](const Jet& u1, const Jet&) { return f(u1); });
}

inline ScalarField field_of_u2(Fn1 f) {
    return ScalarField([f = std::move(f)](const Jet&, const Jet& u2) { return f(u2); });
}

}  // namespace epsiso
