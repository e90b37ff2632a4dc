#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace epsiso {

// Truncated bivariate Taylor expansion of an analytic function of (u1, u2)
// at a point. Coefficient storage is c(a,b) = (d/du1)^a (d/du2)^b f / (a! b!)
// for a+b <= kOrder, ordered by total degree. Arithmetic and the elementary
// functions below propagate every stored coefficient exactly, so derivatives
// read off a Jet carry no truncation error beyond roundoff.
//
// d1()/d2() shift coefficients down one order; the top band of the result is
// unknown and zero-filled. Chains of extractions therefore lose one valid
// order each, which callers must track.
class Jet {
public:
    static constexpr int kOrder = 6;
    static constexpr int kCoeffs = (kOrder + 1) * (kOrder + 2) / 2;

    Jet() = default;

    static constexpr int index(int a, int b) {
        const int m = a + b;
        return m * (m + 1) / 2 + b;
    }

    static Jet constant(double v) {
        Jet j;
        j.c_[0] = v;
        return j;
    }

    // Seed for the first coordinate: value v, d/du1 = 1.
    static Jet variable1(double v) {
        Jet j;
        j.c_[0] = v;
        j.c_[index(1, 0)] = 1.0;
        return j;
    }

    // Seed for the second coordinate: value v, d/du2 = 1.
    static Jet variable2(double v) {
        Jet j;
        j.c_[0] = v;
        j.c_[index(0, 1)] = 1.0;
        return j;
    }

    double value() const { return c_[0]; }

    // Partial derivative (d/du1)^a (d/du2)^b at the expansion point.
    double deriv(int a, int b) const {
        if (a < 0 || b < 0 || a + b > kOrder)
            throw std::out_of_range("jet derivative order out of range");
        return c_[index(a, b)] * factorial(a) * factorial(b);
    }

    double coeff(int a, int b) const { return c_[index(a, b)]; }
    double& coeff(int a, int b) { return c_[index(a, b)]; }

    // Jet of d/du1 applied to this jet (top band unknown, zero-filled).
    Jet d1() const {
        Jet r;
        for (int a = 0; a + 1 <= kOrder; ++a)
            for (int b = 0; a + 1 + b <= kOrder; ++b)
                r.c_[index(a, b)] = (a + 1) * c_[index(a + 1, b)];
        return r;
    }

    Jet d2() const {
        Jet r;
        for (int a = 0; a <= kOrder; ++a)
            for (int b = 0; a + b + 1 <= kOrder; ++b)
                r.c_[index(a, b)] = (b + 1) * c_[index(a, b + 1)];
        return r;
    }

    Jet operator-() const {
        Jet r;
        for (int i = 0; i < kCoeffs; ++i) r.c_[i] = -c_[i];
        return r;
    }

    Jet& operator+=(const Jet& o) {
        for (int i = 0; i < kCoeffs; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (int i = 0; i < kCoeffs; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Jet& operator+=(double s) {
        c_[0] += s;
        return *this;
    }
    Jet& operator-=(double s) {
        c_[0] -= s;
        return *this;
    }
    Jet& operator*=(double s) {
        for (int i = 0; i < kCoeffs; ++i) c_[i] *= s;
        return *this;
    }
    Jet& operator/=(double s) { return (*this) *= (1.0 / s); }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator+(Jet a, double s) { return a += s; }
    friend Jet operator+(double s, Jet a) { return a += s; }
    friend Jet operator-(Jet a, double s) { return a -= s; }
    friend Jet operator-(double s, const Jet& a) { return (-a) += s; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator/(Jet a, double s) { return a /= s; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        for (int a1 = 0; a1 <= kOrder; ++a1)
            for (int b1 = 0; a1 + b1 <= kOrder; ++b1) {
                const double x = a.c_[index(a1, b1)];
                if (x == 0.0) continue;
                for (int a2 = 0; a1 + b1 + a2 <= kOrder; ++a2)
                    for (int b2 = 0; a1 + b1 + a2 + b2 <= kOrder; ++b2)
                        r.c_[index(a1 + a2, b1 + b2)] += x * b.c_[index(a2, b2)];
            }
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }
    friend Jet operator/(double s, const Jet& b) { return recip(b) * s; }

    // 1/g as a jet; requires g(0) != 0.
    friend Jet recip(const Jet& g) {
        if (g.c_[0] == 0.0)
            throw std::domain_error("jet reciprocal of zero value");
        const double u = 1.0 / g.c_[0];
        Jet dg = g;
        dg.c_[0] = 0.0;
        // 1/g = u * sum_k (-u dg)^k, truncated (exact for jets).
        Jet acc = Jet::constant(1.0);
        for (int k = 0; k < kOrder; ++k) acc = Jet::constant(1.0) - (dg * u) * acc;
        return acc * u;
    }

    // Composition f(g) given the Taylor coefficients fc[k] = f^(k)(g0)/k!.
    static Jet compose(const std::array<double, kOrder + 1>& fc, const Jet& g) {
        Jet dg = g;
        dg.coeff(0, 0) = 0.0;
        Jet acc = Jet::constant(fc[kOrder]);
        for (int k = kOrder - 1; k >= 0; --k) acc = acc * dg + fc[k];
        return acc;
    }

    friend Jet exp(const Jet& g) {
        const double e = std::exp(g.value());
        std::array<double, kOrder + 1> fc{};
        double f = e;
        for (int k = 0; k <= kOrder; ++k) {
            fc[k] = f;
            f /= (k + 1);
        }
        return compose(fc, g);
    }

    friend Jet log(const Jet& g) {
        if (g.value() <= 0.0)
            throw std::domain_error("jet log of non-positive value");
        std::array<double, kOrder + 1> fc{};
        fc[0] = std::log(g.value());
        double p = 1.0;
        for (int k = 1; k <= kOrder; ++k) {
            p /= g.value();
            fc[k] = ((k % 2 == 1) ? 1.0 : -1.0) * p / k;
        }
        return compose(fc, g);
    }

    friend Jet sqrt(const Jet& g) {
        if (g.value() <= 0.0)
            throw std::domain_error("jet sqrt of non-positive value");
        std::array<double, kOrder + 1> fc{};
        fc[0] = std::sqrt(g.value());
        // binomial series: fc[k] = C(1/2,k) g0^(1/2-k)
        for (int k = 1; k <= kOrder; ++k)
            fc[k] = fc[k - 1] * (0.5 - (k - 1)) / (k * g.value());
        return compose(fc, g);
    }

    friend Jet sin(const Jet& g) { return trig(g, std::sin(g.value()), std::cos(g.value()), -1.0); }
    friend Jet cos(const Jet& g) { return trig(g, std::cos(g.value()), -std::sin(g.value()), -1.0); }
    friend Jet sinh(const Jet& g) { return trig(g, std::sinh(g.value()), std::cosh(g.value()), 1.0); }
    friend Jet cosh(const Jet& g) { return trig(g, std::cosh(g.value()), std::sinh(g.value()), 1.0); }

    // |g| at a point where g does not vanish: sign(g0) * g.
    friend Jet abs(const Jet& g) {
        if (g.value() == 0.0)
            throw std::domain_error("jet abs at a zero of the argument");
        return g.value() > 0.0 ? g : -g;
    }

    friend Jet pow(const Jet& g, int n) {
        if (n < 0) return recip(pow(g, -n));
        Jet r = Jet::constant(1.0);
        for (int k = 0; k < n; ++k) r = r * g;
        return r;
    }

private:
    // Functions with f'' = s2 * f (sin/cos for s2 = -1, sinh/cosh for +1).
    static Jet trig(const Jet& g, double f0, double f1, double s2) {
        std::array<double, kOrder + 1> fc{};
        double a = f0, b = f1, fact = 1.0;
        for (int k = 0; k <= kOrder; ++k) {
            fc[k] = a / fact;
            const double next = s2 * a;
            a = b;
            b = next;
            fact *= (k + 1);
        }
        return compose(fc, g);
    }

    static constexpr double factorial(int n) {
        double f = 1.0;
        for (int k = 2; k <= n; ++k) f *= k;
        return f;
    }

    std::array<double, kCoeffs> c_{};
};

}  // namespace epsiso
