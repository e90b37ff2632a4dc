#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "epsiso/jet.hpp"

namespace epsiso {

// Number a + i b in C_{eps2}, the algebra with i^2 = -eps2: ordinary complex
// numbers for eps2 = +1, split-complex numbers for eps2 = -1. The eps2 tag
// travels with the value so mixed-algebra arithmetic is caught at run time.
template <typename T>
struct PseudoComplex {
    T re{};
    T im{};
    int eps2 = 1;
};

using Pc = PseudoComplex<double>;
using Pcj = PseudoComplex<Jet>;

namespace detail {
inline void require_same_eps2(int a, int b) {
    if (a != b) throw std::invalid_argument("mixed eps2 algebras");
}
}  // namespace detail

template <typename T>
PseudoComplex<T> pc_add(const PseudoComplex<T>& a, const PseudoComplex<T>& b) {
    detail::require_same_eps2(a.eps2, b.eps2);
    return {a.re + b.re, a.im + b.im, a.eps2};
}

template <typename T>
PseudoComplex<T> pc_mul(const PseudoComplex<T>& a, const PseudoComplex<T>& b) {
    detail::require_same_eps2(a.eps2, b.eps2);
    return {a.re * b.re - double(a.eps2) * (a.im * b.im), a.re * b.im + a.im * b.re, a.eps2};
}

// z zbar = re^2 + eps2 im^2, the metric square of the algebra.
template <typename T>
T pc_metric_square(const PseudoComplex<T>& a) {
    return a.re * a.re + double(a.eps2) * (a.im * a.im);
}

template <typename T>
PseudoComplex<T> pc_from(const Pc& c, const T& like) {
    (void)like;
    return {T{} + c.re, T{} + c.im, c.eps2};
}

// Horner evaluation of f(z) = sum coeffs[k] z^k and its derivative in C_{eps2}.
// Coefficients are ascending in degree and must share z's eps2 tag.
template <typename T>
std::pair<PseudoComplex<T>, PseudoComplex<T>> pc_eval_poly(const std::vector<Pc>& coeffs,
                                                           const PseudoComplex<T>& z) {
    if (coeffs.empty()) throw std::invalid_argument("empty polynomial coefficient list");
    for (const Pc& c : coeffs) detail::require_same_eps2(c.eps2, z.eps2);

    PseudoComplex<T> zero{T{}, T{}, z.eps2};
    PseudoComplex<T> value = zero;
    PseudoComplex<T> deriv = zero;
    for (int k = int(coeffs.size()) - 1; k >= 0; --k) {
        deriv = pc_add(pc_mul(deriv, z), value);
        PseudoComplex<T> ck{T{} + coeffs[k].re, T{} + coeffs[k].im, z.eps2};
        value = pc_add(pc_mul(value, z), ck);
    }
    return {value, deriv};
}

}  // namespace epsiso
