#pragma once

#include <algorithm>
#include <cmath>

#include "epsiso/jet.hpp"
#include "epsiso/signature.hpp"

namespace epsiso {

template <typename T>
struct Vec3 {
    T x{};
    T y{};
    T z{};

    Vec3 operator-() const { return {-x, -y, -z}; }
    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

    template <typename S>
    friend Vec3 operator*(const Vec3& a, const S& s) {
        return {a.x * s, a.y * s, a.z * s};
    }
    template <typename S>
    friend Vec3 operator*(const S& s, const Vec3& a) {
        return a * s;
    }
    template <typename S>
    friend Vec3 operator/(const Vec3& a, const S& s) {
        return {a.x / s, a.y / s, a.z / s};
    }
};

using Vec3d = Vec3<double>;
using Vec3j = Vec3<Jet>;

// Signature-weighted inner product e1 ux vx + e2 uy vy + e3 uz vz.
template <typename T>
T inner(const Vec3<T>& u, const Vec3<T>& v, const Signature& sig) {
    return u.x * v.x * double(sig.e1) + u.y * v.y * double(sig.e2) + u.z * v.z * double(sig.e3);
}

// The product fixed by <u x v, t> = det[u v t]; reduces to the Euclidean
// cross product for signature (+,+,+).
template <typename T>
Vec3<T> pseudo_cross(const Vec3<T>& u, const Vec3<T>& v, const Signature& sig) {
    return {(u.y * v.z - u.z * v.y) * double(sig.e1),
            (u.z * v.x - u.x * v.z) * double(sig.e2),
            (u.x * v.y - u.y * v.x) * double(sig.e3)};
}

inline double sup_norm(const Vec3d& v) {
    return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

inline Vec3d value(const Vec3j& v) { return {v.x.value(), v.y.value(), v.z.value()}; }

inline Vec3j d1(const Vec3j& v) { return {v.x.d1(), v.y.d1(), v.z.d1()}; }
inline Vec3j d2(const Vec3j& v) { return {v.x.d2(), v.y.d2(), v.z.d2()}; }

inline Vec3j jet_constant(const Vec3d& v) {
    return {Jet::constant(v.x), Jet::constant(v.y), Jet::constant(v.z)};
}

}  // namespace epsiso
