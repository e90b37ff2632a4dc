#pragma once

#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "epsiso/dupin.hpp"

namespace epsiso {

struct MeshStats {
    long vertices = 0;
    long faces = 0;
    long excluded = 0;
};

namespace detail {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

// Samples the surface on an n1 x n2 grid (u2 outer, u1 inner) and writes an
// OBJ quad mesh plus a sibling CSV with the curvature and Calapso data.
// Near-umbilic grid points are dropped together with their faces; the count
// is reported so holes are never silent.
inline MeshStats export_mesh(const DupinSurface& ds, int n1, int n2, const std::string& obj_path,
                             const std::string& csv_path) {
    if (n1 < 2 || n2 < 2) throw std::invalid_argument("grid too small");

    std::ofstream obj(obj_path);
    if (!obj) throw std::runtime_error("cannot open '" + obj_path + "' for writing");
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open '" + csv_path + "' for writing");

    const Domain& d = ds.spec.domain;
    const double pref = ds.spec.sig.e1 * std::numbers::sqrt2;

    std::vector<long> index(static_cast<std::size_t>(n1) * n2, -1);
    MeshStats stats;

    obj << "# dupin surface mesh (" << to_string(ds.spec.kase) << ")\n";
    csv << "u1,u2,x,y,z,lambda1,lambda2,omega\n";

    long next = 1;  // OBJ indices are 1-based
    for (int j = 0; j < n2; ++j) {
        const double u2 = d.lo2 + (d.hi2 - d.lo2) * j / (n2 - 1);
        const double lam1 = ds.forms.h2(Jet::constant(u2)).value();
        for (int i = 0; i < n1; ++i) {
            const double u1 = d.lo1 + (d.hi1 - d.lo1) * i / (n1 - 1);
            const double lam2 = ds.forms.h1(Jet::constant(u1)).value();
            if (std::abs(lam2 - lam1) <= 1e-8) {
                ++stats.excluded;
                continue;
            }
            const Vec3d X = ds.surface.point(u1, u2);
            obj << "v " << detail::fmt17(X.x) << ' ' << detail::fmt17(X.y) << ' '
                << detail::fmt17(X.z) << '\n';
            const double omega = pref * (lam1 + lam2) / (2.0 * std::abs(lam2 - lam1));
            csv << detail::fmt17(u1) << ',' << detail::fmt17(u2) << ',' << detail::fmt17(X.x)
                << ',' << detail::fmt17(X.y) << ',' << detail::fmt17(X.z) << ','
                << detail::fmt17(lam1) << ',' << detail::fmt17(lam2) << ','
                << detail::fmt17(omega) << '\n';
            index[static_cast<std::size_t>(j) * n1 + i] = next++;
            ++stats.vertices;
        }
    }

    for (int j = 0; j + 1 < n2; ++j)
        for (int i = 0; i + 1 < n1; ++i) {
            const long a = index[static_cast<std::size_t>(j) * n1 + i];
            const long b = index[static_cast<std::size_t>(j) * n1 + i + 1];
            const long c = index[static_cast<std::size_t>(j + 1) * n1 + i + 1];
            const long e = index[static_cast<std::size_t>(j + 1) * n1 + i];
            if (a < 0 || b < 0 || c < 0 || e < 0) continue;
            obj << "f " << a << ' ' << b << ' ' << c << ' ' << e << '\n';
            ++stats.faces;
        }

    if (!obj.good() || !csv.good()) throw std::runtime_error("write failure during mesh export");
    return stats;
}

}  // namespace epsiso
