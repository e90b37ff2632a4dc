#pragma once

#include <stdexcept>

namespace epsiso {

// The three metric signs of the ambient space: <x,y> = e1 x1 y1 + e2 x2 y2 + e3 x3 y3.
struct Signature {
    int e1 = 1;
    int e2 = 1;
    int e3 = 1;

    Signature() = default;
    Signature(int s1, int s2, int s3) : e1(s1), e2(s2), e3(s3) {
        if ((e1 != 1 && e1 != -1) || (e2 != 1 && e2 != -1) || (e3 != 1 && e3 != -1))
            throw std::invalid_argument("signature entries must be +1 or -1");
    }

    // eps = e1*e2, the sign entering the Laplacian of the isothermic chart.
    int eps() const { return e1 * e2; }

    bool operator==(const Signature&) const = default;
};

}  // namespace epsiso
