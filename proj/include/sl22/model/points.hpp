#pragma once

#include "sl22/numkit/complex.hpp"

#include <array>

namespace sl22 {

template <class R>
struct SpectralPoint {
    PrecComplex<R> xplus, xminus, gamma;
    PrecComplex<R> sqrt_xi_plus, sqrt_xi_minus;  // sqrt(xi + x^+), sqrt(xi + x^-)
};

// Homogeneous [x:y:z:w] on the sextic S.
template <class R>
struct SurfacePointS {
    PrecComplex<R> x, y, z, w;
    std::array<PrecComplex<R>, 4> coords() const { return {x, y, z, w}; }
};

template <class R>
struct PointE2 {
    PrecComplex<R> y1, y2;
};

// Affine point (z = 1) of the symmetric-gauge curve.
template <class R>
struct PointCbar {
    PrecComplex<R> x, y;
};

template <class R>
struct PointA {
    PrecComplex<R> a, b, bb, g;
};

template <class R>
struct PointZ {
    PrecComplex<R> a, b, bb, c;
};

// Homogeneous [x0:x1:x2:x3] on the quartic S~.
template <class R>
using PointStilde = std::array<PrecComplex<R>, 4>;

}  // namespace sl22
