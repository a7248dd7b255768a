#pragma once

#include "sl22/numkit/poly.hpp"

#include <utility>

namespace sl22 {

// Which reading of the symmetric-gauge cubic component to build.
enum class CubicReading {
    printed,       // y^3 coefficient -eps*sqrt(q)
    gauge_reduced  // S+ at z = w: y^3 coefficient -sqrt(q)
};

// E1 times q x+ x-, variables (x+, x-).
template <class R>
PolyMV<R> e1_cleared_poly(const PrecComplex<R>& q, const PrecComplex<R>& g);

// Sextic S in (x, y, z, w).
template <class R>
PolyMV<R> surface_s_poly(const PrecComplex<R>& q, const PrecComplex<R>& U);

// Quartic S~ in (x0, x1, x2, x3).
template <class R>
PolyMV<R> stilde_poly(const PrecComplex<R>& q, const PrecComplex<R>& U);

// Jacobi quartic E2 in (y1, y2).
template <class R>
PolyMV<R> e2_poly(const PrecComplex<R>& q, const PrecComplex<R>& U);

// Symmetric-gauge sextic curve in homogeneous (x, y, z).
template <class R>
PolyMV<R> cbar_homogeneous_poly(const PrecComplex<R>& q, const PrecComplex<R>& U);

// The same at z = 1, variables (x, y).
template <class R>
PolyMV<R> cbar_affine_poly(const PrecComplex<R>& q, const PrecComplex<R>& U);

// F1, F2 in (a, b, bb, g); A = F1^2 - (U^2/q)(ag + b bb) F2.
template <class R>
PolyMV<R> f1_poly(const PrecComplex<R>& q);
template <class R>
PolyMV<R> f2_poly(const PrecComplex<R>& q);
template <class R>
PolyMV<R> surface_a_poly(const PrecComplex<R>& q, const PrecComplex<R>& U);

// F3, F4, Z in (a, b, bb, c). With c_squared_variable the fourth variable is c^2 itself.
template <class R>
PolyMV<R> f3_poly(const PrecComplex<R>& q, bool c_squared_variable = false);
template <class R>
PolyMV<R> f4_poly(const PrecComplex<R>& q, bool c_squared_variable = false);
template <class R>
PolyMV<R> surface_z_poly(const PrecComplex<R>& q, const PrecComplex<R>& U, bool c_squared_variable = false);

// Hyperplane slice g = 0 of A as printed, homogeneous in (a, b, bb).
template <class R>
PolyMV<R> octic_c_poly(const PrecComplex<R>& q, const PrecComplex<R>& U);

// The two cubic components S+, S- in (x, y, z, w) on the degeneration locus.
template <class R>
std::pair<PolyMV<R>, PolyMV<R>> sextic_factors(const PrecComplex<R>& q, int eps);

// Cubic component of the symmetric-gauge curve, homogeneous in (x, y, z).
template <class R>
PolyMV<R> cbar_component_poly(const PrecComplex<R>& q, int eps, CubicReading reading);

}  // namespace sl22
