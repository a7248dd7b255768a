#pragma once

#include "sl22/model/params.hpp"
#include "sl22/model/points.hpp"
#include "sl22/numkit/poly.hpp"
#include "sl22/numkit/residual.hpp"

#include <array>
#include <vector>

namespace sl22 {

template <class R>
struct JacobiTriple {
    PrecComplex<R> sn, cn, dn;
};

// Descending Landen recursion; |k| > 1 goes through the reciprocal-modulus transform.
template <class R>
JacobiTriple<R> jacobi_sn_cn_dn(const PrecComplex<R>& u, const PrecComplex<R>& k);

template <class R>
struct EllipticContext {
    PrecComplex<R> lambda1, lambda2, Delta, k;
    int branch = 0;
};

// lambda's of the Jacobi form of E2 and the modulus k = Delta/2 +- sqrt(Delta^2/4 - 1).
template <class R>
EllipticContext<R> elliptic_context(const ModelParams<R>& mp, int branch = 0);

// y1 = 2i sqrt(q) cn dn, y2 = sqrt(k/q) sn at argument mu.
template <class R>
PointE2<R> uniformize_e2(const PrecComplex<R>& mu, const EllipticContext<R>& ctx, const ModelParams<R>& mp);

template <class R>
struct JInvariants {
    PrecComplex<R> JE1, JE2, JE3;
};

template <class R>
PrecComplex<R> j_e1(const PrecComplex<R>& q, const PrecComplex<R>& U);
template <class R>
PrecComplex<R> j_e2(const PrecComplex<R>& q, const PrecComplex<R>& U);
template <class R>
PrecComplex<R> j_e3(const PrecComplex<R>& q, const PrecComplex<R>& U);
template <class R>
JInvariants<R> j_invariants(const ModelParams<R>& mp);

template <class R>
std::vector<PrecComplex<R>> phi2_terms(const PrecComplex<R>& x, const PrecComplex<R>& y);
template <class R>
PrecComplex<R> phi2(const PrecComplex<R>& x, const PrecComplex<R>& y);

// Normalized residual of Phi2[J(E1), J(E2)]; refuses precisions below 128 bits.
template <class R>
ResidualReport isogeny_check(const ModelParams<R>& mp);

// j of y^2 = x^3 + a x + b.
template <class R>
PrecComplex<R> j_from_weierstrass(const PrecComplex<R>& a, const PrecComplex<R>& b);

// j of the Legendre curve y^2 = x(x-1)(x-k^2).
template <class R>
PrecComplex<R> legendre_j(const PrecComplex<R>& k);

// j of the Jacobi quartic y^2 = (1 - x^2)(1 - k^2 x^2).
template <class R>
PrecComplex<R> jacobi_quartic_j(const PrecComplex<R>& k);

template <class R>
std::array<PrecComplex<R>, 2> quartic_invariants(const PrecComplex<R>& a4, const PrecComplex<R>& a3,
                                                  const PrecComplex<R>& a2, const PrecComplex<R>& a1,
                                                  const PrecComplex<R>& a0);

// j of y^2 = a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0.
template <class R>
PrecComplex<R> j_from_quartic(const PrecComplex<R>& a4, const PrecComplex<R>& a3, const PrecComplex<R>& a2,
                              const PrecComplex<R>& a1, const PrecComplex<R>& a0);

// Coefficients of the E3 display y^? = x^3 - A x - B.
template <class R>
struct E3Coefficients {
    PrecComplex<R> A, B;
};
template <class R>
E3Coefficients<R> e3_coefficients(const PrecComplex<R>& q, const PrecComplex<R>& U);

// Quartic y1^2 = a4 y2^4 + a2 y2^2 + a0 of E2.
template <class R>
std::array<PrecComplex<R>, 5> e2_quartic_coefficients(const PrecComplex<R>& q, const PrecComplex<R>& U);

// j of a plane cubic from a smooth point on it.
template <class R>
PrecComplex<R> nagell_cubic_j(const PolyMV<R>& cubic, const std::array<PrecComplex<R>, 3>& pt, double tol = -1);

}  // namespace sl22
