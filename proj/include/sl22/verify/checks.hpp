#pragma once

#include "sl22/model/model.hpp"
#include "sl22/rmatrix/rmatrix.hpp"
#include "sl22/verify/report.hpp"

#include <string>
#include <vector>

namespace sl22 {

enum class YbeBuilder { bk, rational };

// ---- Yang-Baxter, transfer matrices, form equivalence (ybe.cpp)

// Rational triples from sample_s, or BK triples from sample_e1 with independent gammas.
// BK falls back to the 2^6 root-sign assignments when the principal roots fail; metadata records the mask.
template <class R>
CheckReport ybe_trials(YbeBuilder builder, const Model<R>& m, Rng& rng, int trials, double tol);

template <class R>
CheckReport transfer_commutativity(const ModelParams<R>& mp, int sites, const SurfacePointS<R>& p0,
                                   const SurfacePointS<R>& p1, const SurfacePointS<R>& p2, double tol);

template <class R>
CheckReport transfer_trials(const Model<R>& m, Rng& rng, int sites, int pairs, double tol);

// Both readings of the composite slot; passes iff exactly the standard one holds on every pair.
template <class R>
CheckReport form_equivalence_trials(const Model<R>& m, Rng& rng, int pairs, double tol);

// Support size, literal unit entries and invertibility of both assemblies at a sampled pair.
template <class R>
CheckReport rmatrix_structure_check(const Model<R>& m, Rng& rng);

// ---- polynomial identities among the entries (identities.cpp)

template <class R>
CheckReport identity_suite_generic(const EntrySet<R>& es, const ModelParams<R>& mp, double tol);

// Qbar1..Qbar5 plus cb = c and db = d.
template <class R>
CheckReport identity_suite_symmetric(const EntrySet<R>& es, const ModelParams<R>& mp, double tol);

template <class R>
CheckReport identity_trials_generic(const Model<R>& m, Rng& rng, int pairs, double tol);

// Also checks Q1..Q5 on the same entries, which Qbar5 implies by squaring.
template <class R>
CheckReport identity_trials_symmetric(const Model<R>& m, Rng& rng, int pairs, double tol);

// ---- samplers and maps (model_checks.cpp)

template <class R>
std::vector<CheckReport> model_checks(const Model<R>& m, Rng& rng, int trials, double tol);

// ---- elliptic curves (elliptic_checks.cpp)

// Phi2[J(E1), J(E2)] at `couplings` random couplings plus Phi2(0,0); needs >= 128 bits.
template <class R>
CheckReport isogeny_trials(std::uint64_t seed, int couplings, double tol);

// legendre_j(k) against J(E2) as literally required, and against J(E1).
template <class R>
CheckReport legendre_check(const ModelParams<R>& mp, bool against_e2, double tol);

// Jacobi-quartic j and the E2 quartic invariants against J(E2).
template <class R>
CheckReport quartic_j_check(const ModelParams<R>& mp, double tol);

// Two readings of the E3 display; passes iff exactly y^2 = x^3 - A x - B matches J(E3).
template <class R>
CheckReport e3_reading_check(const ModelParams<R>& mp, double tol);

// Lambda and modulus relations, sn/cn/dn identities, uniformized points on E2.
template <class R>
CheckReport uniformization_check(const Model<R>& m, Rng& rng, int trials, double tol);

// ---- degenerations (degenerations.cpp)

// S against Sbar+ Sbar- at U = u_scale * subm_u(q, eps).
template <class R>
CheckReport sextic_factorization_check(const PrecComplex<R>& q, int eps, double u_scale, double tol);

template <class R>
CheckReport a_square_check(const PrecComplex<R>& q);

// Points of the cubic component (solved for z^2) tested against Cbar at U = subm_u(q, eps).
template <class R>
CheckReport cbar_component_check(const PrecComplex<R>& q, int eps, CubicReading reading, Rng& rng, int trials,
                                 double tol);

// eps = -1 -> 1728, eps = +1 -> 64(q^2+3)^3(3q^2+1)^3 / ((q^2-1)^4 (q^2+1)^2).
template <class R>
CheckReport cubic_j_check(const PrecComplex<R>& q, int eps, double tol);

// ---- S~ from the Qtilde5 quadrature (appendix_b.cpp)

template <class R>
PolyMV<R> qtilde5_poly(const PrecComplex<R>& q, const PrecComplex<R>& U);  // vars (a, f, g, gb)

struct AppendixBResult {
    CheckReport exponent;   // exactly one exponent variant vanishes
    CheckReport rescaling;  // passing quartic equals S~ after rescaling
    CheckReport two_ways;   // Qtilde5 printed vs rebuilt from Q1..Q3
};

template <class R>
AppendixBResult appendix_b_pipeline(const Model<R>& m, Rng& rng, int trials, double tol);

}  // namespace sl22
