#pragma once

#include "sl22/model/model.hpp"
#include "sl22/model/params.hpp"
#include "sl22/model/points.hpp"
#include "sl22/numkit/linalg.hpp"
#include "sl22/numkit/residual.hpp"

#include <array>
#include <utility>
#include <vector>

namespace sl22 {

template <class R>
struct AmplitudeSet {
    PrecComplex<R> A, B, Bb, C, Cb, D, Db, F, G;
};

template <class R>
struct EntrySet {
    PrecComplex<R> a, b, bb, c, cb, d, db, f, g, gb;
};

// 16x16 matrix on C^4 (x) C^4; row/column (i-1)*4 + j for e_i (x) e_j, stored 0-based.
template <class R>
struct RMatrix16 {
    std::array<PrecComplex<R>, 256> entries{};

    const PrecComplex<R>& operator()(int r, int c) const { return entries[static_cast<std::size_t>(r) * 16 + c]; }
    PrecComplex<R>& operator()(int r, int c) { return entries[static_cast<std::size_t>(r) * 16 + c]; }
    CMatrix<R> to_cmatrix() const;
};

// Displayed support of both assemblies, 0-based (row, col), row-major order.
const std::vector<std::pair<int, int>>& rmatrix_support();
inline constexpr int kSupportSize = 36;

// Two readings of the composite slot (13,4) of the rational display.
enum class SlotReading { printed, standard };  // a - f/(q delta1) | a - f/q
const char* to_string(SlotReading r);

template <class R>
AmplitudeSet<R> bk_amplitudes(const SpectralPoint<R>& p1, const SpectralPoint<R>& p2, const ModelParams<R>& mp);

template <class R>
RMatrix16<R> bk_assemble(const AmplitudeSet<R>& amps, const ModelParams<R>& mp);

template <class R>
EntrySet<R> rational_entries(const SurfacePointS<R>& s1, const SurfacePointS<R>& s2, const ModelParams<R>& mp);

template <class R>
RMatrix16<R> rational_assemble(const EntrySet<R>& es, const ModelParams<R>& mp,
                               SlotReading reading = SlotReading::standard);

// rational_entries at z = w = 1.
template <class R>
EntrySet<R> symmetric_entries(const PointCbar<R>& c1, const PointCbar<R>& c2, const ModelParams<R>& mp);

// Convenience: rational_assemble(rational_entries(s1, s2)).
template <class R>
RMatrix16<R> rational_rmatrix(const SurfacePointS<R>& s1, const SurfacePointS<R>& s2, const ModelParams<R>& mp,
                              SlotReading reading = SlotReading::standard);

// Flips the cached radicals: bit 0 negates sqrt(xi + x+), bit 1 negates sqrt(xi + x-).
template <class R>
SpectralPoint<R> with_root_signs(SpectralPoint<R> p, unsigned mask);

// max |M - lambda N| / max |M| over the support, lambda fixed at the largest |N| entry.
template <class R>
ResidualReport proportionality(const RMatrix16<R>& m, const RMatrix16<R>& n, double tol);

struct FormEquivalence {
    ResidualReport report;
    unsigned sign_mask = 0;  // bits (sp1, sm1, sp2, sm2); 0 means principal roots
    bool fallback_used = false;
};

// BK on chan_map(s1), chan_map(s2) against the rational entries of (s1, s2).
template <class R>
FormEquivalence form_equivalence(const SurfacePointS<R>& s1, const SurfacePointS<R>& s2, const Model<R>& m,
                                 SlotReading reading = SlotReading::standard);

// Left-multiplies the dense operator x on (C^4)^n by m acting on sites (i, j).
template <class R>
void apply_two_site(const RMatrix16<R>& m, int i, int j, int n, CMatrix<R>& x);

// max |R12 R13 R23 - R23 R13 R12| / larger max entry, on (C^4)^3.
template <class R>
ResidualReport ybe_residual(const RMatrix16<R>& r12, const RMatrix16<R>& r13, const RMatrix16<R>& r23, double tol);

// Trace over site 0 of R_{0N}(p, p0) ... R_{01}(p, p0); ls[k] = R(p, p0) at site k+1.
template <class R>
CMatrix<R> transfer_matrix(const std::vector<RMatrix16<R>>& ls);

}  // namespace sl22
