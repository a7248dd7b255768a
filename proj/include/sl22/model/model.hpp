#pragma once

#include "sl22/model/params.hpp"
#include "sl22/model/points.hpp"
#include "sl22/model/polys.hpp"
#include "sl22/numkit/random.hpp"
#include "sl22/numkit/residual.hpp"

#include <array>
#include <optional>
#include <utility>

namespace sl22 {

// Coupling data together with the curve and surface polynomials it determines.
template <class R>
class Model {
public:
    using Cx = PrecComplex<R>;

    explicit Model(ModelParams<R> mp);

    const ModelParams<R>& params() const { return mp_; }
    double tolerance() const { return mp_.tolerance; }

    const PolyMV<R>& e1_cleared() const;  // requires g
    const PolyMV<R>& surface_s() const { return s_; }
    const PolyMV<R>& stilde() const { return stilde_; }
    const PolyMV<R>& e2() const { return e2_; }
    const PolyMV<R>& cbar_affine() const { return cbar_affine_; }
    const PolyMV<R>& cbar_homogeneous() const { return cbar_h_; }
    const PolyMV<R>& surface_a() const { return a_; }
    const PolyMV<R>& surface_z() const { return z_; }
    const PolyMV<R>& surface_z_in_c2() const { return z_c2_; }
    const PolyMV<R>& octic_c() const { return octic_; }

private:
    ModelParams<R> mp_;
    std::optional<PolyMV<R>> e1_;
    PolyMV<R> s_, stilde_, e2_, cbar_affine_, cbar_h_, a_, z_, z_c2_, octic_;
};

// Relative magnitude below which a denominator counts as vanishing.
inline constexpr double kDenominatorThreshold = 1e-8;
inline constexpr int kMaxResamples = 50;

template <class R>
ResidualReport e1_residual(const SpectralPoint<R>& sp, const Model<R>& m);

template <class R>
SpectralPoint<R> make_spectral_point(const PrecComplex<R>& xplus, const PrecComplex<R>& xminus,
                                     const PrecComplex<R>& gamma, const ModelParams<R>& mp);

// Solves the cleared E1 for x- (root `branch`); resamples a degenerate x+ up to 50 times.
template <class R>
SpectralPoint<R> sample_e1(const Model<R>& m, Rng& rng, std::optional<PrecComplex<R>> xplus = std::nullopt,
                           std::optional<PrecComplex<R>> gamma = std::nullopt, int branch = 0,
                           int* resamples = nullptr);

template <class R>
ResidualReport surface_s_residual(const SurfacePointS<R>& p, const Model<R>& m);

template <class R>
SpectralPoint<R> chan_map(const SurfacePointS<R>& p, const Model<R>& m);

template <class R>
ResidualReport e2_residual(const PointE2<R>& p, const Model<R>& m);

template <class R>
PointE2<R> sample_e2(const Model<R>& m, Rng& rng, std::optional<PrecComplex<R>> y2 = std::nullopt);

// Point of the ruling over e2 at fibre coordinate t (w = 1).
template <class R>
SurfacePointS<R> sample_s(const Model<R>& m, Rng& rng, std::optional<PrecComplex<R>> t = std::nullopt,
                          std::optional<PointE2<R>> e2 = std::nullopt);

template <class R>
PointStilde<R> phi_map(const SurfacePointS<R>& p, const Model<R>& m);

template <class R>
SurfacePointS<R> phi_inverse(const PointStilde<R>& p, const Model<R>& m);

template <class R>
ResidualReport stilde_residual(const PointStilde<R>& p, const Model<R>& m);

template <class R>
ResidualReport cbar_residual(const PointCbar<R>& p, const Model<R>& m);

template <class R>
PointCbar<R> sample_cbar(const Model<R>& m, Rng& rng, std::optional<PrecComplex<R>> x = std::nullopt);

template <class R>
std::pair<PrecComplex<R>, PrecComplex<R>> mapc_spectral(const PointCbar<R>& p, const Model<R>& m);

template <class R>
ResidualReport surface_a_residual(const PointA<R>& p, const Model<R>& m);

template <class R>
PointA<R> sample_a(const Model<R>& m, Rng& rng);

template <class R>
ResidualReport surface_z_residual(const PointZ<R>& p, const Model<R>& m);

template <class R>
PointZ<R> sample_z(const Model<R>& m, Rng& rng);

// [a:b:bb:c] -> [a^2 : ab : a bb : c^2 - b bb], checked against A.
template <class R>
PointA<R> psi_map(const PointZ<R>& p, const Model<R>& m);

// Projective equality: max |p_i - lambda q_i| / max|p|, lambda from the largest coordinate of q.
template <class R, std::size_t N>
double projective_distance(const std::array<PrecComplex<R>, N>& p, const std::array<PrecComplex<R>, N>& q) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < N; ++i)
        if (abs(q[i]) > abs(q[k])) k = i;
    if (abs(q[k]) == 0) return 1.0;
    PrecComplex<R> lambda = p[k] / q[k];
    R num(0), den(0);
    for (std::size_t i = 0; i < N; ++i) {
        R d = abs(p[i] - lambda * q[i]);
        if (d > num) num = d;
        if (abs(p[i]) > den) den = abs(p[i]);
    }
    return den == 0 ? 1.0 : to_double(num / den);
}

}  // namespace sl22
