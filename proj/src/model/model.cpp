#include "sl22/model/model.hpp"

#include "sl22/numkit/errors.hpp"
#include "sl22/numkit/roots.hpp"

#include <algorithm>

namespace sl22 {

namespace {

template <class R>
void require_nonvanishing(const PrecComplex<R>& value, const R& scale, const char* factor, const char* where) {
    if (!(abs(value) > R(kDenominatorThreshold) * scale)) throw DegenerateError(factor, where);
}

template <class R>
R max_modulus(std::initializer_list<PrecComplex<R>> v) {
    R m(0);
    for (const auto& z : v)
        if (abs(z) > m) m = abs(z);
    return m;
}

}  // namespace

template <class R>
Model<R>::Model(ModelParams<R> mp) : mp_(std::move(mp)) {
    const auto& q = mp_.q;
    const auto& U = mp_.U;
    if (mp_.has_g) e1_ = e1_cleared_poly(q, mp_.g);
    s_ = surface_s_poly(q, U);
    stilde_ = stilde_poly(q, U);
    e2_ = e2_poly(q, U);
    cbar_h_ = cbar_homogeneous_poly(q, U);
    cbar_affine_ = cbar_affine_poly(q, U);
    a_ = surface_a_poly(q, U);
    z_ = surface_z_poly(q, U, false);
    z_c2_ = surface_z_poly(q, U, true);
    octic_ = octic_c_poly(q, U);
}

template <class R>
const PolyMV<R>& Model<R>::e1_cleared() const {
    if (!e1_) throw DomainError("E1 needs the coupling g, which is unavailable for this U override");
    return *e1_;
}

template <class R>
ResidualReport e1_residual(const SpectralPoint<R>& sp, const Model<R>& m) {
    if (abs(sp.xplus) == 0 || abs(sp.xminus) == 0) {
        ResidualReport r;
        r.degenerate = true;
        r.normalized = 1;
        r.normalized_text = "degenerate";
        return r;
    }
    return normalized_residual(m.e1_cleared(), {sp.xplus, sp.xminus}, m.tolerance());
}

template <class R>
SpectralPoint<R> make_spectral_point(const PrecComplex<R>& xplus, const PrecComplex<R>& xminus,
                                     const PrecComplex<R>& gamma, const ModelParams<R>& mp) {
    SpectralPoint<R> sp;
    sp.xplus = xplus;
    sp.xminus = xminus;
    sp.gamma = gamma;
    sp.sqrt_xi_plus = sqrt(mp.xi + xplus);
    sp.sqrt_xi_minus = sqrt(mp.xi + xminus);
    return sp;
}

template <class R>
SpectralPoint<R> sample_e1(const Model<R>& m, Rng& rng, std::optional<PrecComplex<R>> xplus,
                           std::optional<PrecComplex<R>> gamma, int branch, int* resamples) {
    using Cx = PrecComplex<R>;
    const auto& mp = m.params();
    if (!mp.has_g) throw DomainError("sample_e1 needs the coupling g");
    if (branch != 0 && branch != 1) throw DomainError("sample_e1: branch must be 0 or 1");
    const Cx q2 = mp.q * mp.q;
    int tries = 0;
    for (;; ++tries) {
        if (tries > kMaxResamples) throw DegenerateError("leading coefficient -q^2(x+ + xi)", "sample_e1");
        Cx xp = (tries == 0 && xplus) ? *xplus : rng.annulus<R>();
        // a xm^2 + b xm + c = 0
        Cx a = -q2 * (xp + mp.xi);
        Cx b = xp * xp + q2 - Cx::i() * mp.q / mp.g * xp;
        Cx c = mp.xi * xp * xp - xp;
        R scale = abs(q2 * xp) + abs(q2 * mp.xi);
        if (abs(xp) < R(kDenominatorThreshold) || !(abs(a) > R(kDenominatorThreshold) * scale)) continue;
        Cx d = sqrt(b * b - Cx(4) * a * c);
        // Cancellation-free pair: one root from Q/a, the other from c/Q.
        bool same = (b.re * d.re + b.im * d.im) >= 0;
        Cx Q = same ? -(b + d) / Cx(2) : -(b - d) / Cx(2);
        Cx r_from_a = Q / a;
        Cx r_from_c = (abs(Q) > 0) ? c / Q : r_from_a;
        Cx plus_root = same ? r_from_c : r_from_a;    // (-b + d)/(2a)
        Cx minus_root = same ? r_from_a : r_from_c;   // (-b - d)/(2a)
        Cx xm = branch == 0 ? plus_root : minus_root;
        if (abs(xm) < R(kDenominatorThreshold)) continue;
        Cx gam = gamma ? *gamma : rng.annulus<R>();
        if (resamples) *resamples = tries;
        return make_spectral_point(xp, xm, gam, mp);
    }
}

template <class R>
ResidualReport surface_s_residual(const SurfacePointS<R>& p, const Model<R>& m) {
    return normalized_residual(m.surface_s(), {p.x, p.y, p.z, p.w}, m.tolerance());
}

template <class R>
SpectralPoint<R> chan_map(const SurfacePointS<R>& p, const Model<R>& m) {
    using Cx = PrecComplex<R>;
    const auto& mp = m.params();
    if (!mp.has_g) throw DomainError("chan_map needs the coupling g");
    R M = max_modulus<R>({p.x, p.y, p.z, p.w});
    require_nonvanishing(p.x, M, "x", "chan_map");
    require_nonvanishing(p.y, M, "y", "chan_map");
    require_nonvanishing(p.z, M, "z", "chan_map");
    require_nonvanishing(p.w, M, "w", "chan_map");
    Cx th = p.x * p.x - mp.q * p.y * p.y;
    Cx zw = p.z * p.w;
    Cx xp = -mp.xi - mp.sqrt_one_plus_xi2 / mp.sqrt_q * (p.y / p.x) * th / zw;
    Cx xm = -mp.xi - mp.sqrt_one_plus_xi2 / mp.q32 * (p.x / p.y) * th / zw;
    Cx gam = th / (mp.q14 * p.x * p.w);
    SpectralPoint<R> sp = make_spectral_point(xp, xm, gam, mp);
    ResidualReport r = e1_residual(sp, m);
    if (!r.pass) throw MapInconsistencyError("chan_map: image off E1 (normalized residual " + r.normalized_text + ")");
    return sp;
}

template <class R>
ResidualReport e2_residual(const PointE2<R>& p, const Model<R>& m) {
    return normalized_residual(m.e2(), {p.y1, p.y2}, m.tolerance());
}

template <class R>
PointE2<R> sample_e2(const Model<R>& m, Rng& rng, std::optional<PrecComplex<R>> y2) {
    using Cx = PrecComplex<R>;
    const auto& q = m.params().q;
    const auto& U = m.params().U;
    Cx v = y2 ? *y2 : rng.annulus<R>();
    Cx k = Cx(4) - q * U * U + Cx(4) * q * q * q * q;
    Cx s = v * v;
    Cx y1 = sqrt(-(Cx(4) * q - k * s + Cx(4) * q * q * q * s * s));
    return {y1, v};
}

template <class R>
SurfacePointS<R> sample_s(const Model<R>& m, Rng& rng, std::optional<PrecComplex<R>> t,
                          std::optional<PointE2<R>> e2) {
    using Cx = PrecComplex<R>;
    const auto& mp = m.params();
    const Cx& q = mp.q;
    for (int tries = 0; tries <= kMaxResamples; ++tries) {
        PointE2<R> base = (tries == 0 && e2) ? *e2 : sample_e2(m, rng);
        Cx qy = q * q * q * base.y2 * base.y2;
        Cx den = Cx(1) - qy;
        if (!(abs(den) > R(kDenominatorThreshold) * (1 + abs(qy)))) continue;
        Cx tt = t ? *t : rng.annulus<R>();
        Cx z = tt * tt * (base.y1 - Cx::i() * mp.sqrt_q * mp.U * base.y2) * (Cx(1) - q * base.y2 * base.y2) /
               (Cx(2) * Cx::i() * mp.sqrt_q * den);
        return {tt, tt * base.y2, z, Cx(1)};
    }
    throw DegenerateError("1 - q^3 y2^2", "sample_s");
}

template <class R>
PointStilde<R> phi_map(const SurfacePointS<R>& p, const Model<R>& m) {
    using Cx = PrecComplex<R>;
    const auto& mp = m.params();
    const Cx& q = mp.q;
    Cx x2 = p.x * p.x, y2 = p.y * p.y;
    Cx th = x2 - q * y2;
    Cx phi1 = Cx::i() * mp.sqrt_q * (mp.U * th * p.x * p.y + Cx(2) * (x2 - q * q * q * y2) * p.z * p.w);
    Cx phi2 = th * p.w;
    R scale = (abs(x2) + abs(q * y2)) * abs(p.w);
    require_nonvanishing(phi2, scale, "(x^2 - q y^2) w", "phi_map");
    return {phi1 / phi2, p.w, p.x, p.y};
}

template <class R>
SurfacePointS<R> phi_inverse(const PointStilde<R>& p, const Model<R>& m) {
    using Cx = PrecComplex<R>;
    const auto& mp = m.params();
    const Cx& q = mp.q;
    const auto& [x0, x1, x2, x3] = p;
    Cx a = x2 * x2, b = x3 * x3;
    Cx psi1 = Cx(2) * Cx::i() * mp.sqrt_q * x1 * (a - q * q * q * b);
    Cx psi2 = (x0 * x1 - Cx::i() * mp.sqrt_q * mp.U * x2 * x3) * (a - q * b);
    R scale = R(2) * abs(mp.sqrt_q * x1) * (abs(a) + abs(q * q * q * b));
    require_nonvanishing(psi1, scale, "x1 (x2^2 - q^3 x3^2)", "phi_inverse");
    return {x2, x3, psi2 / psi1, x1};
}

template <class R>
ResidualReport stilde_residual(const PointStilde<R>& p, const Model<R>& m) {
    return normalized_residual(m.stilde(), {p[0], p[1], p[2], p[3]}, m.tolerance());
}

template <class R>
ResidualReport cbar_residual(const PointCbar<R>& p, const Model<R>& m) {
    return normalized_residual(m.cbar_affine(), {p.x, p.y}, m.tolerance());
}

template <class R>
PointCbar<R> sample_cbar(const Model<R>& m, Rng& rng, std::optional<PrecComplex<R>> x) {
    using Cx = PrecComplex<R>;
    for (int tries = 0; tries <= kMaxResamples; ++tries) {
        Cx xv = (tries == 0 && x) ? *x : rng.annulus<R>();
        auto coeffs = m.cbar_affine().univariate(1, {xv, Cx()});
        try {
            auto roots = uv_roots(coeffs);
            return {xv, roots[rng.index(static_cast<int>(roots.size()))]};
        } catch (const std::exception&) {
            continue;
        }
    }
    throw DegenerateError("leading y-coefficient", "sample_cbar");
}

template <class R>
std::pair<PrecComplex<R>, PrecComplex<R>> mapc_spectral(const PointCbar<R>& p, const Model<R>& m) {
    using Cx = PrecComplex<R>;
    const auto& mp = m.params();
    if (!mp.has_g) throw DomainError("mapc_spectral needs the coupling g");
    R M = max_modulus<R>({p.x, p.y, Cx(1)});
    require_nonvanishing(p.x, M, "x", "mapc_spectral");
    require_nonvanishing(p.y, M, "y", "mapc_spectral");
    Cx th = p.x * p.x - mp.q * p.y * p.y;
    Cx xp = -mp.xi - mp.sqrt_one_plus_xi2 / mp.sqrt_q * (p.y / p.x) * th;
    Cx xm = -mp.xi - mp.sqrt_one_plus_xi2 / mp.q32 * (p.x / p.y) * th;
    SpectralPoint<R> sp = make_spectral_point(xp, xm, Cx(1), mp);
    ResidualReport r = e1_residual(sp, m);
    if (!r.pass) throw MapInconsistencyError("mapc_spectral: image off E1 (normalized residual " + r.normalized_text + ")");
    return {xp, xm};
}

template <class R>
ResidualReport surface_a_residual(const PointA<R>& p, const Model<R>& m) {
    return normalized_residual(m.surface_a(), {p.a, p.b, p.bb, p.g}, m.tolerance());
}

template <class R>
PointA<R> sample_a(const Model<R>& m, Rng& rng) {
    using Cx = PrecComplex<R>;
    for (int tries = 0; tries <= kMaxResamples; ++tries) {
        Cx a = rng.annulus<R>(), b = rng.annulus<R>(), bb = rng.annulus<R>();
        auto coeffs = m.surface_a().univariate(3, {a, b, bb, Cx()});
        try {
            auto roots = uv_roots(coeffs);
            return {a, b, bb, roots[rng.index(static_cast<int>(roots.size()))]};
        } catch (const std::exception&) {
            continue;
        }
    }
    throw DegenerateError("leading g-coefficient", "sample_a");
}

template <class R>
ResidualReport surface_z_residual(const PointZ<R>& p, const Model<R>& m) {
    return normalized_residual(m.surface_z(), {p.a, p.b, p.bb, p.c}, m.tolerance());
}

template <class R>
PointZ<R> sample_z(const Model<R>& m, Rng& rng) {
    using Cx = PrecComplex<R>;
    for (int tries = 0; tries <= kMaxResamples; ++tries) {
        Cx a = rng.annulus<R>(), b = rng.annulus<R>(), bb = rng.annulus<R>();
        auto coeffs = m.surface_z_in_c2().univariate(3, {a, b, bb, Cx()});
        try {
            auto roots = uv_roots(coeffs);
            Cx c = sqrt(roots[rng.index(static_cast<int>(roots.size()))]);
            if (rng.uniform() < 0.5) c = -c;
            return {a, b, bb, c};
        } catch (const std::exception&) {
            continue;
        }
    }
    throw DegenerateError("leading c^2-coefficient", "sample_z");
}

template <class R>
PointA<R> psi_map(const PointZ<R>& p, const Model<R>& m) {
    PointA<R> img{p.a * p.a, p.a * p.b, p.a * p.bb, p.c * p.c - p.b * p.bb};
    ResidualReport src = surface_z_residual(p, m);
    ResidualReport r = surface_a_residual(img, m);
    // The image may only be as accurate as the source point.
    if (!r.pass && !(r.normalized <= std::max(10 * src.normalized, m.tolerance())))
        throw MapInconsistencyError("psi_map: image off A (normalized residual " + r.normalized_text + ")");
    return img;
}

#define SL22_INST(R)                                                                                           \
    template class Model<R>;                                                                                   \
    template ResidualReport e1_residual(const SpectralPoint<R>&, const Model<R>&);                             \
    template SpectralPoint<R> make_spectral_point(const PrecComplex<R>&, const PrecComplex<R>&,                \
                                                  const PrecComplex<R>&, const ModelParams<R>&);               \
    template SpectralPoint<R> sample_e1(const Model<R>&, Rng&, std::optional<PrecComplex<R>>,                  \
                                        std::optional<PrecComplex<R>>, int, int*);                             \
    template ResidualReport surface_s_residual(const SurfacePointS<R>&, const Model<R>&);                      \
    template SpectralPoint<R> chan_map(const SurfacePointS<R>&, const Model<R>&);                              \
    template ResidualReport e2_residual(const PointE2<R>&, const Model<R>&);                                   \
    template PointE2<R> sample_e2(const Model<R>&, Rng&, std::optional<PrecComplex<R>>);                       \
    template SurfacePointS<R> sample_s(const Model<R>&, Rng&, std::optional<PrecComplex<R>>,                   \
                                       std::optional<PointE2<R>>);                                             \
    template PointStilde<R> phi_map(const SurfacePointS<R>&, const Model<R>&);                                 \
    template SurfacePointS<R> phi_inverse(const PointStilde<R>&, const Model<R>&);                             \
    template ResidualReport stilde_residual(const PointStilde<R>&, const Model<R>&);                           \
    template ResidualReport cbar_residual(const PointCbar<R>&, const Model<R>&);                               \
    template PointCbar<R> sample_cbar(const Model<R>&, Rng&, std::optional<PrecComplex<R>>);                   \
    template std::pair<PrecComplex<R>, PrecComplex<R>> mapc_spectral(const PointCbar<R>&, const Model<R>&);    \
    template ResidualReport surface_a_residual(const PointA<R>&, const Model<R>&);                             \
    template PointA<R> sample_a(const Model<R>&, Rng&);                                                        \
    template ResidualReport surface_z_residual(const PointZ<R>&, const Model<R>&);                             \
    template PointZ<R> sample_z(const Model<R>&, Rng&);                                                        \
    template PointA<R> psi_map(const PointZ<R>&, const Model<R>&);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
