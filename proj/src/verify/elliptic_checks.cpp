#include "sl22/verify/checks.hpp"

#include "sl22/elliptic/elliptic.hpp"
#include "sl22/numkit/errors.hpp"

namespace sl22 {

namespace {

template <class R>
ResidualReport rel(const PrecComplex<R>& a, const PrecComplex<R>& b, double tol) {
    return residual_from_terms(std::vector<PrecComplex<R>>{a, -b}, tol);
}

}  // namespace

template <class R>
CheckReport isogeny_trials(std::uint64_t seed, int couplings, double tol) {
    using Cx = PrecComplex<R>;
    CheckReport rep;
    rep.name = "isogeny.phi2";
    rep.tolerance = tol;
    Rng rng(derive_seed(seed, "isogeny.couplings"));
    int skipped = 0;
    for (int t = 0; t < couplings; ++t) {
        Cx q = rng.annulus<R>(), g = rng.annulus<R>(0.2, 2.0);
        try {
            auto mp = ModelParams<R>::from_coupling(q, g, Cx(1), tol);
            rep.add(isogeny_check(mp));
        } catch (const DegenerateError&) {
            ++skipped;
            if (skipped > kMaxResamples) throw;
            --t;
        }
    }
    Cx at0 = phi2(Cx(), Cx());
    bool exact0 = at0 == Cx(real_from_string<R>("-157464000000000"));
    rep.metadata["couplings"] = std::to_string(couplings);
    rep.metadata["resampled"] = std::to_string(skipped);
    rep.metadata["phi2(0,0)"] = to_decimal(at0.re, 20);
    rep.finalize(exact0);
    return rep;
}

template <class R>
CheckReport legendre_check(const ModelParams<R>& mp, bool against_e2, double tol) {
    CheckReport rep;
    rep.name = against_e2 ? "elliptic.legendre_e2" : "elliptic.legendre_e1";
    rep.tolerance = tol;
    auto J = j_invariants(mp);
    for (int branch : {0, 1}) {
        auto ctx = elliptic_context(mp, branch);
        rep.add(rel(legendre_j(ctx.k), against_e2 ? J.JE2 : J.JE1, tol));
    }
    rep.metadata["modulus"] = "k^2 = lambda2/lambda1, both branches";
    rep.finalize();
    return rep;
}

template <class R>
CheckReport quartic_j_check(const ModelParams<R>& mp, double tol) {
    CheckReport rep;
    rep.name = "elliptic.quartic_e2";
    rep.tolerance = tol;
    auto J = j_invariants(mp);
    for (int branch : {0, 1}) rep.add(rel(jacobi_quartic_j(elliptic_context(mp, branch).k), J.JE2, tol));
    auto a = e2_quartic_coefficients(mp.q, mp.U);
    rep.add(rel(j_from_quartic(a[0], a[1], a[2], a[3], a[4]), J.JE2, tol));
    rep.metadata["order"] = "jacobi_quartic(k0),jacobi_quartic(k1),e2_quartic";
    rep.finalize();
    return rep;
}

template <class R>
CheckReport e3_reading_check(const ModelParams<R>& mp, double tol) {
    CheckReport rep;
    rep.name = "elliptic.e3_reading";
    rep.tolerance = tol;
    auto e3 = e3_coefficients(mp.q, mp.U);
    PrecComplex<R> J3 = j_e3(mp.q, mp.U);
    ResidualReport minus = rel(j_from_weierstrass(-e3.A, -e3.B), J3, tol);
    ResidualReport plus = rel(j_from_weierstrass(e3.A, e3.B), J3, tol);
    rep.add(minus);
    rep.metadata["reading.x3-Ax-B"] = minus.pass ? "pass" : "fail";
    rep.metadata["reading.x3+Ax+B"] = plus.pass ? "pass" : "fail";
    rep.metadata["reading.x3+Ax+B.residual"] = plus.normalized_text;
    rep.finalize(minus.pass != plus.pass);
    return rep;
}

template <class R>
CheckReport uniformization_check(const Model<R>& m, Rng& rng, int trials, double tol) {
    using Cx = PrecComplex<R>;
    const auto& mp = m.params();
    CheckReport rep;
    rep.name = "elliptic.uniformization";
    rep.tolerance = tol;
    for (int branch : {0, 1}) {
        auto ctx = elliptic_context(mp, branch);
        Cx q = mp.q;
        Cx s = (Cx(4) + Cx(4) * q * q * q * q - q * mp.U * mp.U) / (Cx(4) * q);
        rep.add(rel(ctx.lambda1 + ctx.lambda2, s, tol));
        rep.add(rel(ctx.lambda1 * ctx.lambda2, q * q, tol));
        rep.add(rel(ctx.k + Cx(1) / ctx.k, ctx.Delta, tol));
        rep.add(rel(ctx.k * ctx.k * ctx.lambda1, ctx.lambda2, tol));
        for (int t = 0; t < trials; ++t) {
            Cx mu = rng.gaussian_complex<R>();
            auto f = jacobi_sn_cn_dn(mu, ctx.k);
            rep.add(rel(f.sn * f.sn + f.cn * f.cn, Cx(1), tol));
            rep.add(rel(f.dn * f.dn + ctx.k * ctx.k * f.sn * f.sn, Cx(1), tol));
            rep.add(e2_residual(uniformize_e2(mu, ctx, mp), m));
        }
    }
    rep.metadata["trials"] = std::to_string(trials);
    rep.finalize();
    return rep;
}

#define SL22_INST(R)                                                                          \
    template CheckReport isogeny_trials<R>(std::uint64_t, int, double);                       \
    template CheckReport legendre_check(const ModelParams<R>&, bool, double);                 \
    template CheckReport quartic_j_check(const ModelParams<R>&, double);                      \
    template CheckReport e3_reading_check(const ModelParams<R>&, double);                     \
    template CheckReport uniformization_check(const Model<R>&, Rng&, int, double);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
