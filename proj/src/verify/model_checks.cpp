#include "sl22/verify/checks.hpp"

#include "sl22/numkit/errors.hpp"

#include <functional>

namespace sl22 {

namespace {

CheckReport make(const std::string& name, double tol) {
    CheckReport r;
    r.name = name;
    r.tolerance = tol;
    return r;
}

// Runs `body` `trials` times, turning a thrown map inconsistency into a failed residual.
void repeat(CheckReport& rep, int trials, const std::function<void()>& body) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        try {
            body();
        } catch (const MapInconsistencyError& e) {
            rep.add(1.0);
            if (++failures == 1) rep.metadata["first_failure"] = e.what();
        }
    }
    rep.metadata["trials"] = std::to_string(trials);
}

}  // namespace

template <class R>
std::vector<CheckReport> model_checks(const Model<R>& m, Rng& rng, int trials, double tol) {
    using Cx = PrecComplex<R>;
    const auto& mp = m.params();
    std::vector<CheckReport> out;

    CheckReport smp = make("model.samplers", tol);
    repeat(smp, trials, [&] {
        auto s = sample_s(m, rng);
        smp.add(surface_s_residual(s, m));
        auto e2 = sample_e2(m, rng);
        smp.add(e2_residual(e2, m));
        // E2 is even in y1 and y2 separately.
        smp.add(e2_residual(PointE2<R>{-e2.y1, e2.y2}, m));
        smp.add(e2_residual(PointE2<R>{e2.y1, -e2.y2}, m));
        smp.add(cbar_residual(sample_cbar(m, rng), m));
        smp.add(surface_a_residual(sample_a(m, rng), m));
        smp.add(surface_z_residual(sample_z(m, rng), m));
        if (mp.has_g) smp.add(e1_residual(sample_e1(m, rng), m));
    });
    smp.metadata["samplers"] = mp.has_g ? "s,e2,cbar,a,z,e1" : "s,e2,cbar,a,z";
    smp.finalize();
    out.push_back(smp);

    if (mp.has_g) {
        CheckReport chan = make("model.chan", tol);
        repeat(chan, trials, [&] {
            auto s = sample_s(m, rng);
            auto p = chan_map(s, m);
            chan.add(e1_residual(p, m));
            // (x, y) -> (-x, -y) has the same image up to the sign of gamma.
            auto p2 = chan_map(SurfacePointS<R>{-s.x, -s.y, s.z, s.w}, m);
            chan.add(residual_from_terms(std::vector<Cx>{p.xplus, -p2.xplus}, tol));
            chan.add(residual_from_terms(std::vector<Cx>{p.xminus, -p2.xminus}, tol));
            chan.add(residual_from_terms(std::vector<Cx>{p.gamma, p2.gamma}, tol));
        });
        chan.metadata["radical"] = "sqrt(1+xi^2) = i sqrt(g^2 (q-1/q)^2 - 1)";
        chan.finalize();
        out.push_back(chan);

        CheckReport mapc = make("model.mapc", tol);
        repeat(mapc, trials, [&] {
            auto c = sample_cbar(m, rng);
            auto [xp, xm] = mapc_spectral(c, m);
            mapc.add(e1_residual(make_spectral_point(xp, xm, Cx(1), mp), m));
        });
        mapc.finalize();
        out.push_back(mapc);
    }

    CheckReport phi = make("model.phi_roundtrip", tol);
    repeat(phi, trials, [&] {
        auto s = sample_s(m, rng);
        auto st = phi_map(s, m);
        phi.add(stilde_residual(st, m));
        auto back = phi_inverse(st, m);
        phi.add(projective_distance<R, 4>(back.coords(), s.coords()));
        auto again = phi_map(back, m);
        phi.add(projective_distance<R, 4>(again, st));
    });
    phi.finalize();
    out.push_back(phi);

    CheckReport psi = make("model.psi", std::max(tol, 1e-8));
    repeat(psi, trials, [&] {
        auto z = sample_z(m, rng);
        auto img = psi_map(z, m);
        psi.add(surface_a_residual(img, m));
        auto img2 = psi_map(PointZ<R>{z.a, z.b, z.bb, -z.c}, m);
        psi.add(projective_distance<R, 4>(std::array<Cx, 4>{img.a, img.b, img.bb, img.g},
                                          std::array<Cx, 4>{img2.a, img2.b, img2.bb, img2.g}));
    });
    psi.finalize();
    out.push_back(psi);
    return out;
}

#define SL22_INST(R) template std::vector<CheckReport> model_checks(const Model<R>&, Rng&, int, double);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
