#include "sl22/verify/checks.hpp"

#include "sl22/numkit/errors.hpp"

#include <set>

namespace sl22 {

namespace {

template <class R>
std::array<SurfacePointS<R>, 3> surface_triple(const Model<R>& m, Rng& rng) {
    return {sample_s(m, rng), sample_s(m, rng), sample_s(m, rng)};
}

template <class R>
RMatrix16<R> bk_matrix(const SpectralPoint<R>& a, const SpectralPoint<R>& b, const ModelParams<R>& mp) {
    return bk_assemble(bk_amplitudes(a, b, mp), mp);
}

template <class R>
ResidualReport bk_ybe(const std::array<SpectralPoint<R>, 3>& p, unsigned mask, const ModelParams<R>& mp, double tol) {
    auto a = with_root_signs(p[0], mask & 3u);
    auto b = with_root_signs(p[1], (mask >> 2) & 3u);
    auto c = with_root_signs(p[2], (mask >> 4) & 3u);
    return ybe_residual(bk_matrix(a, b, mp), bk_matrix(a, c, mp), bk_matrix(b, c, mp), tol);
}

}  // namespace

template <class R>
CheckReport ybe_trials(YbeBuilder builder, const Model<R>& m, Rng& rng, int trials, double tol) {
    const auto& mp = m.params();
    CheckReport rep;
    rep.name = builder == YbeBuilder::rational ? "ybe.rational" : "ybe.bk";
    rep.tolerance = tol;
    int resampled = 0;
    std::set<unsigned> masks;
    for (int t = 0; t < trials; ++t) {
        try {
            if (builder == YbeBuilder::rational) {
                auto s = surface_triple(m, rng);
                rep.add(ybe_residual(rational_rmatrix(s[0], s[1], mp), rational_rmatrix(s[0], s[2], mp),
                                     rational_rmatrix(s[1], s[2], mp), tol));
            } else {
                std::array<SpectralPoint<R>, 3> p{sample_e1(m, rng), sample_e1(m, rng), sample_e1(m, rng)};
                ResidualReport best = bk_ybe(p, 0, mp, tol);
                unsigned used = 0;
                for (unsigned mask = 1; mask < 64 && !best.pass; ++mask) {
                    ResidualReport r = bk_ybe(p, mask, mp, tol);
                    if (r.normalized < best.normalized) {
                        best = r;
                        used = mask;
                    }
                }
                masks.insert(used);
                rep.add(best);
            }
        } catch (const DegenerateError&) {
            ++resampled;
            if (resampled > kMaxResamples) throw;
            --t;
        }
    }
    rep.metadata["trials"] = std::to_string(trials);
    rep.metadata["resampled"] = std::to_string(resampled);
    if (builder == YbeBuilder::bk) {
        std::string s;
        for (unsigned k : masks) s += (s.empty() ? "" : ",") + std::to_string(k);
        rep.metadata["sign_assignment"] = masks == std::set<unsigned>{0} ? "principal" : s;
    } else {
        rep.metadata["r13_arguments"] = "(p1,p3)";
    }
    rep.finalize();
    return rep;
}

template <class R>
CheckReport transfer_commutativity(const ModelParams<R>& mp, int sites, const SurfacePointS<R>& p0,
                                   const SurfacePointS<R>& p1, const SurfacePointS<R>& p2, double tol) {
    CheckReport rep;
    rep.name = "transfer.N" + std::to_string(sites);
    rep.tolerance = tol;
    std::vector<RMatrix16<R>> l1(sites, rational_rmatrix(p1, p0, mp)), l2(sites, rational_rmatrix(p2, p0, mp));
    CMatrix<R> t1 = transfer_matrix(l1), t2 = transfer_matrix(l2);
    CMatrix<R> a = matmul(t1, t2), b = matmul(t2, t1);
    R worst(0);
    for (std::size_t k = 0; k < a.data.size(); ++k) {
        R d = abs(a.data[k] - b.data[k]);
        if (d > worst) worst = d;
    }
    R scale = max_abs_entry(t1) * max_abs_entry(t2);
    ResidualReport r;
    r.raw = to_double(worst);
    r.scale = to_double(scale);
    if (!(scale > R(kDegenerateScale))) {
        r.degenerate = true;
        r.normalized = worst == 0 ? 0 : 1;
        r.normalized_text = to_decimal(R(r.normalized));
    } else {
        R n = worst / scale;
        r.normalized = to_double(n);
        r.normalized_text = to_decimal(n);
    }
    rep.add(r);
    rep.metadata["sites"] = std::to_string(sites);
    rep.finalize();
    return rep;
}

template <class R>
CheckReport transfer_trials(const Model<R>& m, Rng& rng, int sites, int pairs, double tol) {
    CheckReport rep;
    rep.name = "transfer.N" + std::to_string(sites);
    rep.tolerance = tol;
    for (int t = 0; t < pairs; ++t) {
        auto s = surface_triple(m, rng);
        CheckReport one = transfer_commutativity(m.params(), sites, s[0], s[1], s[2], tol);
        for (double v : one.residuals) rep.add(v);
        rep.degenerate = rep.degenerate || one.degenerate;
    }
    rep.metadata["sites"] = std::to_string(sites);
    rep.metadata["pairs"] = std::to_string(pairs);
    rep.metadata["inhomogeneity"] = "fixed third sampled point";
    rep.finalize();
    return rep;
}

template <class R>
CheckReport form_equivalence_trials(const Model<R>& m, Rng& rng, int pairs, double tol) {
    CheckReport rep;
    rep.name = "rmatrix.form_equivalence";
    rep.tolerance = tol;
    double worst_printed = 0;
    int printed_pass = 0, fallback = 0;
    for (int t = 0; t < pairs; ++t) {
        auto s1 = sample_s(m, rng), s2 = sample_s(m, rng);
        FormEquivalence st = form_equivalence(s1, s2, m, SlotReading::standard);
        FormEquivalence pr = form_equivalence(s1, s2, m, SlotReading::printed);
        rep.add(st.report);
        fallback += st.fallback_used;
        worst_printed = std::max(worst_printed, pr.report.normalized);
        printed_pass += pr.report.pass;
    }
    bool standard_ok = rep.max_residual() < tol && !rep.degenerate;
    bool printed_ok = printed_pass == pairs;
    rep.metadata["pairs"] = std::to_string(pairs);
    rep.metadata["slot_13_4.standard"] = standard_ok ? "pass" : "fail";
    rep.metadata["slot_13_4.printed"] = printed_ok ? "pass" : "fail";
    rep.metadata["slot_13_4.printed_worst"] = std::to_string(worst_printed);
    rep.metadata["slot_13_4.reading"] = standard_ok != printed_ok ? (standard_ok ? to_string(SlotReading::standard)
                                                                                 : to_string(SlotReading::printed))
                                                                  : "ambiguous";
    rep.metadata["sign_fallback_pairs"] = std::to_string(fallback);
    rep.finalize(standard_ok != printed_ok);
    return rep;
}

template <class R>
CheckReport rmatrix_structure_check(const Model<R>& m, Rng& rng) {
    const auto& mp = m.params();
    CheckReport rep;
    rep.name = "rmatrix.structure";
    rep.tolerance = 1e-10;
    auto s1 = sample_s(m, rng), s2 = sample_s(m, rng);
    RMatrix16<R> rat = rational_rmatrix(s1, s2, mp);
    RMatrix16<R> bk = bk_matrix(chan_map(s1, m), chan_map(s2, m), mp);
    std::set<std::pair<int, int>> sup(rmatrix_support().begin(), rmatrix_support().end());
    int nz_rat = 0, nz_bk = 0;
    bool outside_zero = true;
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            bool in = sup.count({r, c}) > 0;
            bool zr = rat(r, c) == PrecComplex<R>(), zb = bk(r, c) == PrecComplex<R>();
            nz_rat += !zr;
            nz_bk += !zb;
            if (!in && (!zr || !zb)) outside_zero = false;
        }
    bool units = bk(5, 5) == PrecComplex<R>(1) && bk(10, 10) == PrecComplex<R>(1);
    bool g_slots = rat(5, 5) == rat(10, 10);
    double cond_rat = condition_estimate(rat.to_cmatrix()), cond_bk = condition_estimate(bk.to_cmatrix());
    rep.add(0.0);
    rep.metadata["support"] = std::to_string(sup.size());
    rep.metadata["nonzero.rational"] = std::to_string(nz_rat);
    rep.metadata["nonzero.bk"] = std::to_string(nz_bk);
    rep.metadata["cond.rational"] = std::to_string(cond_rat);
    rep.metadata["cond.bk"] = std::to_string(cond_bk);
    rep.finalize(static_cast<int>(sup.size()) == kSupportSize && outside_zero && units && g_slots &&
                 cond_rat < 1e10 && cond_bk < 1e10);
    return rep;
}

#define SL22_INST(R)                                                                                          \
    template CheckReport ybe_trials(YbeBuilder, const Model<R>&, Rng&, int, double);                          \
    template CheckReport transfer_commutativity(const ModelParams<R>&, int, const SurfacePointS<R>&,          \
                                                const SurfacePointS<R>&, const SurfacePointS<R>&, double);   \
    template CheckReport transfer_trials(const Model<R>&, Rng&, int, int, double);                            \
    template CheckReport form_equivalence_trials(const Model<R>&, Rng&, int, double);                         \
    template CheckReport rmatrix_structure_check(const Model<R>&, Rng&);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
