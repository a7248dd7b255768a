#include "sl22/verify/checks.hpp"

#include "sl22/numkit/errors.hpp"

namespace sl22 {

namespace {

template <class R>
using Terms = std::vector<PrecComplex<R>>;

template <class R>
PrecComplex<R> q5_inner(const EntrySet<R>& e, const PrecComplex<R>& q) {
    return (e.gb - q * e.g) * (e.g - q * e.gb) - (e.f - q * e.a) * (e.a - q * e.f);
}

template <class R>
std::array<Terms<R>, 5> generic_terms(const EntrySet<R>& e, const ModelParams<R>& mp) {
    using Cx = PrecComplex<R>;
    const Cx& q = mp.q;
    Cx inner = q5_inner(e, q);
    return {Terms<R>{e.b * e.bb, e.a * e.g, -(e.c * e.cb)},
            Terms<R>{e.bb * e.b, e.f * e.gb, q * e.d * e.db},
            Terms<R>{e.g * e.f, e.a * e.gb, (q + Cx(1) / q) * e.b * e.bb},
            Terms<R>{e.a * e.f, e.g * e.gb, -(e.b * e.b), -(e.bb * e.bb)},
            Terms<R>{inner * inner, -(q * q * mp.U * mp.U * e.c * e.cb * e.d * e.db)}};
}

template <class R>
ResidualReport relative_gap(const PrecComplex<R>& a, const PrecComplex<R>& b, double tol) {
    return residual_from_terms(Terms<R>{a, -b}, tol);
}

}  // namespace

template <class R>
CheckReport identity_suite_generic(const EntrySet<R>& es, const ModelParams<R>& mp, double tol) {
    CheckReport rep;
    rep.name = "identities.generic";
    rep.tolerance = tol;
    for (const auto& t : generic_terms(es, mp)) rep.add(residual_from_terms(t, tol));
    rep.metadata["order"] = "Q1,Q2,Q3,Q4,Q5";
    rep.finalize();
    return rep;
}

template <class R>
CheckReport identity_suite_symmetric(const EntrySet<R>& es, const ModelParams<R>& mp, double tol) {
    using Cx = PrecComplex<R>;
    const Cx& q = mp.q;
    CheckReport rep;
    rep.name = "identities.symmetric";
    rep.tolerance = tol;
    // Qbar1..Qbar4 are Q1..Q4 with cb -> c, db -> d.
    EntrySet<R> s = es;
    s.cb = s.c;
    s.db = s.d;
    auto t = generic_terms(s, mp);
    for (int k = 0; k < 4; ++k) rep.add(residual_from_terms(t[k], tol));
    rep.add(residual_from_terms(Terms<R>{q5_inner(s, q), -(q * mp.U * s.c * s.d)}, tol));
    rep.add(relative_gap(es.cb, es.c, tol));
    rep.add(relative_gap(es.db, es.d, tol));
    rep.metadata["order"] = "Qbar1,Qbar2,Qbar3,Qbar4,Qbar5,cb=c,db=d";
    rep.finalize();
    return rep;
}

template <class R>
CheckReport identity_trials_generic(const Model<R>& m, Rng& rng, int pairs, double tol) {
    CheckReport rep;
    rep.name = "identities.generic";
    rep.tolerance = tol;
    for (int t = 0; t < pairs; ++t) {
        auto e = rational_entries(sample_s(m, rng), sample_s(m, rng), m.params());
        for (double v : identity_suite_generic(e, m.params(), tol).residuals) rep.add(v);
    }
    rep.metadata["pairs"] = std::to_string(pairs);
    rep.metadata["identities"] = "Q1,Q2,Q3,Q4,Q5";
    rep.finalize();
    return rep;
}

template <class R>
CheckReport identity_trials_symmetric(const Model<R>& m, Rng& rng, int pairs, double tol) {
    CheckReport rep;
    rep.name = "identities.symmetric";
    rep.tolerance = tol;
    double worst_generic = 0;
    for (int t = 0; t < pairs; ++t) {
        auto e = symmetric_entries(sample_cbar(m, rng), sample_cbar(m, rng), m.params());
        CheckReport one = identity_suite_symmetric(e, m.params(), tol);
        for (double v : one.residuals) rep.add(v);
        rep.degenerate = rep.degenerate || one.degenerate;
        CheckReport gen = identity_suite_generic(e, m.params(), tol);
        for (double v : gen.residuals) {
            rep.add(v);
            worst_generic = std::max(worst_generic, v);
        }
    }
    rep.metadata["pairs"] = std::to_string(pairs);
    rep.metadata["identities"] = "Qbar1..Qbar5,cb=c,db=d,Q1..Q5";
    rep.metadata["generic_worst"] = std::to_string(worst_generic);
    rep.finalize();
    return rep;
}

#define SL22_INST(R)                                                                                    \
    template CheckReport identity_suite_generic(const EntrySet<R>&, const ModelParams<R>&, double);     \
    template CheckReport identity_suite_symmetric(const EntrySet<R>&, const ModelParams<R>&, double);   \
    template CheckReport identity_trials_generic(const Model<R>&, Rng&, int, double);                   \
    template CheckReport identity_trials_symmetric(const Model<R>&, Rng&, int, double);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
