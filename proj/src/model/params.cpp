#include "sl22/model/params.hpp"

#include "sl22/numkit/errors.hpp"

#include <sstream>

namespace sl22 {

std::string CouplingSpec::label() const {
    std::ostringstream os;
    os << "q=" << q_re << (q_im.rfind('-', 0) == 0 ? "" : "+") << q_im << "i";
    if (u) {
        os << ",U=" << u->first << (u->second.rfind('-', 0) == 0 ? "" : "+") << u->second << "i";
    } else {
        auto shorten = [](const std::string& s) { return s.size() > 12 ? s.substr(0, 12) : s; };
        os << ",g=" << shorten(g_re) << (g_im.rfind('-', 0) == 0 ? "" : "+") << shorten(g_im) << "i";
    }
    return os.str();
}

template <class R>
void validate_q(const PrecComplex<R>& q) {
    using Cx = PrecComplex<R>;
    const R thr(1e-12);
    if (abs(q) < thr) throw DomainError("q must be nonzero");
    for (const Cx& bad : {Cx(1), Cx(-1), Cx::i(), -Cx::i()})
        if (abs(q - bad) < thr) throw DomainError("q must avoid the fourth roots of unity");
}

template <class R>
PrecComplex<R> hubbard_u(const PrecComplex<R>& q, const PrecComplex<R>& g) {
    using Cx = PrecComplex<R>;
    if (abs(g) == 0) throw DomainError("hubbard_u: g must be nonzero");
    Cx p = q - Cx(1) / q;
    Cx gp2 = g * g * p * p;
    Cx rad = gp2 - Cx(1);
    if (abs(rad) <= R(1e-12) * (abs(gp2) + 1))
        throw DegenerateError("g^2(q-1/q)^2 - 1", "hubbard_u");
    return sqrt(q) * (Cx(1) - Cx(2) * gp2) / (g * sqrt(rad));
}

template <class R>
PrecComplex<R> subm_u(const PrecComplex<R>& q, int eps) {
    using Cx = PrecComplex<R>;
    if (eps != 1 && eps != -1) throw DomainError("subm_u: eps must be +1 or -1");
    if (abs(q) == 0) throw DomainError("subm_u: q must be nonzero");
    return Cx(2) * (q * q + Cx(eps)) / sqrt(q);
}

template <class R>
std::optional<PrecComplex<R>> coupling_from_hubbard(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    // (U^2 p^2 - 4 q p^4) G^2 + (4 q p^2 - U^2) G - q = 0 with G = g^2.
    Cx p = q - Cx(1) / q;
    Cx p2 = p * p;
    Cx a = U * U * p2 - Cx(4) * q * p2 * p2;
    Cx b = Cx(4) * q * p2 - U * U;
    Cx c = -q;
    std::vector<Cx> G;
    if (abs(a) <= R(1e-14) * (abs(b) + abs(c))) {
        G.push_back(-c / b);
    } else {
        Cx d = sqrt(b * b - Cx(4) * a * c);
        G.push_back((-b + d) / (Cx(2) * a));
        G.push_back((-b - d) / (Cx(2) * a));
    }
    std::optional<Cx> best;
    R best_err(1);
    for (const Cx& Gk : G) {
        Cx r = sqrt(Gk);
        for (const Cx& g : {r, -r}) {
            if (abs(g) == 0) continue;
            try {
                R err = rel_diff(hubbard_u(q, g), U);
                if (!best || err < best_err) {
                    best = g;
                    best_err = err;
                }
            } catch (const std::exception&) {
            }
        }
    }
    if (!best || best_err > R(1e-6)) return std::nullopt;
    return best;
}

namespace {

template <class R>
void fill_radicals(ModelParams<R>& mp) {
    using Cx = PrecComplex<R>;
    mp.sqrt_q = sqrt(mp.q);
    mp.q14 = exp(log(mp.q) / Cx(4));
    mp.q32 = mp.sqrt_q * mp.sqrt_q * mp.sqrt_q;
    mp.delta1 = -mp.delta / mp.q;
    if (mp.has_g) {
        // i*sqrt(g^2(q-1/q)^2 - 1) squares to 1 + xi^2 and equals
        // i sqrt(q)(1 + 2 xi^2)/(g U), the branch on which CHAN lands on E1.
        Cx p = mp.q - Cx(1) / mp.q;
        mp.sqrt_one_plus_xi2 = Cx::i() * sqrt(mp.g * mp.g * p * p - Cx(1));
    } else {
        mp.sqrt_one_plus_xi2 = Cx();
    }
}

}  // namespace

template <class R>
ModelParams<R> ModelParams<R>::from_coupling(const Cx& q, const Cx& g, const Cx& delta, double tol) {
    validate_q(q);
    if (abs(g) < R(1e-300)) throw DomainError("g must be nonzero");
    ModelParams mp;
    mp.q = q;
    mp.g = g;
    mp.xi = Cx::i() * g * (q - Cx(1) / q);
    mp.U = hubbard_u(q, g);
    mp.delta = delta;
    if (abs(delta) == 0) throw DomainError("twist delta must be nonzero");
    if (tol > 0) mp.tolerance = tol;
    fill_radicals(mp);
    return mp;
}

template <class R>
ModelParams<R> ModelParams<R>::from_hubbard(const Cx& q, const Cx& U, const Cx& delta, double tol) {
    validate_q(q);
    ModelParams mp;
    mp.q = q;
    mp.U = U;
    mp.delta = delta;
    if (abs(delta) == 0) throw DomainError("twist delta must be nonzero");
    if (tol > 0) mp.tolerance = tol;
    auto g = coupling_from_hubbard(q, U);
    if (g) {
        mp.g = *g;
        mp.xi = Cx::i() * mp.g * (q - Cx(1) / q);
        mp.has_g = true;
    } else {
        mp.has_g = false;
    }
    fill_radicals(mp);
    return mp;
}

template <class R>
ModelParams<R> ModelParams<R>::from_spec(const CouplingSpec& spec, double tol) {
    Cx q = make_complex<R>(spec.q_re, spec.q_im);
    Cx delta = make_complex<R>(spec.delta_re, spec.delta_im);
    if (spec.u) return from_hubbard(q, make_complex<R>(spec.u->first, spec.u->second), delta, tol);
    return from_coupling(q, make_complex<R>(spec.g_re, spec.g_im), delta, tol);
}

#define SL22_INST(R)                                                                              \
    template struct ModelParams<R>;                                                               \
    template void validate_q(const PrecComplex<R>&);                                              \
    template PrecComplex<R> hubbard_u(const PrecComplex<R>&, const PrecComplex<R>&);              \
    template PrecComplex<R> subm_u(const PrecComplex<R>&, int);                                   \
    template std::optional<PrecComplex<R>> coupling_from_hubbard(const PrecComplex<R>&, const PrecComplex<R>&);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
