#include "sl22/elliptic/elliptic.hpp"

#include "sl22/numkit/errors.hpp"

#include <cmath>

namespace sl22 {

namespace {

template <class R>
R pole_threshold() {
    using std::ldexp;
    return ldexp(R(1), -(precision_bits_v<R> * 3) / 4);
}

template <class R>
void require_pole_free(const PrecComplex<R>& factor, const R& scale, const char* name, const char* where) {
    if (!(abs(factor) > pole_threshold<R>() * scale)) throw DegenerateError(name, where);
}

template <class R>
JacobiTriple<R> landen(const PrecComplex<R>& u, const PrecComplex<R>& k) {
    using Cx = PrecComplex<R>;
    using std::ldexp;
    const R stop = ldexp(R(1), -precision_bits_v<R> / 2 - 4);
    std::vector<Cx> ks;
    Cx kn = k;
    Cx un = u;
    int steps = 0;
    while (abs(kn) > stop) {
        if (++steps > 64) throw ConvergenceError("jacobi_sn_cn_dn: Landen recursion did not converge", {});
        Cx kp = sqrt(Cx(1) - kn * kn);
        Cx k1 = (Cx(1) - kp) / (Cx(1) + kp);
        if (!(abs(k1) < R(1))) throw ConvergenceError("jacobi_sn_cn_dn: Landen modulus not contracting", {});
        ks.push_back(k1);
        un = un / (Cx(1) + k1);
        kn = k1;
    }
    // Base case sn -> sin, cn -> cos, dn -> 1 - k^2 sin^2 / 2.
    Cx s = sin(un), c = cos(un);
    Cx d = Cx(1) - kn * kn * s * s / Cx(2);
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
        const Cx& k1 = *it;
        Cx den = Cx(1) + k1 * s * s;
        Cx ns = (Cx(1) + k1) * s / den;
        Cx nc = c * d / den;
        Cx nd = (Cx(1) - k1 * s * s) / den;
        s = ns;
        c = nc;
        d = nd;
    }
    return {s, c, d};
}

}  // namespace

template <class R>
JacobiTriple<R> jacobi_sn_cn_dn(const PrecComplex<R>& u, const PrecComplex<R>& k) {
    using Cx = PrecComplex<R>;
    if (abs(k) <= R(1)) {
        try {
            return landen(u, k);
        } catch (const ConvergenceError&) {
            if (abs(k) == 0) throw;
        }
    }
    // sn(u,k) = sn(ku,1/k)/k, cn(u,k) = dn(ku,1/k), dn(u,k) = cn(ku,1/k).
    JacobiTriple<R> t = landen(k * u, Cx(1) / k);
    return {t.sn / k, t.dn, t.cn};
}

template <class R>
EllipticContext<R> elliptic_context(const ModelParams<R>& mp, int branch) {
    using Cx = PrecComplex<R>;
    if (branch != 0 && branch != 1) throw DomainError("elliptic_context: branch must be 0 or 1");
    const Cx& q = mp.q;
    const Cx& U = mp.U;
    EllipticContext<R> ctx;
    ctx.branch = branch;
    Cx s = (Cx(4) + Cx(4) * q * q * q * q - q * U * U) / (Cx(4) * q);
    Cx d = sqrt(s * s - Cx(4) * q * q);
    ctx.lambda1 = (s + d) / Cx(2);
    ctx.lambda2 = (s - d) / Cx(2);
    ctx.Delta = q * q + Cx(1) / (q * q) - U * U / (Cx(4) * q);
    Cx r = sqrt(ctx.Delta * ctx.Delta / Cx(4) - Cx(1));
    ctx.k = ctx.Delta / Cx(2) + (branch == 0 ? r : -r);
    // k^2 = lambda2/lambda1 holds for lambda2 = k q, lambda1 = q/k.
    if (abs(ctx.lambda1 - ctx.k * q) < abs(ctx.lambda2 - ctx.k * q)) std::swap(ctx.lambda1, ctx.lambda2);
    return ctx;
}

template <class R>
PointE2<R> uniformize_e2(const PrecComplex<R>& mu, const EllipticContext<R>& ctx, const ModelParams<R>& mp) {
    using Cx = PrecComplex<R>;
    JacobiTriple<R> t = jacobi_sn_cn_dn(mu, ctx.k);
    Cx y1 = Cx(2) * Cx::i() * mp.sqrt_q * t.cn * t.dn;
    Cx y2 = sqrt(ctx.k / mp.q) * t.sn;
    return {y1, y2};
}

namespace {

template <class R>
struct JParts {
    PrecComplex<R> A, plus, minus;
    R scale;
};

template <class R>
JParts<R> j_parts(const PrecComplex<R>& q, const PrecComplex<R>& U, const char* where) {
    using Cx = PrecComplex<R>;
    JParts<R> p;
    Cx q2 = q * q;
    Cx qu2 = q * U * U;
    p.A = Cx(4) - qu2 + Cx(4) * q2 * q2;
    p.plus = p.A + Cx(8) * q2;
    p.minus = p.A - Cx(8) * q2;
    p.scale = R(4) + abs(qu2) + R(4) * abs(q2 * q2) + R(8) * abs(q2);
    require_pole_free(p.plus, p.scale, "4 - qU^2 + 4q^4 + 8q^2", where);
    require_pole_free(p.minus, p.scale, "4 - qU^2 + 4q^4 - 8q^2", where);
    if (abs(q) == 0) throw DomainError(std::string(where) + ": q must be nonzero");
    return p;
}

}  // namespace

template <class R>
PrecComplex<R> j_e1(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    auto p = j_parts(q, U, "j_e1");
    Cx u2 = U * U;
    Cx num = Cx(16) - Cx(8) * q * u2 + q * q * u2 * u2 - Cx(16) * pow(q, 4) - Cx(8) * pow(q, 5) * u2 + Cx(16) * pow(q, 8);
    return num * num * num / (pow(q, 8) * p.plus * p.minus);
}

template <class R>
PrecComplex<R> j_e2(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    auto p = j_parts(q, U, "j_e2");
    Cx u2 = U * U;
    Cx num = Cx(16) - Cx(8) * q * u2 + q * q * u2 * u2 + Cx(224) * pow(q, 4) - Cx(8) * pow(q, 5) * u2 + Cx(16) * pow(q, 8);
    return num * num * num / (pow(q, 4) * p.plus * p.plus * p.minus * p.minus);
}

template <class R>
PrecComplex<R> j_e3(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    auto p = j_parts(q, U, "j_e3");
    Cx u2 = U * U;
    Cx num = Cx(16) - Cx(8) * q * u2 + q * q * u2 * u2 + Cx(960) * q * q - Cx(240) * pow(q, 3) * u2 +
             Cx(2144) * pow(q, 4) - Cx(8) * pow(q, 5) * u2 + Cx(960) * pow(q, 6) + Cx(16) * pow(q, 8);
    return num * num * num / (q * q * p.plus * pow(p.minus, 4));
}

template <class R>
JInvariants<R> j_invariants(const ModelParams<R>& mp) {
    return {j_e1(mp.q, mp.U), j_e2(mp.q, mp.U), j_e3(mp.q, mp.U)};
}

template <class R>
std::vector<PrecComplex<R>> phi2_terms(const PrecComplex<R>& x, const PrecComplex<R>& y) {
    using Cx = PrecComplex<R>;
    const Cx c1488(1488), c162000(162000), c40773375(40773375);
    const Cx c8748(real_from_string<R>("8748000000"));
    const Cx c157(real_from_string<R>("157464000000000"));
    return {x * x * x,
            y * y * y,
            -(x * x * y * y),
            c1488 * x * y * x,
            c1488 * x * y * y,
            -(c162000 * x * x),
            -(c162000 * y * y),
            c40773375 * x * y,
            c8748 * x,
            c8748 * y,
            -c157};
}

template <class R>
PrecComplex<R> phi2(const PrecComplex<R>& x, const PrecComplex<R>& y) {
    PrecComplex<R> s;
    for (const auto& t : phi2_terms(x, y)) s += t;
    return s;
}

template <class R>
ResidualReport isogeny_check(const ModelParams<R>& mp) {
    if (precision_bits_v<R> < 128)
        throw DomainError("isogeny_check: Phi2 cancels across ~14 orders of magnitude; use at least 128 bits");
    auto J = j_invariants(mp);
    return residual_from_terms(phi2_terms(J.JE1, J.JE2), mp.tolerance);
}

template <class R>
PrecComplex<R> j_from_weierstrass(const PrecComplex<R>& a, const PrecComplex<R>& b) {
    using Cx = PrecComplex<R>;
    Cx a3 = Cx(4) * a * a * a;
    Cx b2 = Cx(27) * b * b;
    Cx disc = a3 + b2;
    require_pole_free(disc, abs(a3) + abs(b2), "4a^3 + 27b^2", "j_from_weierstrass");
    return Cx(1728) * a3 / disc;
}

template <class R>
PrecComplex<R> legendre_j(const PrecComplex<R>& k) {
    using Cx = PrecComplex<R>;
    Cx l = k * k;
    Cx den = l * l * (Cx(1) - l) * (Cx(1) - l);
    require_pole_free(den, R(1) + abs(l * l * l * l), "k^4(1-k^2)^2", "legendre_j");
    Cx n = Cx(1) - l + l * l;
    return Cx(256) * n * n * n / den;
}

template <class R>
PrecComplex<R> jacobi_quartic_j(const PrecComplex<R>& k) {
    using Cx = PrecComplex<R>;
    Cx m = k * k;
    Cx den = m * pow(Cx(1) - m, 4);
    require_pole_free(den, R(1) + abs(m * m * m * m * m), "k^2(1-k^2)^4", "jacobi_quartic_j");
    Cx n = Cx(1) + Cx(14) * m + m * m;
    return Cx(16) * n * n * n / den;
}

template <class R>
std::array<PrecComplex<R>, 2> quartic_invariants(const PrecComplex<R>& a4, const PrecComplex<R>& a3,
                                                  const PrecComplex<R>& a2, const PrecComplex<R>& a1,
                                                  const PrecComplex<R>& a0) {
    using Cx = PrecComplex<R>;
    Cx I = Cx(12) * a4 * a0 - Cx(3) * a3 * a1 + a2 * a2;
    Cx J = Cx(72) * a4 * a2 * a0 + Cx(9) * a3 * a2 * a1 - Cx(27) * a4 * a1 * a1 - Cx(27) * a0 * a3 * a3 -
           Cx(2) * a2 * a2 * a2;
    return {I, J};
}

template <class R>
PrecComplex<R> j_from_quartic(const PrecComplex<R>& a4, const PrecComplex<R>& a3, const PrecComplex<R>& a2,
                              const PrecComplex<R>& a1, const PrecComplex<R>& a0) {
    using Cx = PrecComplex<R>;
    auto [I, J] = quartic_invariants(a4, a3, a2, a1, a0);
    Cx i3 = Cx(4) * I * I * I;
    Cx j2 = J * J;
    require_pole_free(i3 - j2, abs(i3) + abs(j2), "4I^3 - J^2", "j_from_quartic");
    return Cx(1728) * i3 / (i3 - j2);
}

template <class R>
E3Coefficients<R> e3_coefficients(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    Cx u2 = U * U;
    Cx q4 = pow(q, 4);
    Cx A = (Cx(16) + Cx(8) * q * (Cx(120) * q - u2) * (Cx(1) + q4) + q * q * u2 * u2 - Cx(240) * pow(q, 3) * u2 +
            Cx(2144) * q4 + Cx(16) * pow(q, 8)) /
           Cx(48);
    Cx B = (Cx(4) + Cx(4) * q4 + Cx(24) * q * q - q * u2) *
           (Cx(16) - Cx(8) * q * (Cx(264) * q + u2) * (Cx(1) + q4) + q * q * u2 * u2 + Cx(528) * pow(q, 3) * u2 -
            Cx(4000) * q4 + Cx(16) * pow(q, 8)) /
           Cx(864);
    return {A, B};
}

template <class R>
std::array<PrecComplex<R>, 5> e2_quartic_coefficients(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    // y1^2 = -4q^3 y2^4 + (4 - qU^2 + 4q^4) y2^2 - 4q
    return {Cx(-4) * q * q * q, Cx(), Cx(4) - q * U * U + Cx(4) * pow(q, 4), Cx(), Cx(-4) * q};
}

template <class R>
PrecComplex<R> nagell_cubic_j(const PolyMV<R>& cubic, const std::array<PrecComplex<R>, 3>& pt, double tol) {
    using Cx = PrecComplex<R>;
    using P = PolyMV<R>;
    if (cubic.nvars() != 3 || !cubic.is_homogeneous(3)) throw DomainError("nagell_cubic_j: expected a ternary cubic form");
    if (tol < 0) tol = default_tolerance(precision_bits_v<R>);
    std::vector<Cx> v(pt.begin(), pt.end());
    ResidualReport on = normalized_residual(cubic, v, tol);
    if (!on.pass && !(on.degenerate && on.raw == 0)) throw DomainError("nagell_cubic_j: point is not on the cubic");

    std::array<Cx, 3> grad;
    R gscale(0);
    for (int i = 0; i < 3; ++i) {
        P d = cubic.derivative(i);
        grad[i] = d.evaluate(v);
        gscale += abs(grad[i]);
    }
    R pmax(0);
    for (const auto& c : pt) pmax = abs(c) > pmax ? abs(c) : pmax;
    if (!(gscale > R(1e-8) * cubic.coefficient_one_norm() * pmax * pmax))
        throw DomainError("nagell_cubic_j: point is singular on the cubic");

    // Lines through pt: lambda*pt + D(s,t) with D spanning a complement of pt.
    int kmax = 0;
    for (int i = 1; i < 3; ++i)
        if (abs(pt[i]) > abs(pt[kmax])) kmax = i;
    std::vector<P> D(3, P(2));
    int slot = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == kmax) {
            D[i] = P(2);
            continue;
        }
        D[i] = P::variable(2, slot++);
    }
    P L1(2);
    for (int i = 0; i < 3; ++i) L1 += D[i] * grad[i];
    P L2(2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Cx h = cubic.derivative(i).derivative(j).evaluate(v);
            if (h.re == 0 && h.im == 0) continue;
            L2 += D[i] * D[j] * (h / Cx(2));
        }
    P L3 = cubic.compose(D);
    P Q = L2 * L2 - L1 * L3 * Cx(4);
    std::array<Cx, 5> a;
    for (int e = 0; e <= 4; ++e) a[4 - e] = Q.coefficient({4 - e, e});
    auto [I, J] = quartic_invariants(a[0], a[1], a[2], a[3], a[4]);
    Cx i3 = Cx(4) * I * I * I;
    Cx j2 = J * J;
    if (!(abs(i3 - j2) > pole_threshold<R>() * (abs(i3) + abs(j2))))
        throw DomainError("nagell_cubic_j: branch quartic is degenerate (reducible cubic)");
    return j_from_weierstrass(Cx(-27) * I, Cx(-27) * J);
}

#define SL22_INST(R)                                                                                             \
    template JacobiTriple<R> jacobi_sn_cn_dn(const PrecComplex<R>&, const PrecComplex<R>&);                      \
    template EllipticContext<R> elliptic_context(const ModelParams<R>&, int);                                    \
    template PointE2<R> uniformize_e2(const PrecComplex<R>&, const EllipticContext<R>&, const ModelParams<R>&);  \
    template PrecComplex<R> j_e1(const PrecComplex<R>&, const PrecComplex<R>&);                                  \
    template PrecComplex<R> j_e2(const PrecComplex<R>&, const PrecComplex<R>&);                                  \
    template PrecComplex<R> j_e3(const PrecComplex<R>&, const PrecComplex<R>&);                                  \
    template JInvariants<R> j_invariants(const ModelParams<R>&);                                                 \
    template std::vector<PrecComplex<R>> phi2_terms(const PrecComplex<R>&, const PrecComplex<R>&);               \
    template PrecComplex<R> phi2(const PrecComplex<R>&, const PrecComplex<R>&);                                  \
    template ResidualReport isogeny_check(const ModelParams<R>&);                                                \
    template PrecComplex<R> j_from_weierstrass(const PrecComplex<R>&, const PrecComplex<R>&);                    \
    template PrecComplex<R> legendre_j(const PrecComplex<R>&);                                                   \
    template PrecComplex<R> jacobi_quartic_j(const PrecComplex<R>&);                                             \
    template std::array<PrecComplex<R>, 2> quartic_invariants(const PrecComplex<R>&, const PrecComplex<R>&,      \
                                                              const PrecComplex<R>&, const PrecComplex<R>&,      \
                                                              const PrecComplex<R>&);                            \
    template PrecComplex<R> j_from_quartic(const PrecComplex<R>&, const PrecComplex<R>&, const PrecComplex<R>&,  \
                                           const PrecComplex<R>&, const PrecComplex<R>&);                        \
    template E3Coefficients<R> e3_coefficients(const PrecComplex<R>&, const PrecComplex<R>&);                    \
    template std::array<PrecComplex<R>, 5> e2_quartic_coefficients(const PrecComplex<R>&, const PrecComplex<R>&); \
    template PrecComplex<R> nagell_cubic_j(const PolyMV<R>&, const std::array<PrecComplex<R>, 3>&, double);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
