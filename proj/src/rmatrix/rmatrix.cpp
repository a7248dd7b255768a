#include "sl22/rmatrix/rmatrix.hpp"

#include "sl22/numkit/errors.hpp"

namespace sl22 {

namespace {

template <class R>
void require_nonzero(const PrecComplex<R>& v, const R& scale, const char* factor, const char* where) {
    if (!(abs(v) > R(kDenominatorThreshold) * scale)) throw DegenerateError(factor, where);
}

// 1-based (row, col) as in the displayed arrays.
template <class R>
struct Placer {
    RMatrix16<R>& m;
    void operator()(int r, int c, const PrecComplex<R>& v) { m(r - 1, c - 1) = v; }
};

}  // namespace

template <class R>
CMatrix<R> RMatrix16<R>::to_cmatrix() const {
    CMatrix<R> out(16, 16);
    out.data.assign(entries.begin(), entries.end());
    return out;
}

const std::vector<std::pair<int, int>>& rmatrix_support() {
    static const std::vector<std::pair<int, int>> slots = [] {
        const int raw[][2] = {{1, 1},  {2, 2},   {2, 5},   {3, 3},   {3, 9},   {4, 4},   {4, 7},   {4, 10},  {4, 13},
                              {5, 2},  {5, 5},   {6, 6},   {7, 4},   {7, 7},   {7, 10},  {7, 13},  {8, 8},   {8, 14},
                              {9, 3},  {9, 9},   {10, 4},  {10, 7},  {10, 10}, {10, 13}, {11, 11}, {12, 12}, {12, 15},
                              {13, 4}, {13, 7},  {13, 10}, {13, 13}, {14, 8},  {14, 14}, {15, 12}, {15, 15}, {16, 16}};
        std::vector<std::pair<int, int>> v;
        for (const auto& rc : raw) v.emplace_back(rc[0] - 1, rc[1] - 1);
        return v;
    }();
    return slots;
}

const char* to_string(SlotReading r) {
    return r == SlotReading::printed ? "a - f/(q delta1)" : "a - f/q";
}

template <class R>
AmplitudeSet<R> bk_amplitudes(const SpectralPoint<R>& p1, const SpectralPoint<R>& p2, const ModelParams<R>& mp) {
    using Cx = PrecComplex<R>;
    const Cx& q = mp.q;
    const Cx& xi = mp.xi;
    const Cx &x1p = p1.xplus, &x1m = p1.xminus, &x2p = p2.xplus, &x2m = p2.xminus;
    const Cx &s1p = p1.sqrt_xi_plus, &s1m = p1.sqrt_xi_minus, &s2p = p2.sqrt_xi_plus, &s2m = p2.sqrt_xi_minus;
    const Cx &g1 = p1.gamma, &g2 = p2.gamma;
    const char* where = "bk_amplitudes";

    Cx den = x2m - x1p;
    require_nonzero(den, abs(x2m) + abs(x1p), "x2- - x1+", where);
    Cx br = Cx(1) - xi * (x1m + x2m) - x1m * x2m;
    require_nonzero(br, R(1) + abs(xi) * (abs(x1m) + abs(x2m)) + abs(x1m * x2m), "1 - xi(x1- + x2-) - x1- x2-", where);
    Cx xi2p = xi + x2p;
    require_nonzero(xi2p, abs(xi) + abs(x2p), "xi + x2+", where);
    for (const Cx* s : {&s1p, &s1m, &s2p, &s2m}) require_nonzero(*s, R(1), "sqrt(xi + x)", where);
    require_nonzero(g1, R(1), "gamma1", where);
    require_nonzero(g2, R(1), "gamma2", where);

    // Composite radicals as products of the cached per-point roots.
    Cx r12 = s1p * s2m / (s2p * s1m);
    AmplitudeSet<R> a;
    a.A = (x1m - x2p) * r12 / den;
    a.B = (x1p - x2p) * s2m / (mp.sqrt_q * (x1p - x2m) * s2p);
    a.Bb = mp.sqrt_q * (x1m - x2m) * s1p / ((x1p - x2m) * s1m);
    a.C = g2 * (x1m - x1p) * r12 / (g1 * den);
    a.Cb = g1 * (x2m - x2p) / (g2 * den);
    a.D = (x1m - x1p) * (x2m - x2p) * (x2p - x1p) * s2m / (g1 * g2 * den * s2p * br);
    a.Db = g1 * g2 * (Cx(1) + xi * xi) * (x2p - x1p) * (xi + x2m) * s1m / (q * q * q * den * xi2p * s1p * br);
    a.F = (x1p - x2p) * s1m * s2m * (Cx(1) - xi * (x1p + x2m) - x1p * x2m) / (q * den * s1p * s2p * br);
    a.G = (xi + x2m) * (x2p - x1p) * (Cx(1) - xi * (x1m + x2p) - x1m * x2p) / (q * xi2p * den * br);
    return a;
}

template <class R>
RMatrix16<R> bk_assemble(const AmplitudeSet<R>& m, const ModelParams<R>& mp) {
    using Cx = PrecComplex<R>;
    const Cx& q = mp.q;
    const Cx& dl = mp.delta;
    const Cx one(1);
    RMatrix16<R> M;
    Placer<R> s{M};
    s(1, 1, m.A);
    s(2, 2, m.B), s(2, 5, m.C);
    s(3, 3, m.B), s(3, 9, m.C);
    s(4, 4, m.F), s(4, 7, m.D / dl), s(4, 10, -q * m.D / dl), s(4, 13, m.A - q * m.F);
    s(5, 2, m.Cb), s(5, 5, m.Bb);
    s(6, 6, one);
    s(7, 4, -dl * q * m.Db), s(7, 7, m.G), s(7, 10, one - q * m.G), s(7, 13, dl * q * q * m.Db);
    s(8, 8, m.Bb), s(8, 14, m.Cb);
    s(9, 3, m.Cb), s(9, 9, m.Bb);
    s(10, 4, dl * m.Db), s(10, 7, one - m.G / q), s(10, 10, m.G), s(10, 13, -dl * q * m.Db);
    s(11, 11, one);
    s(12, 12, m.Bb), s(12, 15, m.Cb);
    s(13, 4, m.A - m.F / q), s(13, 7, -m.D / (dl * q)), s(13, 10, m.D / dl), s(13, 13, m.F);
    s(14, 8, m.C), s(14, 14, m.B);
    s(15, 12, m.C), s(15, 15, m.B);
    s(16, 16, m.A);
    return M;
}

template <class R>
EntrySet<R> rational_entries(const SurfacePointS<R>& s1, const SurfacePointS<R>& s2, const ModelParams<R>& mp) {
    using Cx = PrecComplex<R>;
    const Cx& q = mp.q;
    const char* where = "rational_entries";
    require_nonzero(s1.w, abs(s1.x) + abs(s1.y) + abs(s1.z), "w1", where);
    require_nonzero(s2.w, abs(s2.x) + abs(s2.y) + abs(s2.z), "w2", where);
    Cx x1 = s1.x / s1.w, y1 = s1.y / s1.w, z1 = s1.z / s1.w;
    Cx x2 = s2.x / s2.w, y2 = s2.y / s2.w, z2 = s2.z / s2.w;
    require_nonzero(z2, abs(x2) + abs(y2) + R(1), "z2", where);

    Cx t1 = x1 * x1 - q * y1 * y1;
    Cx t2 = x2 * x2 - q * y2 * y2;
    require_nonzero(t1, abs(x1 * x1) + abs(q * y1 * y1), "theta(x1, y1)", where);
    require_nonzero(t2, abs(x2 * x2) + abs(q * y2 * y2), "theta(x2, y2)", where);
    Cx a12 = x1 * x1 * x2 * x2, b12 = q * q * y1 * y1 * y2 * y2;
    Cx D = a12 - b12;
    require_nonzero(D, abs(a12) + abs(b12), "x1^2 x2^2 - q^2 y1^2 y2^2", where);
    Cx r = z1 / z2;
    Cx q3 = q * q * q;

    EntrySet<R> e;
    e.c = Cx(1);
    e.a = x1 * x2 / t2 - q * r * y1 * y2 / t1;
    e.b = y1 * x2 / t2 - r * x1 * y2 / t1;
    e.cb = r;
    e.bb = q * x1 * y2 / t2 - q * r * y1 * x2 / t1;
    e.g = r * x1 * x2 / t1 - q * y1 * y2 / t2;
    e.d = (x1 * y1 * t1 * (x2 * x2 - q3 * y2 * y2) - r * x2 * y2 * t2 * (x1 * x1 - q3 * y1 * y1)) / (t1 * t2 * D);
    e.db = z1 * z2 * e.d;
    e.f = x1 * y1 * (x2 * y1 * t1 - r * x1 * y2 * t2) / (t1 * D) +
          q * q * x2 * y2 * (x1 * y2 * t1 - r * x2 * y1 * t2) / (t2 * D);
    e.gb = (q * q * z1 * z2 * x2 * y1 - x1 * y2 * t1 * t2) / (t1 * t2) * e.d;
    return e;
}

template <class R>
RMatrix16<R> rational_assemble(const EntrySet<R>& e, const ModelParams<R>& mp, SlotReading reading) {
    using Cx = PrecComplex<R>;
    const Cx& q = mp.q;
    const Cx& d1 = mp.delta1;
    RMatrix16<R> M;
    Placer<R> s{M};
    s(1, 1, e.a);
    s(2, 2, e.b), s(2, 5, e.c);
    s(3, 3, e.b), s(3, 9, e.c);
    s(4, 4, e.f), s(4, 7, e.d / d1), s(4, 10, -q * e.d / d1), s(4, 13, e.a - q * e.f);
    s(5, 2, e.cb), s(5, 5, e.bb);
    s(6, 6, e.g);
    s(7, 4, -q * d1 * e.db), s(7, 7, e.gb), s(7, 10, e.g - q * e.gb), s(7, 13, q * q * d1 * e.db);
    s(8, 8, e.bb), s(8, 14, e.cb);
    s(9, 3, e.cb), s(9, 9, e.bb);
    s(10, 4, d1 * e.db), s(10, 7, e.g - e.gb / q), s(10, 10, e.gb), s(10, 13, -q * d1 * e.db);
    s(11, 11, e.g);
    s(12, 12, e.bb), s(12, 15, e.cb);
    s(13, 4, reading == SlotReading::printed ? e.a - e.f / (q * d1) : e.a - e.f / q);
    s(13, 7, -e.d / (q * d1)), s(13, 10, e.d / d1), s(13, 13, e.f);
    s(14, 8, e.c), s(14, 14, e.b);
    s(15, 12, e.c), s(15, 15, e.b);
    s(16, 16, e.a);
    return M;
}

template <class R>
EntrySet<R> symmetric_entries(const PointCbar<R>& c1, const PointCbar<R>& c2, const ModelParams<R>& mp) {
    using Cx = PrecComplex<R>;
    return rational_entries(SurfacePointS<R>{c1.x, c1.y, Cx(1), Cx(1)}, SurfacePointS<R>{c2.x, c2.y, Cx(1), Cx(1)},
                            mp);
}

template <class R>
RMatrix16<R> rational_rmatrix(const SurfacePointS<R>& s1, const SurfacePointS<R>& s2, const ModelParams<R>& mp,
                              SlotReading reading) {
    return rational_assemble(rational_entries(s1, s2, mp), mp, reading);
}

template <class R>
SpectralPoint<R> with_root_signs(SpectralPoint<R> p, unsigned mask) {
    if (mask & 1u) p.sqrt_xi_plus = -p.sqrt_xi_plus;
    if (mask & 2u) p.sqrt_xi_minus = -p.sqrt_xi_minus;
    return p;
}

template <class R>
ResidualReport proportionality(const RMatrix16<R>& m, const RMatrix16<R>& n, double tol) {
    using Cx = PrecComplex<R>;
    const auto& sup = rmatrix_support();
    std::size_t k = 0;
    R nmax(0), mmax(0);
    for (std::size_t i = 0; i < sup.size(); ++i) {
        R v = abs(n(sup[i].first, sup[i].second));
        if (v > nmax) {
            nmax = v;
            k = i;
        }
        R w = abs(m(sup[i].first, sup[i].second));
        if (w > mmax) mmax = w;
    }
    ResidualReport rep;
    if (!(nmax > R(kDegenerateScale)) || !(mmax > R(kDegenerateScale))) {
        rep.degenerate = true;
        rep.normalized = 1;
        rep.normalized_text = "1";
        return rep;
    }
    Cx lambda = m(sup[k].first, sup[k].second) / n(sup[k].first, sup[k].second);
    R worst(0);
    for (const auto& [r, c] : sup) {
        R d = abs(m(r, c) - lambda * n(r, c));
        if (d > worst) worst = d;
    }
    R norm = worst / mmax;
    rep.raw = to_double(worst);
    rep.scale = to_double(mmax);
    rep.normalized = to_double(norm);
    rep.normalized_text = to_decimal(norm);
    rep.pass = rep.normalized < tol;
    return rep;
}

template <class R>
FormEquivalence form_equivalence(const SurfacePointS<R>& s1, const SurfacePointS<R>& s2, const Model<R>& m,
                                 SlotReading reading) {
    const auto& mp = m.params();
    SpectralPoint<R> p1 = chan_map(s1, m);
    SpectralPoint<R> p2 = chan_map(s2, m);
    RMatrix16<R> rat = rational_rmatrix(s1, s2, mp, reading);
    FormEquivalence out;
    for (unsigned mask = 0; mask < 16; ++mask) {
        SpectralPoint<R> a = with_root_signs(p1, mask & 3u);
        SpectralPoint<R> b = with_root_signs(p2, mask >> 2);
        ResidualReport rep = proportionality(rat, bk_assemble(bk_amplitudes(a, b, mp), mp), mp.tolerance);
        if (mask == 0 || rep.normalized < out.report.normalized) {
            out.report = rep;
            out.sign_mask = mask;
        }
        if (rep.pass) break;
    }
    out.fallback_used = out.sign_mask != 0;
    return out;
}

template <class R>
void apply_two_site(const RMatrix16<R>& m, int i, int j, int n, CMatrix<R>& x) {
    using Cx = PrecComplex<R>;
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw DomainError("apply_two_site: bad site pair");
    int dim = 1;
    for (int k = 0; k < n; ++k) dim *= 4;
    if (x.rows != dim) throw DomainError("apply_two_site: operator dimension mismatch");
    const int si = dim / (4 << (2 * i)), sj = dim / (4 << (2 * j));
    const auto& sup = rmatrix_support();
    std::array<Cx, 16> in, out;
    std::array<int, 16> idx;
    for (int base = 0; base < dim; ++base) {
        if ((base / si) % 4 != 0 || (base / sj) % 4 != 0) continue;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) idx[a * 4 + b] = base + a * si + b * sj;
        for (int col = 0; col < x.cols; ++col) {
            for (int t = 0; t < 16; ++t) {
                in[t] = x(idx[t], col);
                out[t] = Cx();
            }
            for (const auto& [r, c] : sup) out[r] += m(r, c) * in[c];
            for (int t = 0; t < 16; ++t) x(idx[t], col) = out[t];
        }
    }
}

template <class R>
ResidualReport ybe_residual(const RMatrix16<R>& r12, const RMatrix16<R>& r13, const RMatrix16<R>& r23, double tol) {
    CMatrix<R> lhs = CMatrix<R>::identity(64);
    apply_two_site(r23, 1, 2, 3, lhs);
    apply_two_site(r13, 0, 2, 3, lhs);
    apply_two_site(r12, 0, 1, 3, lhs);
    CMatrix<R> rhs = CMatrix<R>::identity(64);
    apply_two_site(r12, 0, 1, 3, rhs);
    apply_two_site(r13, 0, 2, 3, rhs);
    apply_two_site(r23, 1, 2, 3, rhs);
    R worst(0), scale(0);
    for (std::size_t k = 0; k < lhs.data.size(); ++k) {
        R d = abs(lhs.data[k] - rhs.data[k]);
        if (d > worst) worst = d;
        R a = abs(lhs.data[k]), b = abs(rhs.data[k]);
        if (a > scale) scale = a;
        if (b > scale) scale = b;
    }
    ResidualReport rep;
    rep.raw = to_double(worst);
    rep.scale = to_double(scale);
    if (!(scale > R(kDegenerateScale))) {
        rep.degenerate = true;
        rep.normalized = worst == 0 ? 0.0 : 1.0;
        rep.normalized_text = to_decimal(R(rep.normalized));
        return rep;
    }
    R n = worst / scale;
    rep.normalized = to_double(n);
    rep.normalized_text = to_decimal(n);
    rep.pass = rep.normalized < tol;
    return rep;
}

template <class R>
CMatrix<R> transfer_matrix(const std::vector<RMatrix16<R>>& ls) {
    const int N = static_cast<int>(ls.size());
    if (N < 1 || N > 4) throw DomainError("transfer_matrix: 1..4 sites supported");
    int dq = 1;
    for (int k = 0; k < N; ++k) dq *= 4;
    CMatrix<R> mono = CMatrix<R>::identity(4 * dq);
    for (int k = 0; k < N; ++k) apply_two_site(ls[k], 0, k + 1, N + 1, mono);
    CMatrix<R> t(dq, dq);
    for (int a = 0; a < 4; ++a)
        for (int r = 0; r < dq; ++r)
            for (int c = 0; c < dq; ++c) t(r, c) += mono(a * dq + r, a * dq + c);
    return t;
}

#define SL22_INST(R)                                                                                              \
    template struct RMatrix16<R>;                                                                                 \
    template AmplitudeSet<R> bk_amplitudes(const SpectralPoint<R>&, const SpectralPoint<R>&, const ModelParams<R>&); \
    template RMatrix16<R> bk_assemble(const AmplitudeSet<R>&, const ModelParams<R>&);                             \
    template EntrySet<R> rational_entries(const SurfacePointS<R>&, const SurfacePointS<R>&, const ModelParams<R>&); \
    template RMatrix16<R> rational_assemble(const EntrySet<R>&, const ModelParams<R>&, SlotReading);              \
    template EntrySet<R> symmetric_entries(const PointCbar<R>&, const PointCbar<R>&, const ModelParams<R>&);      \
    template RMatrix16<R> rational_rmatrix(const SurfacePointS<R>&, const SurfacePointS<R>&, const ModelParams<R>&, \
                                           SlotReading);                                                          \
    template SpectralPoint<R> with_root_signs(SpectralPoint<R>, unsigned);                                        \
    template ResidualReport proportionality(const RMatrix16<R>&, const RMatrix16<R>&, double);                    \
    template FormEquivalence form_equivalence(const SurfacePointS<R>&, const SurfacePointS<R>&, const Model<R>&,  \
                                              SlotReading);                                                       \
    template void apply_two_site(const RMatrix16<R>&, int, int, int, CMatrix<R>&);                                \
    template ResidualReport ybe_residual(const RMatrix16<R>&, const RMatrix16<R>&, const RMatrix16<R>&, double);  \
    template CMatrix<R> transfer_matrix(const std::vector<RMatrix16<R>>&);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
