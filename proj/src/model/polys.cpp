#include "sl22/model/polys.hpp"

#include "sl22/numkit/errors.hpp"

namespace sl22 {

namespace {

template <class R>
struct Builder {
    using P = PolyMV<R>;
    using Cx = PrecComplex<R>;
    int n;
    P v(int i) const { return P::variable(n, i); }
    P c(const Cx& x) const { return P::constant(n, x); }
};

}  // namespace

template <class R>
PolyMV<R> e1_cleared_poly(const PrecComplex<R>& q, const PrecComplex<R>& g) {
    using Cx = PrecComplex<R>;
    Builder<R> B{2};
    auto xp = B.v(0), xm = B.v(1);
    Cx xi = Cx::i() * g * (q - Cx(1) / q);
    Cx q2 = q * q;
    return xp * xp * xm + B.c(q2) * xm - B.c(q2) * xp * xm * xm - xp + B.c(xi) * xp * xp -
           B.c(xi * q2) * xm * xm - B.c(Cx::i() * q / g) * xp * xm;
}

template <class R>
PolyMV<R> surface_s_poly(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    Builder<R> B{4};
    auto x = B.v(0), y = B.v(1), z = B.v(2), w = B.v(3);
    auto x2 = x * x, y2 = y * y;
    auto th = x2 - B.c(q) * y2;
    return (x2 - B.c(Cx(1) / q) * y2) * th * th - B.c(U) * x * y * z * w * th -
           w * w * z * z * (x2 - B.c(q * q * q) * y2);
}

template <class R>
PolyMV<R> stilde_poly(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    Builder<R> B{4};
    auto x0 = B.v(0), x1 = B.v(1), x2 = B.v(2), x3 = B.v(3);
    Cx k = Cx(4) - q * U * U + Cx(4) * q * q * q * q;
    auto s2 = x2 * x2, s3 = x3 * x3;
    return x0 * x0 * x1 * x1 + B.c(Cx(4) * q) * s2 * s2 - B.c(k) * s2 * s3 + B.c(Cx(4) * q * q * q) * s3 * s3;
}

template <class R>
PolyMV<R> e2_poly(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    Builder<R> B{2};
    auto y1 = B.v(0), y2 = B.v(1);
    Cx k = Cx(4) - q * U * U + Cx(4) * q * q * q * q;
    auto s = y2 * y2;
    return y1 * y1 + B.c(Cx(4) * q) - B.c(k) * s + B.c(Cx(4) * q * q * q) * s * s;
}

template <class R>
PolyMV<R> cbar_homogeneous_poly(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    Builder<R> B{3};
    auto x = B.v(0), y = B.v(1), z = B.v(2);
    auto x2 = x * x, y2 = y * y, z2 = z * z;
    auto th = x2 - B.c(q) * y2;
    return (x2 - B.c(Cx(1) / q) * y2) * th * th - B.c(U) * x * y * z2 * th - z2 * z2 * (x2 - B.c(q * q * q) * y2);
}

template <class R>
PolyMV<R> cbar_affine_poly(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using P = PolyMV<R>;
    return cbar_homogeneous_poly(q, U).compose({P::variable(2, 0), P::variable(2, 1), P::constant(2, 1)});
}

template <class R>
PolyMV<R> f1_poly(const PrecComplex<R>& q) {
    using Cx = PrecComplex<R>;
    Builder<R> B{4};
    auto a = B.v(0), b = B.v(1), bb = B.v(2), g = B.v(3);
    Cx s1 = q + Cx(1) / q, s2 = q * q + Cx(1) / (q * q);
    auto dag = a * a - g * g;
    auto m = b * bb;
    return dag * dag + b.pow(4) + bb.pow(4) - B.c(4) * a * m * g - B.c(s1) * (a * a + g * g) * (b * b + bb * bb) -
           B.c(s2) * (B.c(2) * a * g + m) * m;
}

template <class R>
PolyMV<R> f2_poly(const PrecComplex<R>& q) {
    using Cx = PrecComplex<R>;
    Builder<R> B{4};
    auto a = B.v(0), b = B.v(1), bb = B.v(2), g = B.v(3);
    Cx s1 = q + Cx(1) / q, s2 = q * q + Cx(1) / (q * q);
    auto dag = a * a - g * g;
    auto m = b * bb;
    return B.c(s1) * (a * a + g * g) * (b * b + bb * bb) * m +
           (b.pow(4) + bb.pow(4) + B.c(Cx(4) + s2) * m * m) * a * g - m * dag * dag;
}

template <class R>
PolyMV<R> surface_a_poly(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    Builder<R> B{4};
    auto a = B.v(0), b = B.v(1), bb = B.v(2), g = B.v(3);
    auto F1 = f1_poly(q);
    return F1 * F1 - B.c(U * U / q) * (a * g + b * bb) * f2_poly(q);
}

namespace {

template <class R>
PolyMV<R> c_squared(const Builder<R>& B, bool c_squared_variable) {
    auto c = B.v(3);
    return c_squared_variable ? c : c * c;
}

}  // namespace

template <class R>
PolyMV<R> f3_poly(const PrecComplex<R>& q, bool c_squared_variable) {
    using Cx = PrecComplex<R>;
    Builder<R> B{4};
    auto a = B.v(0), b = B.v(1), bb = B.v(2);
    auto C2 = c_squared(B, c_squared_variable);
    Cx s1 = q + Cx(1) / q, s2 = q * q + Cx(1) / (q * q);
    auto m = b * bb;
    auto a2 = a * a, a4 = a2 * a2;
    auto u = a2 + C2 - m, v = a2 - C2 + m, w = C2 - m;
    return u * u * v * v + a4 * (b.pow(4) + bb.pow(4) - B.c(4) * m * w) -
           B.c(s1) * a2 * (b * b + bb * bb) * (a4 + w * w) + B.c(s2) * a4 * m * (m - B.c(2) * C2);
}

template <class R>
PolyMV<R> f4_poly(const PrecComplex<R>& q, bool c_squared_variable) {
    using Cx = PrecComplex<R>;
    Builder<R> B{4};
    auto a = B.v(0), b = B.v(1), bb = B.v(2);
    auto C2 = c_squared(B, c_squared_variable);
    Cx s1 = q + Cx(1) / q, s2 = q * q + Cx(1) / (q * q);
    auto m = b * bb;
    auto a2 = a * a, a4 = a2 * a2;
    auto u = a2 + C2 - m, v = a2 - C2 + m, w = C2 - m;
    return B.c(s1) * a2 * m * (b * b + bb * bb) * (a4 + w * w) + B.c(Cx(4) + s2) * a4 * m * m * w -
           m * u * u * v * v + a4 * (b.pow(4) + bb.pow(4)) * w;
}

template <class R>
PolyMV<R> surface_z_poly(const PrecComplex<R>& q, const PrecComplex<R>& U, bool c_squared_variable) {
    Builder<R> B{4};
    auto a = B.v(0);
    auto C2 = c_squared(B, c_squared_variable);
    auto F3 = f3_poly(q, c_squared_variable);
    return F3 * F3 - B.c(U * U / q) * a.pow(4) * C2 * f4_poly(q, c_squared_variable);
}

template <class R>
PolyMV<R> octic_c_poly(const PrecComplex<R>& q, const PrecComplex<R>& U) {
    using Cx = PrecComplex<R>;
    Builder<R> B{3};
    auto a = B.v(0), b = B.v(1), bb = B.v(2);
    Cx s1 = q + Cx(1) / q, s2 = q * q + Cx(1) / (q * q);
    auto m = b * bb;
    auto a2 = a * a;
    auto br = a2 * a2 + b.pow(4) + bb.pow(4) - B.c(s1) * a2 * (b * b + bb * bb) - B.c(s2) * m * m;
    auto abb = a * m;
    return br * br - B.c(U * U / q) * abb * abb * (B.c(s1) * (b * b + bb * bb) - a2);
}

template <class R>
std::pair<PolyMV<R>, PolyMV<R>> sextic_factors(const PrecComplex<R>& q, int eps) {
    using Cx = PrecComplex<R>;
    if (eps != 1 && eps != -1) throw DomainError("sextic_factors: eps must be +1 or -1");
    Builder<R> B{4};
    auto x = B.v(0), y = B.v(1), z = B.v(2), w = B.v(3);
    Cx sq = sqrt(q);
    Cx q32 = sq * sq * sq;
    auto make = [&](int s) {
        Cx sg(s);
        return x.pow(3) + B.c(sg / sq) * x * x * y - B.c(q) * x * y * y - B.c(sg * sq) * y.pow(3) +
               B.c(sg * Cx(eps)) * x * z * w - B.c(q32) * y * z * w;
    };
    return {make(1), make(-1)};
}

template <class R>
PolyMV<R> cbar_component_poly(const PrecComplex<R>& q, int eps, CubicReading reading) {
    using Cx = PrecComplex<R>;
    if (eps != 1 && eps != -1) throw DomainError("cbar_component_poly: eps must be +1 or -1");
    Builder<R> B{3};
    auto x = B.v(0), y = B.v(1), z = B.v(2);
    Cx sq = sqrt(q);
    Cx q32 = sq * sq * sq;
    Cx y3 = reading == CubicReading::printed ? Cx(eps) * sq : sq;
    return x.pow(3) + B.c(Cx(1) / sq) * x * x * y - B.c(q) * x * y * y - B.c(y3) * y.pow(3) +
           B.c(Cx(eps)) * x * z * z - B.c(q32) * y * z * z;
}

#define SL22_INST(R)                                                                                    \
    template PolyMV<R> e1_cleared_poly(const PrecComplex<R>&, const PrecComplex<R>&);                   \
    template PolyMV<R> surface_s_poly(const PrecComplex<R>&, const PrecComplex<R>&);                    \
    template PolyMV<R> stilde_poly(const PrecComplex<R>&, const PrecComplex<R>&);                       \
    template PolyMV<R> e2_poly(const PrecComplex<R>&, const PrecComplex<R>&);                           \
    template PolyMV<R> cbar_homogeneous_poly(const PrecComplex<R>&, const PrecComplex<R>&);             \
    template PolyMV<R> cbar_affine_poly(const PrecComplex<R>&, const PrecComplex<R>&);                  \
    template PolyMV<R> f1_poly(const PrecComplex<R>&);                                                  \
    template PolyMV<R> f2_poly(const PrecComplex<R>&);                                                  \
    template PolyMV<R> surface_a_poly(const PrecComplex<R>&, const PrecComplex<R>&);                    \
    template PolyMV<R> f3_poly(const PrecComplex<R>&, bool);                                            \
    template PolyMV<R> f4_poly(const PrecComplex<R>&, bool);                                            \
    template PolyMV<R> surface_z_poly(const PrecComplex<R>&, const PrecComplex<R>&, bool);              \
    template PolyMV<R> octic_c_poly(const PrecComplex<R>&, const PrecComplex<R>&);                      \
    template std::pair<PolyMV<R>, PolyMV<R>> sextic_factors(const PrecComplex<R>&, int);                \
    template PolyMV<R> cbar_component_poly(const PrecComplex<R>&, int, CubicReading);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
