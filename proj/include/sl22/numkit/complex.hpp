#pragma once

#include "sl22/numkit/real.hpp"

#include <ostream>

namespace sl22 {

template <class R>
class PrecComplex {
public:
    using real_type = R;
    static constexpr int precision_bits = precision_bits_v<R>;

    R re{0};
    R im{0};

    PrecComplex() = default;
    PrecComplex(const R& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    PrecComplex(const R& r, const R& i) : re(r), im(i) {}
    template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
    PrecComplex(I n) : re(R(n)), im(0) {}  // NOLINT(google-explicit-constructor)

    static PrecComplex i() { return PrecComplex(R(0), R(1)); }

    PrecComplex& operator+=(const PrecComplex& o) { re += o.re; im += o.im; return *this; }
    PrecComplex& operator-=(const PrecComplex& o) { re -= o.re; im -= o.im; return *this; }
    PrecComplex& operator*=(const PrecComplex& o) {
        R r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    PrecComplex& operator/=(const PrecComplex& o) {
        // Smith's algorithm
        using std::abs;
        if (abs(o.re) >= abs(o.im)) {
            R t = o.im / o.re;
            R d = o.re + o.im * t;
            R r = (re + im * t) / d;
            im = (im - re * t) / d;
            re = r;
        } else {
            R t = o.re / o.im;
            R d = o.re * t + o.im;
            R r = (re * t + im) / d;
            im = (im * t - re) / d;
            re = r;
        }
        return *this;
    }
    PrecComplex operator-() const { return PrecComplex(-re, -im); }

    friend PrecComplex operator+(PrecComplex a, const PrecComplex& b) { return a += b; }
    friend PrecComplex operator-(PrecComplex a, const PrecComplex& b) { return a -= b; }
    friend PrecComplex operator*(PrecComplex a, const PrecComplex& b) { return a *= b; }
    friend PrecComplex operator/(PrecComplex a, const PrecComplex& b) { return a /= b; }
    friend bool operator==(const PrecComplex& a, const PrecComplex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const PrecComplex& a, const PrecComplex& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const PrecComplex& z) {
        return os << '(' << to_decimal(z.re) << ", " << to_decimal(z.im) << ')';
    }
};

template <class R>
PrecComplex<R> conj(const PrecComplex<R>& z) { return {z.re, -z.im}; }

template <class R>
R abs(const PrecComplex<R>& z) {
    using std::abs;
    using std::sqrt;
    R a = abs(z.re), b = abs(z.im);
    R m = a > b ? a : b;
    if (m == 0) return R(0);
    R x = a / m, y = b / m;
    return m * sqrt(x * x + y * y);
}

template <class R>
R norm(const PrecComplex<R>& z) { return z.re * z.re + z.im * z.im; }

template <class R>
R arg(const PrecComplex<R>& z) {
    using std::atan2;
    return atan2(z.im, z.re);
}

// Principal branch: Re >= 0, cut on the negative reals with Im >= 0 on the cut.
template <class R>
PrecComplex<R> sqrt(const PrecComplex<R>& z) {
    using std::abs;
    using std::sqrt;
    if (z.re == 0 && z.im == 0) return {};
    R r = abs(z);
    if (z.re >= 0) {
        R t = sqrt((r + z.re) / 2);
        return {t, z.im / (2 * t)};
    }
    R t = sqrt((r - z.re) / 2);
    return {abs(z.im) / (2 * t), z.im < 0 ? R(-t) : t};
}

template <class R>
PrecComplex<R> exp(const PrecComplex<R>& z) {
    using std::cos;
    using std::exp;
    using std::sin;
    R e = exp(z.re);
    return {e * cos(z.im), e * sin(z.im)};
}

template <class R>
PrecComplex<R> log(const PrecComplex<R>& z) {
    using std::log;
    return {log(abs(z)), arg(z)};
}

template <class R>
PrecComplex<R> sin(const PrecComplex<R>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class R>
PrecComplex<R> cos(const PrecComplex<R>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

template <class R>
PrecComplex<R> pow(PrecComplex<R> z, int n) {
    if (n < 0) return PrecComplex<R>(1) / pow(z, -n);
    PrecComplex<R> out(1);
    while (n) {
        if (n & 1) out *= z;
        z *= z;
        n >>= 1;
    }
    return out;
}

// Principal power exp(w log z).
template <class R>
PrecComplex<R> pow(const PrecComplex<R>& z, const PrecComplex<R>& w) {
    if (z.re == 0 && z.im == 0) return {};
    return exp(w * log(z));
}

template <class To, class From>
PrecComplex<To> complex_cast(const PrecComplex<From>& z) {
    return {real_cast<To>(z.re), real_cast<To>(z.im)};
}

// Mixed-precision arithmetic promotes to the wider operand.
template <class A, class B, std::enable_if_t<!std::is_same_v<A, B>, int> = 0>
PrecComplex<promote_t<A, B>> operator+(const PrecComplex<A>& a, const PrecComplex<B>& b) {
    using P = promote_t<A, B>;
    return complex_cast<P>(a) + complex_cast<P>(b);
}
template <class A, class B, std::enable_if_t<!std::is_same_v<A, B>, int> = 0>
PrecComplex<promote_t<A, B>> operator-(const PrecComplex<A>& a, const PrecComplex<B>& b) {
    using P = promote_t<A, B>;
    return complex_cast<P>(a) - complex_cast<P>(b);
}
template <class A, class B, std::enable_if_t<!std::is_same_v<A, B>, int> = 0>
PrecComplex<promote_t<A, B>> operator*(const PrecComplex<A>& a, const PrecComplex<B>& b) {
    using P = promote_t<A, B>;
    return complex_cast<P>(a) * complex_cast<P>(b);
}
template <class A, class B, std::enable_if_t<!std::is_same_v<A, B>, int> = 0>
PrecComplex<promote_t<A, B>> operator/(const PrecComplex<A>& a, const PrecComplex<B>& b) {
    using P = promote_t<A, B>;
    return complex_cast<P>(a) / complex_cast<P>(b);
}

template <class R>
PrecComplex<R> make_complex(const std::string& re, const std::string& im) {
    return {real_from_string<R>(re), real_from_string<R>(im)};
}

// Relative distance |a - b| / max(|a|, |b|), 0 when both vanish.
template <class R>
R rel_diff(const PrecComplex<R>& a, const PrecComplex<R>& b) {
    R m = abs(a) > abs(b) ? abs(a) : abs(b);
    if (m == 0) return R(0);
    return abs(a - b) / m;
}

}  // namespace sl22
