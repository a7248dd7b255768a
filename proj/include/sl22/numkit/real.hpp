#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>

namespace sl22 {

template <unsigned Bits>
using BinFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

using R53 = double;
using R128 = BinFloat<128>;
using R256 = BinFloat<256>;
using R512 = BinFloat<512>;

template <class R>
struct RealTraits;

template <>
struct RealTraits<double> {
    static constexpr int bits = 53;
};

template <unsigned Bits>
struct RealTraits<BinFloat<Bits>> {
    static constexpr int bits = static_cast<int>(Bits);
};

template <class R>
inline constexpr int precision_bits_v = RealTraits<R>::bits;

// Larger-precision type of two reals.
template <class A, class B>
using promote_t = std::conditional_t<(precision_bits_v<A> >= precision_bits_v<B>), A, B>;

inline bool supported_precision(int bits) {
    return bits == 53 || bits == 128 || bits == 256 || bits == 512;
}

// Default normalized-residual threshold per precision.
inline double default_tolerance(int bits) {
    switch (bits) {
    case 53: return 1e-10;
    case 128: return 1e-20;
    case 256: return 1e-25;
    default: return 1e-50;
    }
}

template <class R>
R real_from_string(const std::string& s) {
    if constexpr (std::is_same_v<R, double>) {
        return std::stod(s);
    } else {
        return R(s);
    }
}

template <class R>
double to_double(const R& x) {
    if constexpr (std::is_same_v<R, double>) {
        return x;
    } else {
        return x.template convert_to<double>();
    }
}

template <class To, class From>
To real_cast(const From& x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<To, double>) {
        return to_double(x);
    } else {
        return To(x);
    }
}

template <class R>
R pi_v() {
    if constexpr (std::is_same_v<R, double>) {
        return 3.141592653589793238462643383279502884;
    } else {
        return boost::math::constants::pi<R>();
    }
}

// Decimal rendering with enough digits for the precision.
template <class R>
std::string to_decimal(const R& x, int digits = 0) {
    if (digits <= 0) digits = std::is_same_v<R, double> ? 17 : (precision_bits_v<R> * 30103) / 100000 + 2;
    if constexpr (std::is_same_v<R, double>) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
        return buf;
    } else {
        return x.str(digits, std::ios_base::scientific);
    }
}

}  // namespace sl22

#define SL22_FOR_EACH_REAL(X) X(double) X(::sl22::R128) X(::sl22::R256) X(::sl22::R512)
