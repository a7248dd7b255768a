#pragma once

#include "sl22/numkit/complex.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace sl22 {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for an independent stream identified by a label and trial index.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t trial = 0) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (char ch : label) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    return splitmix64(seed ^ splitmix64(h ^ splitmix64(trial)));
}

// Deterministic across platforms: only raw mt19937_64 output is used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    std::uint64_t next() { return eng_(); }
    int index(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    double gauss() {
        double u = uniform();
        while (u == 0) u = uniform();
        double v = uniform();
        return std::sqrt(-2 * std::log(u)) * std::cos(2 * 3.141592653589793 * v);
    }

    // Modulus log-uniform in [lo, hi], argument uniform.
    template <class R>
    PrecComplex<R> annulus(double lo = 0.5, double hi = 2.0) {
        double r = std::exp(uniform(std::log(lo), std::log(hi)));
        double a = uniform(0, 2 * 3.141592653589793);
        return {R(r * std::cos(a)), R(r * std::sin(a))};
    }

    template <class R>
    PrecComplex<R> gaussian_complex() {
        double x = gauss();
        double y = gauss();
        return {R(x), R(y)};
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace sl22
