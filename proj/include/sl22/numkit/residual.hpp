#pragma once

#include "sl22/numkit/complex.hpp"

#include <string>
#include <vector>

namespace sl22 {

inline constexpr double kDegenerateScale = 1e-300;

struct ResidualReport {
    double raw = 0;
    double scale = 0;
    double normalized = 0;
    bool pass = false;
    bool degenerate = false;
    std::string normalized_text;  // full-precision decimal rendering
};

// raw = |sum t|, scale = sum |t|.
template <class R>
ResidualReport residual_from_terms(const std::vector<PrecComplex<R>>& terms, double tol) {
    PrecComplex<R> sum;
    R scale(0);
    for (const auto& t : terms) {
        sum += t;
        scale += abs(t);
    }
    ResidualReport rep;
    R raw = abs(sum);
    rep.raw = to_double(raw);
    rep.scale = to_double(scale);
    if (!(scale > R(kDegenerateScale))) {
        rep.degenerate = true;
        rep.normalized = raw == 0 ? 0.0 : 1.0;
        rep.normalized_text = to_decimal(R(rep.normalized));
        rep.pass = false;
        return rep;
    }
    R n = raw / scale;
    rep.normalized = to_double(n);
    rep.normalized_text = to_decimal(n);
    rep.pass = rep.normalized < tol;
    return rep;
}

}  // namespace sl22
