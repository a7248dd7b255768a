#include "sl22/verify/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sl22 {

double CheckReport::max_residual() const {
    double m = 0;
    for (double r : residuals) m = std::max(m, r);
    return m;
}

void CheckReport::add(const ResidualReport& r) {
    // A report whose terms all vanish exactly is satisfied, not degenerate.
    bool exact_zero = r.degenerate && r.raw == 0;
    double v = exact_zero ? 0.0 : r.normalized;
    if (r.degenerate && !exact_zero) degenerate = true;
    if (residuals.empty() || v > max_residual()) max_residual_text = exact_zero ? "0" : r.normalized_text;
    residuals.push_back(v);
}

void CheckReport::add(double normalized) {
    if (residuals.empty() || normalized > max_residual()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", normalized);
        max_residual_text = buf;
    }
    if (!std::isfinite(normalized)) degenerate = true;
    residuals.push_back(normalized);
}

void CheckReport::finalize(bool extra) {
    pass = extra && !degenerate && max_residual() < tolerance;
}

double check_tolerance(double at53, int bits, double override_tol) {
    if (override_tol > 0) return override_tol;
    return bits <= 53 ? at53 : std::min(at53, default_tolerance(bits));
}

}  // namespace sl22
