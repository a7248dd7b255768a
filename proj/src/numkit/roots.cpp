#include "sl22/numkit/roots.hpp"

#include "sl22/numkit/errors.hpp"

#include <cmath>
#include <string>

namespace sl22 {

template <class R>
PrecComplex<R> uv_eval(const std::vector<PrecComplex<R>>& c, const PrecComplex<R>& x) {
    PrecComplex<R> s;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
}

template <class R>
R uv_relative_residual(const std::vector<PrecComplex<R>>& c, const PrecComplex<R>& x) {
    PrecComplex<R> s;
    R scale(0);
    R ax = abs(x);
    R p(1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        scale += abs(c[k]) * p;
        p *= ax;
    }
    s = uv_eval(c, x);
    if (scale == 0) return R(0);
    return abs(s) / scale;
}

template <class R>
std::vector<PrecComplex<R>> uv_from_roots(const std::vector<PrecComplex<R>>& roots, const PrecComplex<R>& lead) {
    std::vector<PrecComplex<R>> c{lead};
    for (const auto& r : roots) {
        std::vector<PrecComplex<R>> n(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            n[k + 1] += c[k];
            n[k] -= r * c[k];
        }
        c = std::move(n);
    }
    return c;
}

namespace {

template <class R>
void eval_with_derivative(const std::vector<PrecComplex<R>>& c, const PrecComplex<R>& x, PrecComplex<R>& p,
                          PrecComplex<R>& dp) {
    p = PrecComplex<R>();
    dp = PrecComplex<R>();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * x + p;
        p = p * x + *it;
    }
}

}  // namespace

template <class R>
std::vector<PrecComplex<R>> uv_roots(std::vector<PrecComplex<R>> c, const RootOptions& opt) {
    using Cx = PrecComplex<R>;
    while (!c.empty() && c.back().re == 0 && c.back().im == 0) c.pop_back();
    if (c.size() < 2) throw DomainError("uv_roots: polynomial has degree < 1");

    std::vector<Cx> roots;
    // Exact zero roots from vanishing low coefficients.
    std::size_t shift = 0;
    while (shift < c.size() && c[shift].re == 0 && c[shift].im == 0) ++shift;
    for (std::size_t k = 0; k < shift; ++k) roots.emplace_back();
    c.erase(c.begin(), c.begin() + static_cast<long>(shift));
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return roots;

    // Initial guesses on a circle of radius from the coefficient moduli.
    R rad(0);
    {
        R lead = abs(c[n]);
        for (int k = 0; k < n; ++k) {
            using std::pow;
            R v = pow(abs(c[k]) / lead, R(1) / R(n - k));
            if (v > rad) rad = v;
        }
        if (rad == 0) rad = R(1);
    }
    std::vector<Cx> z(n);
    const R twopi = 2 * pi_v<R>();
    for (int k = 0; k < n; ++k) {
        using std::cos;
        using std::sin;
        R th = twopi * R(k) / R(n) + R(0.4);
        z[k] = Cx(rad * cos(th), rad * sin(th));
    }

    using std::ldexp;
    const R eps = ldexp(R(1), -precision_bits_v<R> + 3);
    std::vector<bool> done(n, false);
    for (int it = 0; it < opt.max_iter; ++it) {
        bool all = true;
        for (int k = 0; k < n; ++k) {
            if (done[k]) continue;
            Cx p, dp;
            eval_with_derivative(c, z[k], p, dp);
            if (p.re == 0 && p.im == 0) {
                done[k] = true;
                continue;
            }
            Cx ratio = p / dp;
            Cx sum;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += Cx(1) / (z[k] - z[j]);
            Cx w = ratio / (Cx(1) - ratio * sum);
            z[k] -= w;
            R az = abs(z[k]);
            if (abs(w) <= eps * (az > R(1) ? az : R(1))) done[k] = true;
            else all = false;
        }
        if (all) break;
    }

    for (int k = 0; k < n; ++k) {
        for (int s = 0; s < opt.polish_steps; ++s) {
            Cx p, dp;
            eval_with_derivative(c, z[k], p, dp);
            if ((p.re == 0 && p.im == 0) || (dp.re == 0 && dp.im == 0)) break;
            Cx cand = z[k] - p / dp;
            if (uv_relative_residual(c, cand) <= uv_relative_residual(c, z[k])) z[k] = cand;
        }
    }

    // Multiple roots only reach about bits/d digits, so the gate is bits/4.
    using std::pow;
    const R gate = pow(R(10), -R(precision_bits_v<R>) / 4);
    std::vector<int> bad;
    for (int k = 0; k < n; ++k)
        if (!(uv_relative_residual(c, z[k]) < gate) && !done[k]) bad.push_back(k);
    if (!bad.empty()) {
        std::string msg = "uv_roots: no convergence for root indices";
        for (int k : bad) msg += " " + std::to_string(k);
        throw ConvergenceError(msg, bad);
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

#define SL22_INST(R)                                                                                         \
    template std::vector<PrecComplex<R>> uv_roots(std::vector<PrecComplex<R>>, const RootOptions&);           \
    template R uv_relative_residual(const std::vector<PrecComplex<R>>&, const PrecComplex<R>&);               \
    template PrecComplex<R> uv_eval(const std::vector<PrecComplex<R>>&, const PrecComplex<R>&);               \
    template std::vector<PrecComplex<R>> uv_from_roots(const std::vector<PrecComplex<R>>&, const PrecComplex<R>&);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
