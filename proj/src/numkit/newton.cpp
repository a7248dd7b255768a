#include "sl22/numkit/newton.hpp"

#include "sl22/numkit/linalg.hpp"

#include <stdexcept>

namespace sl22 {

std::string to_string(NewtonStatus s) {
    switch (s) {
    case NewtonStatus::converged: return "converged";
    case NewtonStatus::stagnated: return "stagnated";
    case NewtonStatus::singular: return "singular";
    case NewtonStatus::max_iterations: return "max_iterations";
    }
    return "unknown";
}

namespace {

template <class R>
struct Eval {
    std::vector<PrecComplex<R>> values;
    R norm2{0};
    double worst = 0;
};

template <class R>
Eval<R> evaluate(const std::vector<PolyMV<R>>& f, const std::vector<PrecComplex<R>>& x, double tol) {
    Eval<R> e;
    for (const auto& p : f) {
        auto terms = p.term_values(x);
        PrecComplex<R> s;
        for (const auto& t : terms) s += t;
        e.values.push_back(s);
        e.norm2 += norm(s);
        ResidualReport r = residual_from_terms(terms, tol);
        // An exactly vanishing raw residual satisfies the equation even when all terms vanish.
        double nv = (r.degenerate && r.raw == 0) ? 0.0 : r.normalized;
        if (nv > e.worst) e.worst = nv;
    }
    return e;
}

}  // namespace

template <class R>
NewtonResult<R> newton_system(const std::vector<PolyMV<R>>& f, std::vector<PrecComplex<R>> start,
                              const NewtonOptions& opt) {
    const int n = static_cast<int>(f.size());
    if (n == 0 || static_cast<int>(start.size()) != n) throw std::invalid_argument("newton_system: system is not square");
    for (const auto& p : f)
        if (p.nvars() != n) throw std::invalid_argument("newton_system: variable count mismatch");
    const double tol = opt.tolerance < 0 ? default_tolerance(precision_bits_v<R>) : opt.tolerance;

    std::vector<std::vector<PolyMV<R>>> jac(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jac[i].push_back(f[i].derivative(j));

    NewtonResult<R> res;
    res.point = std::move(start);
    Eval<R> cur = evaluate(f, res.point, tol);
    for (int it = 0; it <= opt.max_iter; ++it) {
        res.iterations = it;
        res.max_normalized = cur.worst;
        if (cur.worst < tol) {
            res.status = NewtonStatus::converged;
            return res;
        }
        if (it == opt.max_iter) break;
        CMatrix<R> J(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) J(i, j) = jac[i][j].evaluate(res.point);
        auto inv = inverse(J);
        if (!inv || condition_estimate(J) > opt.cond_limit) {
            res.status = NewtonStatus::singular;
            return res;
        }
        std::vector<PrecComplex<R>> step(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) step[i] += (*inv)(i, j) * cur.values[j];

        R lambda(1);
        bool accepted = false;
        for (int h = 0; h <= opt.max_halvings; ++h) {
            std::vector<PrecComplex<R>> trial = res.point;
            for (int i = 0; i < n; ++i) trial[i] -= PrecComplex<R>(lambda) * step[i];
            Eval<R> next = evaluate(f, trial, tol);
            if (next.norm2 < cur.norm2 || next.worst < tol) {
                res.point = std::move(trial);
                cur = std::move(next);
                accepted = true;
                break;
            }
            lambda /= 2;
        }
        if (!accepted) {
            res.status = NewtonStatus::stagnated;
            return res;
        }
    }
    res.status = NewtonStatus::max_iterations;
    return res;
}

#define SL22_INST(R)                                                                                 \
    template NewtonResult<R> newton_system(const std::vector<PolyMV<R>>&, std::vector<PrecComplex<R>>, \
                                           const NewtonOptions&);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
