#pragma once

#include "sl22/numkit/complex.hpp"

#include <vector>

namespace sl22 {

struct RootOptions {
    int max_iter = 200;
    int polish_steps = 3;
};

// All roots (with multiplicity) of sum c[k] x^k by Aberth iteration plus Newton polish.
// Throws DomainError for a constant input and ConvergenceError listing unconverged roots.
template <class R>
std::vector<PrecComplex<R>> uv_roots(std::vector<PrecComplex<R>> c, const RootOptions& opt = {});

// |p(x)| / sum |c_k x^k|.
template <class R>
R uv_relative_residual(const std::vector<PrecComplex<R>>& c, const PrecComplex<R>& x);

template <class R>
PrecComplex<R> uv_eval(const std::vector<PrecComplex<R>>& c, const PrecComplex<R>& x);

// Ascending coefficients of lead * prod (x - r).
template <class R>
std::vector<PrecComplex<R>> uv_from_roots(const std::vector<PrecComplex<R>>& roots, const PrecComplex<R>& lead);

}  // namespace sl22
