#pragma once

#include "sl22/numkit/poly.hpp"

#include <string>
#include <vector>

namespace sl22 {

enum class NewtonStatus { converged, stagnated, singular, max_iterations };

std::string to_string(NewtonStatus s);

struct NewtonOptions {
    double tolerance = -1;  // normalized-residual target; <0 selects the precision default
    int max_iter = 50;
    double cond_limit = 1e12;
    int max_halvings = 20;
};

template <class R>
struct NewtonResult {
    std::vector<PrecComplex<R>> point;  // last iterate, also on failure
    NewtonStatus status = NewtonStatus::max_iterations;
    int iterations = 0;
    double max_normalized = 1;
    bool ok() const { return status == NewtonStatus::converged; }
};

// Damped Newton on a square polynomial system with the analytic Jacobian.
template <class R>
NewtonResult<R> newton_system(const std::vector<PolyMV<R>>& f, std::vector<PrecComplex<R>> start,
                              const NewtonOptions& opt = {});

}  // namespace sl22
