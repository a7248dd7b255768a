#pragma once

#include "sl22/numkit/residual.hpp"

#include <map>
#include <string>
#include <vector>

namespace sl22 {

struct CheckReport {
    std::string name;
    std::vector<double> residuals;  // normalized
    double tolerance = 0;
    bool pass = false;
    bool degenerate = false;
    std::string max_residual_text = "0";  // full-precision decimal of the worst residual
    std::map<std::string, std::string> metadata;

    double max_residual() const;
    // Adds a residual, keeping the decimal text of the worst one.
    void add(const ResidualReport& r);
    void add(double normalized);
    // pass <=> max residual < tolerance and nothing degenerate; `extra` ANDs in structural conditions.
    void finalize(bool extra = true);
};

// Spec tolerance at 53 bits, the precision default above it, unless overridden (> 0).
double check_tolerance(double at53, int bits, double override_tol);

}  // namespace sl22
