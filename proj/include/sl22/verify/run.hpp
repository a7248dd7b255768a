#pragma once

#include "sl22/model/params.hpp"
#include "sl22/verify/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sl22 {

enum class CheckGroup { ybe, identities, isogeny, degenerations, genus, invariants, appendix_b, transfer };

const std::vector<CheckGroup>& all_groups();
const char* to_string(CheckGroup g);
std::optional<CheckGroup> parse_group(const std::string& s);

struct RunOptions {
    CouplingSpec coupling;
    int precision = 53;
    double tol = -1;  // > 0 overrides every check tolerance
    std::uint64_t seed = 1;
    int trials = 100;
    std::optional<int> epsilon;  // restricts the degeneration checks to one branch
    int scan_starts = 2000;
    bool scan_stability = false;  // rerun the singularity scans with twice the starts
};

// Every check of the selected groups, sorted by name. Individual failures never abort the run;
// an exception inside a check becomes a failed report carrying the message.
std::vector<CheckReport> run_all(const RunOptions& opt, const std::vector<CheckGroup>& groups = all_groups());

}  // namespace sl22
