#pragma once

#include "sl22/numkit/poly.hpp"
#include "sl22/verify/report.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sl22 {

enum class SingularityKind { node, tacnode_like, other };
const char* to_string(SingularityKind k);

template <class R>
struct SingularPointRecord {
    int chart = 0;                          // coordinate set to 1
    std::array<PrecComplex<R>, 3> coords;   // largest coordinate scaled to 1
    int multiplicity = 0;
    PrecComplex<R> tangent_cone_discriminant;
    SingularityKind classification = SingularityKind::other;
    int delta = 0;
    int hits = 0;  // Newton starts that landed here
};

struct ScanOptions {
    int starts = 2000;  // per chart
    std::uint64_t seed = 1;
    double dedupe = 1e-6;
    double node_threshold = 1e-6;
};

template <class R>
struct ScanResult {
    std::vector<SingularPointRecord<R>> points;
    bool warning = false;  // some point was reached only once; the count may be a lower bound
    int converged_starts = 0;
};

// Newton on the gradient of each affine chart in double precision, polished in R.
template <class R>
ScanResult<R> singularity_scan(const PolyMV<R>& curve, int degree, const ScanOptions& opt = {});

// (d-1)(d-2)/2 - sum delta; refuses a warning-flagged scan.
template <class R>
int genus_from_scan(int degree, const ScanResult<R>& scan);
int genus_from_deltas(int degree, const std::vector<int>& deltas);

struct SurfaceInvariants {
    int L2 = 0, chi = 0, Ksq = 0, pg = 0, q_irr = 0;
    std::vector<int> plurigenera;  // P_2..P_5
    bool severi = false;
};

SurfaceInvariants surface_invariants_from_genus(int gC);

struct ProductInvariants {
    int q_irr = 0, pg = 0;
};
ProductInvariants product_surface_invariants(int g1, int g2);

}  // namespace sl22
