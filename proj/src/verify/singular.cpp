#include "sl22/verify/singular.hpp"

#include "sl22/model/model.hpp"
#include "sl22/numkit/errors.hpp"
#include "sl22/numkit/newton.hpp"
#include "sl22/numkit/random.hpp"

#include <algorithm>

namespace sl22 {

const char* to_string(SingularityKind k) {
    switch (k) {
    case SingularityKind::node: return "node";
    case SingularityKind::tacnode_like: return "tacnode-like";
    case SingularityKind::other: return "other";
    }
    return "other";
}

namespace {

template <class R>
PolyMV<R> chart_poly(const PolyMV<R>& f, int chart) {
    std::vector<PolyMV<R>> subs;
    int k = 0;
    for (int i = 0; i < 3; ++i) subs.push_back(i == chart ? PolyMV<R>::constant(2, PrecComplex<R>(1)) : PolyMV<R>::variable(2, k++));
    return f.compose(subs);
}

template <class R>
std::array<PrecComplex<R>, 3> lift(const std::vector<PrecComplex<R>>& uv, int chart) {
    std::array<PrecComplex<R>, 3> p;
    int k = 0;
    for (int i = 0; i < 3; ++i) p[i] = i == chart ? PrecComplex<R>(1) : uv[k++];
    return p;
}

template <class R>
int largest(const std::array<PrecComplex<R>, 3>& p) {
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (abs(p[i]) > abs(p[k])) k = i;
    return k;
}

template <class R>
std::array<PrecComplex<R>, 3> normalize(std::array<PrecComplex<R>, 3> p) {
    PrecComplex<R> s = p[largest(p)];
    for (auto& c : p) c = c / s;
    return p;
}

// max(|F|, |grad F|) relative to the coefficient 1-norm at a point with max coordinate 1.
template <class R>
double singular_defect(const PolyMV<R>& f, const std::array<PolyMV<R>, 3>& grad, const std::array<PrecComplex<R>, 3>& p) {
    std::vector<PrecComplex<R>> v(p.begin(), p.end());
    R n = f.coefficient_one_norm();
    R worst = abs(f.evaluate(v));
    for (const auto& g : grad) {
        R d = abs(g.evaluate(v));
        if (d > worst) worst = d;
    }
    return to_double(worst / n);
}

template <class R>
struct Candidate {
    std::array<PrecComplex<R>, 3> p;
    int hits = 1;
};

template <class R>
void merge(std::vector<Candidate<R>>& list, const std::array<PrecComplex<R>, 3>& p, int hits, double radius) {
    for (auto& c : list)
        if (projective_distance<R, 3>(p, c.p) < radius && projective_distance<R, 3>(c.p, p) < radius) {
            c.hits += hits;
            return;
        }
    list.push_back({p, hits});
}

template <class R>
void classify(const PolyMV<R>& curve, int degree, SingularPointRecord<R>& rec, double node_threshold) {
    using Cx = PrecComplex<R>;
    using P = PolyMV<R>;
    rec.chart = largest(rec.coords);
    P f = chart_poly(curve, rec.chart);
    std::vector<Cx> uv;
    for (int i = 0; i < 3; ++i)
        if (i != rec.chart) uv.push_back(rec.coords[i] / rec.coords[rec.chart]);
    P shifted = f.compose({P::variable(2, 0) + P::constant(2, uv[0]), P::variable(2, 1) + P::constant(2, uv[1])});
    const double thr = precision_bits_v<R> >= 128 ? 1e-20 : 1e-7;
    R norm = shifted.coefficient_one_norm();
    std::vector<R> by_degree(degree + 1, R(0));
    for (const auto& [e, c] : shifted.terms()) {
        int d = e[0] + e[1];
        if (abs(c) > by_degree[d]) by_degree[d] = abs(c);
    }
    rec.multiplicity = degree;
    for (int d = 0; d <= degree; ++d)
        if (by_degree[d] > R(thr) * norm) {
            rec.multiplicity = d;
            break;
        }
    if (rec.multiplicity == 2) {
        Cx A = shifted.coefficient({2, 0}), B = shifted.coefficient({1, 1}), C = shifted.coefficient({0, 2});
        rec.tangent_cone_discriminant = B * B - Cx(4) * A * C;
        R scale = abs(A) + abs(B) + abs(C);
        bool node = abs(rec.tangent_cone_discriminant) > R(node_threshold) * scale * scale;
        rec.classification = node ? SingularityKind::node : SingularityKind::tacnode_like;
        rec.delta = node ? 1 : 2;
    } else {
        rec.classification = SingularityKind::other;
        rec.delta = rec.multiplicity * (rec.multiplicity - 1) / 2;
    }
}

}  // namespace

template <class R>
ScanResult<R> singularity_scan(const PolyMV<R>& curve, int degree, const ScanOptions& opt) {
    using Cx = PrecComplex<R>;
    if (curve.nvars() != 3 || !curve.is_homogeneous(degree))
        throw DomainError("singularity_scan: expected a ternary form of the stated degree");
    ScanResult<R> out;

    // Search in double precision.
    PolyMV<double> cd = curve.template cast<double>();
    std::array<PolyMV<double>, 3> gd{cd.derivative(0), cd.derivative(1), cd.derivative(2)};
    std::vector<Candidate<double>> found;
    for (int chart = 0; chart < 3; ++chart) {
        PolyMV<double> fa = chart_poly(cd, chart);
        std::vector<PolyMV<double>> sys{fa.derivative(0), fa.derivative(1)};
        Rng rng(derive_seed(opt.seed, "singularity_scan", static_cast<std::uint64_t>(chart)));
        NewtonOptions no;
        no.max_iter = 80;
        no.tolerance = 1e-13;
        no.cond_limit = 1e16;
        for (int s = 0; s < opt.starts; ++s) {
            std::vector<PrecComplex<double>> start{rng.gaussian_complex<double>(), rng.gaussian_complex<double>()};
            auto res = newton_system(sys, start, no);
            bool finite = true;
            for (const auto& c : res.point) finite = finite && std::isfinite(c.re) && std::isfinite(c.im);
            if (!finite) continue;
            auto p = normalize(lift(res.point, chart));
            if (singular_defect(cd, gd, p) > 1e-7) continue;
            ++out.converged_starts;
            merge(found, p, 1, 1e-4);
        }
    }

    // Polish each cluster in R and classify.
    std::array<PolyMV<R>, 3> gr{curve.derivative(0), curve.derivative(1), curve.derivative(2)};
    std::vector<Candidate<R>> polished;
    for (const auto& c : found) {
        std::array<Cx, 3> p;
        for (int i = 0; i < 3; ++i) p[i] = Cx(R(c.p[i].re), R(c.p[i].im));
        int chart = largest(p);
        PolyMV<R> fa = chart_poly(curve, chart);
        std::vector<PolyMV<R>> sys{fa.derivative(0), fa.derivative(1)};
        std::vector<Cx> uv;
        for (int i = 0; i < 3; ++i)
            if (i != chart) uv.push_back(p[i]);
        NewtonOptions no;
        no.max_iter = 300;
        no.cond_limit = 1e300;
        auto res = newton_system(sys, uv, no);
        auto q = normalize(lift(res.point, chart));
        double defect = singular_defect(curve, gr, q);
        if (defect > (precision_bits_v<R> >= 128 ? 1e-15 : 1e-8)) continue;
        merge(polished, q, c.hits, opt.dedupe);
    }
    for (const auto& c : polished) {
        SingularPointRecord<R> rec;
        rec.coords = c.p;
        rec.hits = c.hits;
        classify(curve, degree, rec, opt.node_threshold);
        if (rec.multiplicity < 2) continue;
        out.warning = out.warning || rec.hits < 2;
        out.points.push_back(rec);
    }
    auto key = [](const SingularPointRecord<R>& r) {
        std::array<double, 6> k;
        for (int i = 0; i < 3; ++i) {
            k[2 * i] = to_double(r.coords[i].re);
            k[2 * i + 1] = to_double(r.coords[i].im);
        }
        return k;
    };
    std::sort(out.points.begin(), out.points.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return out;
}

int genus_from_deltas(int degree, const std::vector<int>& deltas) {
    int g = (degree - 1) * (degree - 2) / 2;
    for (int d : deltas) g -= d;
    return g;
}

template <class R>
int genus_from_scan(int degree, const ScanResult<R>& scan) {
    if (scan.warning) throw DomainError("genus_from_scan: scan flagged as incomplete");
    std::vector<int> deltas;
    for (const auto& r : scan.points) deltas.push_back(r.delta);
    return genus_from_deltas(degree, deltas);
}

SurfaceInvariants surface_invariants_from_genus(int gC) {
    if (gC < 2) throw DomainError("surface_invariants_from_genus: genus must be at least 2");
    SurfaceInvariants s;
    s.L2 = 2 * (gC - 1);
    s.chi = s.L2 / 2;
    s.Ksq = 2 * s.L2;
    s.pg = 1 + s.L2 / 2;
    s.q_irr = 1 + s.pg - s.chi;
    for (int n = 2; n <= 5; ++n) s.plurigenera.push_back(s.chi + n * (n - 1) / 2 * s.Ksq);
    s.severi = s.Ksq == 4 * s.chi;
    return s;
}

ProductInvariants product_surface_invariants(int g1, int g2) {
    if (g1 < 0 || g2 < 0) throw DomainError("product_surface_invariants: negative genus");
    return {g1 + g2, g1 * g2};
}

#define SL22_INST(R)                                                                              \
    template ScanResult<R> singularity_scan(const PolyMV<R>&, int, const ScanOptions&);           \
    template int genus_from_scan(int, const ScanResult<R>&);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
