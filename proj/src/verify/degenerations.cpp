#include "sl22/verify/checks.hpp"

#include "sl22/elliptic/elliptic.hpp"
#include "sl22/model/polys.hpp"
#include "sl22/numkit/errors.hpp"

namespace sl22 {

template <class R>
CheckReport sextic_factorization_check(const PrecComplex<R>& q, int eps, double u_scale, double tol) {
    using Cx = PrecComplex<R>;
    Cx U = subm_u(q, eps) * Cx(R(u_scale));
    auto [sp, sm] = sextic_factors(q, eps);
    auto eq = mv_equal_up_to_scalar(surface_s_poly(q, U), sp * sm, tol);
    CheckReport rep;
    rep.name = "degenerations.sextic";
    rep.tolerance = tol;
    rep.add(eq.worst_relative_error);
    rep.metadata["eps"] = std::to_string(eps);
    rep.metadata["u_scale"] = std::to_string(u_scale);
    rep.metadata["worst_monomial"] = format_monomial(eq.worst_monomial);
    rep.finalize(eq.equal);
    return rep;
}

template <class R>
CheckReport a_square_check(const PrecComplex<R>& q) {
    using Cx = PrecComplex<R>;
    auto f1 = f1_poly(q);
    PolyMV<R> diff = surface_a_poly(q, Cx()) - f1 * f1;
    CheckReport rep;
    rep.name = "degenerations.a_square";
    rep.tolerance = 0;
    R norm = f1.coefficient_one_norm();
    R worst = diff.max_coefficient_magnitude();
    rep.add(norm > 0 ? to_double(worst / (norm * norm)) : 1.0);
    // At U != 0 the difference is supported on (ag + b bb) F2.
    Cx U(R(1), R(0.5));
    PolyMV<R> off = surface_a_poly(q, U) - f1 * f1;
    PolyMV<R> a = PolyMV<R>::variable(4, 0), b = PolyMV<R>::variable(4, 1), bb = PolyMV<R>::variable(4, 2),
              g = PolyMV<R>::variable(4, 3);
    auto eq = mv_equal_up_to_scalar(off, (a * g + b * bb) * f2_poly(q), default_tolerance(precision_bits_v<R>));
    rep.metadata["terms_at_U0"] = std::to_string(diff.size());
    rep.metadata["off_locus_support"] = eq.equal ? "(ag + b bb) F2" : "unexpected";
    rep.pass = diff.is_zero() && eq.equal;
    return rep;
}

template <class R>
CheckReport cbar_component_check(const PrecComplex<R>& q, int eps, CubicReading reading, Rng& rng, int trials,
                                 double tol) {
    using Cx = PrecComplex<R>;
    Cx U = subm_u(q, eps);
    PolyMV<R> cbar = cbar_homogeneous_poly(q, U);
    PolyMV<R> cubic = cbar_component_poly(q, eps, reading);
    Cx sq = sqrt(q);
    Cx q32 = sq * sq * sq;
    CheckReport rep;
    rep.name = "degenerations.cbar_component";
    rep.tolerance = tol;
    int resampled = 0;
    for (int t = 0; t < trials; ++t) {
        Cx x = rng.annulus<R>(), y = rng.annulus<R>();
        Cx den = Cx(eps) * x - q32 * y;
        if (!(abs(den) > R(kDenominatorThreshold) * (abs(x) + abs(q32 * y)))) {
            if (++resampled > kMaxResamples) throw DegenerateError("eps x - q^(3/2) y", "cbar_component_check");
            --t;
            continue;
        }
        // The z-free part of the cubic, then z^2 from the remaining eps x z^2 - q^(3/2) y z^2.
        Cx p = cubic.evaluate({x, y, Cx()});
        Cx z = sqrt(-p / den);
        rep.add(normalized_residual(cbar, {x, y, z}, tol));
    }
    rep.metadata["eps"] = std::to_string(eps);
    rep.metadata["reading"] = reading == CubicReading::printed ? "printed" : "gauge_reduced";
    rep.metadata["trials"] = std::to_string(trials);
    rep.finalize();
    return rep;
}

template <class R>
CheckReport cubic_j_check(const PrecComplex<R>& q, int eps, double tol) {
    using Cx = PrecComplex<R>;
    CheckReport rep;
    rep.name = "degenerations.cubic_j";
    rep.tolerance = tol;
    Cx expected(1728);
    if (eps == 1) {
        Cx q2 = q * q;
        expected = Cx(64) * pow(q2 + Cx(3), 3) * pow(Cx(3) * q2 + Cx(1), 3) /
                   (pow(q2 - Cx(1), 4) * pow(q2 + Cx(1), 2));
    }
    for (auto reading : {CubicReading::gauge_reduced, CubicReading::printed}) {
        PolyMV<R> cubic = cbar_component_poly(q, eps, reading);
        std::string key = reading == CubicReading::printed ? "printed" : "gauge_reduced";
        try {
            Cx j = nagell_cubic_j(cubic, {Cx(), Cx(), Cx(1)});
            ResidualReport r = residual_from_terms(std::vector<Cx>{j, -expected}, tol);
            if (reading == CubicReading::gauge_reduced) rep.add(r);
            rep.metadata["j." + key] = to_decimal(j.re, 17) + (j.im == 0 ? "" : " + " + to_decimal(j.im, 17) + "i");
        } catch (const DomainError& e) {
            if (reading == CubicReading::gauge_reduced) rep.add(1.0);
            rep.metadata["j." + key] = e.what();
        }
    }
    rep.metadata["eps"] = std::to_string(eps);
    rep.metadata["expected"] = to_decimal(expected.re, 17);
    rep.metadata["point"] = "[0:0:1]";
    rep.finalize();
    return rep;
}

#define SL22_INST(R)                                                                                             \
    template CheckReport sextic_factorization_check(const PrecComplex<R>&, int, double, double);                 \
    template CheckReport a_square_check(const PrecComplex<R>&);                                                  \
    template CheckReport cbar_component_check(const PrecComplex<R>&, int, CubicReading, Rng&, int, double);      \
    template CheckReport cubic_j_check(const PrecComplex<R>&, int, double);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
