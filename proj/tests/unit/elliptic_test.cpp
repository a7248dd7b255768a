#include <doctest.h>

#include "sl22/elliptic/elliptic.hpp"
#include "sl22/numkit/errors.hpp"

using namespace sl22;
using Cd = PrecComplex<double>;
using C2 = PrecComplex<R256>;

// mpmath ellipfun values, modulus k (parameter m = k^2).
TEST_CASE("Jacobi functions against frozen values") {
    auto t = jacobi_sn_cn_dn(Cd(0.7), Cd(0.5));
    CHECK(t.sn.re == doctest::Approx(0.63429327633511237202).epsilon(1e-13));
    CHECK(t.cn.re == doctest::Approx(0.77309251684133431103).epsilon(1e-13));
    CHECK(t.dn.re == doctest::Approx(0.94837651273058064585).epsilon(1e-13));
    auto r = jacobi_sn_cn_dn(Cd(0.7), Cd(2));
    CHECK(r.sn.re == doctest::Approx(0.48466585851464463429).epsilon(1e-13));
    CHECK(r.cn.re == doctest::Approx(0.87469938012454454308).epsilon(1e-13));
    CHECK(r.dn.re == doctest::Approx(0.24575602202397783156).epsilon(1e-13));
    auto c = jacobi_sn_cn_dn(Cd(0.3, 0.2), Cd(0.6, 0.3));
    CHECK(abs(c.sn - Cd(0.30437004848902275912, 0.19060166262166069243)) < 1e-13);
    CHECK(abs(c.cn - Cd(0.97326300664737852326, -0.059607153357326756161)) < 1e-13);
    CHECK(abs(c.dn - Cd(1.0135153650366249232, -0.025455767945526625739)) < 1e-13);
}

TEST_CASE("modular polynomial of level 2") {
    C2 v = phi2(C2(), C2());
    CHECK(v.re == R256(-157464000000000LL));
    CHECK(v.im == 0);
    // j = 1728 (i) and j = 287496 (2i) are 2-isogenous.
    C2 w = phi2(C2(1728), C2(287496));
    CHECK(abs(w) == 0);
}

TEST_CASE("isogeny check refuses double precision") {
    auto mp = ModelParams<double>::from_spec(CouplingSpec::demo_real());
    CHECK_THROWS_AS(isogeny_check(mp), DomainError);
}

TEST_CASE("classical j formulas") {
    CHECK(j_from_weierstrass(Cd(-1), Cd(0)).re == doctest::Approx(1728));
    CHECK(abs(j_from_weierstrass(Cd(0), Cd(1))) < 1e-12);
    CHECK_THROWS_AS(j_from_weierstrass(Cd(-3), Cd(2)), DegenerateError);
    // lambda = k^2 = 1/2 is the square lattice.
    CHECK(legendre_j(sqrt(Cd(0.5))).re == doctest::Approx(1728));
    // Quartic x^4 - 1: j = 1728.
    CHECK(j_from_quartic(Cd(1), Cd(0), Cd(0), Cd(0), Cd(-1)).re == doctest::Approx(1728));
}

TEST_CASE("Jacobi quartic j agrees with the quartic invariants") {
    Cd k(0.3, 0.1);
    Cd k2 = k * k;
    // (1 - x^2)(1 - k^2 x^2) = k^2 x^4 - (1 + k^2) x^2 + 1
    Cd jq = j_from_quartic(k2, Cd(0), -(Cd(1) + k2), Cd(0), Cd(1));
    CHECK(abs(jq - jacobi_quartic_j(k)) < 1e-9 * abs(jq));
}

TEST_CASE("j of plane cubics from a rational point") {
    using P = PolyMV<R128>;
    using C = PrecComplex<R128>;
    P x = P::variable(3, 0), y = P::variable(3, 1), z = P::variable(3, 2);
    P fermat = x * x * x + y * y * y + z * z * z;
    CHECK(abs(nagell_cubic_j(fermat, {C(1), C(-1), C(0)})) < R128(1e-25));
    P square = y * y * z - x * x * x + x * z * z;
    C j1 = nagell_cubic_j(square, {C(0), C(1), C(0)});
    C j2 = nagell_cubic_j(square, {C(1), C(0), C(1)});
    CHECK(abs(j1 - C(1728)) < R128(1e-25));
    CHECK(abs(j2 - C(1728)) < R128(1e-25));
}

TEST_CASE("demo couplings: E2 quartic and Jacobi modulus give J(E2)") {
    for (auto spec : {CouplingSpec::demo_real(), CouplingSpec::demo_complex()}) {
        auto mp = ModelParams<R128>::from_spec(spec);
        auto J = j_invariants(mp);
        auto c = e2_quartic_coefficients(mp.q, mp.U);
        auto jq = j_from_quartic(c[0], c[1], c[2], c[3], c[4]);
        CHECK(abs(jq - J.JE2) < R128(1e-25) * abs(J.JE2));
        auto ctx = elliptic_context(mp);
        CHECK(abs(jacobi_quartic_j(ctx.k) - J.JE2) < R128(1e-25) * abs(J.JE2));
        CHECK(abs(legendre_j(ctx.k) - J.JE1) < R128(1e-25) * abs(J.JE1));
        CHECK(isogeny_check(mp).pass);
    }
}
