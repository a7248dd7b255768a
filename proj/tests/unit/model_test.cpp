#include <doctest.h>

#include "sl22/model/model.hpp"
#include "sl22/model/polys.hpp"
#include "sl22/numkit/errors.hpp"

using namespace sl22;
using Cd = PrecComplex<double>;

TEST_CASE("SUBM coupling values") {
    CHECK(subm_u(Cd(4), 1).re == doctest::Approx(17));
    CHECK(subm_u(Cd(4), -1).re == doctest::Approx(15));
    CHECK_THROWS_AS(subm_u(Cd(4), 0), DomainError);
}

TEST_CASE("coupling and Hubbard parameterizations agree") {
    auto a = ModelParams<double>::from_spec(CouplingSpec::demo_complex());
    auto b = ModelParams<double>::from_hubbard(a.q, a.U);
    CHECK(abs(b.U - a.U) < 1e-12 * abs(a.U));
    CHECK(abs(b.g - a.g) < 1e-10);
    CHECK(abs(a.delta1 + a.delta / a.q) < 1e-15);
    CHECK(abs(a.sqrt_one_plus_xi2 * a.sqrt_one_plus_xi2 - (Cd(1) + a.xi * a.xi)) < 1e-12);
}

TEST_CASE("samplers land on their varieties") {
    for (auto spec : {CouplingSpec::demo_real(), CouplingSpec::demo_complex()}) {
        Model<double> m(ModelParams<double>::from_spec(spec));
        Rng rng(11);
        for (int i = 0; i < 10; ++i) {
            CHECK(surface_s_residual(sample_s(m, rng), m).normalized < 1e-12);
            CHECK(e1_residual(sample_e1(m, rng), m).normalized < 1e-12);
            CHECK(e2_residual(sample_e2(m, rng), m).normalized < 1e-12);
            CHECK(cbar_residual(sample_cbar(m, rng), m).normalized < 1e-12);
            CHECK(surface_a_residual(sample_a(m, rng), m).normalized < 1e-12);
            CHECK(surface_z_residual(sample_z(m, rng), m).normalized < 1e-12);
        }
    }
}

TEST_CASE("CHAN maps S into E1") {
    Model<R128> m(ModelParams<R128>::from_spec(CouplingSpec::demo_real()));
    Rng rng(5);
    for (int i = 0; i < 5; ++i) {
        auto sp = chan_map(sample_s(m, rng), m);
        CHECK(e1_residual(sp, m).normalized < 1e-30);
    }
}

TEST_CASE("defining polynomials have the stated degrees") {
    Model<double> m(ModelParams<double>::from_spec(CouplingSpec::demo_real()));
    CHECK(m.surface_s().is_homogeneous(6));
    CHECK(m.stilde().is_homogeneous(4));
    CHECK(m.cbar_homogeneous().is_homogeneous(6));
    CHECK(m.octic_c().is_homogeneous(8));
}
