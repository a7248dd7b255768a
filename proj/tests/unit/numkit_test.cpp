#include <doctest.h>

#include "sl22/numkit/errors.hpp"
#include "sl22/numkit/linalg.hpp"
#include "sl22/numkit/newton.hpp"
#include "sl22/numkit/poly.hpp"
#include "sl22/numkit/random.hpp"
#include "sl22/numkit/residual.hpp"
#include "sl22/numkit/roots.hpp"

#include <algorithm>

using namespace sl22;
using Cd = PrecComplex<double>;
using P = PolyMV<double>;

TEST_CASE("precision-typed reals carry their bit count") {
    CHECK(precision_bits_v<double> == 53);
    CHECK(precision_bits_v<R128> == 128);
    CHECK(precision_bits_v<R512> == 512);
    CHECK(precision_bits_v<promote_t<double, R256>> == 256);
    R128 third = R128(1) / 3;
    CHECK(abs(third * 3 - 1) < R128(1e-37));
}

TEST_CASE("complex arithmetic") {
    Cd a(1, 2), b(3, -1);
    Cd p = a * b;
    CHECK(p.re == doctest::Approx(5));
    CHECK(p.im == doctest::Approx(5));
    Cd s = sqrt(Cd(-4));
    CHECK(s.re == doctest::Approx(0));
    CHECK(s.im == doctest::Approx(2));
    CHECK(abs(exp(log(a)) - a) < 1e-15);
}

TEST_CASE("polynomial algebra") {
    P x = P::variable(2, 0), y = P::variable(2, 1);
    P f = (x + y) * (x - y);
    CHECK(f.size() == 2);
    CHECK(f.is_homogeneous(2));
    CHECK(f.coefficient({2, 0}).re == 1);
    CHECK(f.coefficient({0, 2}).re == -1);
    P fx = f.derivative(0);
    CHECK(fx.coefficient({1, 0}).re == 2);
    Cd v = f.evaluate({Cd(3), Cd(1)});
    CHECK(v.re == doctest::Approx(8));
    P g = f.compose({x + P::constant(2, Cd(1)), y});
    CHECK(g.evaluate({Cd(2), Cd(1)}).re == doctest::Approx(8));
    auto u = f.univariate(0, {Cd(), Cd(2)});
    REQUIRE(u.size() == 3);
    CHECK(u[0].re == doctest::Approx(-4));
    CHECK(u[2].re == doctest::Approx(1));
    CHECK((x * x).pow(2).coefficient({4, 0}).re == 1);
}

TEST_CASE("proportional polynomials") {
    P x = P::variable(3, 0), y = P::variable(3, 1), z = P::variable(3, 2);
    P f = x * y * z + z * z * z;
    auto eq = mv_equal_up_to_scalar(f, f * Cd(0, 3), 1e-14);
    CHECK(eq.equal);
    CHECK(eq.lambda.im == doctest::Approx(-1.0 / 3));  // f = lambda * (3i f)
    CHECK_FALSE(mv_equal_up_to_scalar(f, f + x * x * x * Cd(1e-6), 1e-12).equal);
}

TEST_CASE("residuals are scale free") {
    auto r = residual_from_terms<double>({Cd(1e10), Cd(-1e10), Cd(1e-3)}, 1e-9);
    CHECK(r.normalized == doctest::Approx(5e-14));
    CHECK(r.pass);
    auto z = residual_from_terms<double>({Cd(0), Cd(0)}, 1e-9);
    CHECK(z.degenerate);
}

TEST_CASE("univariate roots") {
    // (x-1)(x-2)(x-3) = -6 + 11x - 6x^2 + x^3
    auto r = uv_roots<double>({Cd(-6), Cd(11), Cd(-6), Cd(1)});
    std::vector<double> re;
    for (auto& z : r) re.push_back(z.re);
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(1));
    CHECK(re[1] == doctest::Approx(2));
    CHECK(re[2] == doctest::Approx(3));
    CHECK_THROWS_AS(uv_roots<double>({Cd(2)}), DomainError);
}

TEST_CASE("roots at 256 bits") {
    using C = PrecComplex<R256>;
    auto r = uv_roots<R256>({C(-2), C(0), C(1)});
    R256 err = std::min(abs(r[0].re - sqrt(R256(2))), abs(r[1].re - sqrt(R256(2))));
    CHECK(err < R256(1e-70));
}

TEST_CASE("Newton on a square system") {
    P x = P::variable(2, 0), y = P::variable(2, 1);
    std::vector<P> f{x * x + y * y - P::constant(2, Cd(2)), x - y};
    auto res = newton_system(f, {Cd(1.3), Cd(0.8)});
    REQUIRE(res.ok());
    CHECK(res.point[0].re == doctest::Approx(1));
    CHECK(res.point[1].re == doctest::Approx(1));
}

TEST_CASE("dense matrices") {
    CMatrix<double> a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 3;
    auto inv = inverse(a);
    REQUIRE(inv);
    auto id = matmul(a, *inv);
    CHECK(abs(id(0, 0) - Cd(1)) < 1e-15);
    CHECK(abs(id(0, 1)) < 1e-15);
    CHECK(condition_estimate(a) < 10);
    CMatrix<double> s(2, 2);
    CHECK_FALSE(inverse(s));
}

TEST_CASE("seeded streams are reproducible") {
    CHECK(derive_seed(42, "ybe.bk") == derive_seed(42, "ybe.bk"));
    CHECK(derive_seed(42, "ybe.bk") != derive_seed(42, "ybe.rational"));
    Rng a(7), b(7);
    for (int i = 0; i < 5; ++i) CHECK(a.next() == b.next());
    Rng c(3);
    for (int i = 0; i < 100; ++i) {
        Cd z = c.annulus<double>(0.5, 2.0);
        CHECK(abs(z) >= 0.5);
        CHECK(abs(z) <= 2.0);
    }
}
