#include <doctest.h>

#include "sl22/numkit/errors.hpp"
#include "sl22/verify/checks.hpp"
#include "sl22/verify/run.hpp"
#include "sl22/verify/singular.hpp"

using namespace sl22;

TEST_CASE("genus formula") {
    CHECK(genus_from_deltas(3, {}) == 1);
    CHECK(genus_from_deltas(3, {1}) == 0);
    CHECK(genus_from_deltas(6, {1, 2, 2}) == 5);
    CHECK(genus_from_deltas(8, std::vector<int>(12, 1)) == 9);
}

TEST_CASE("surface invariants from the curve genus") {
    auto s = surface_invariants_from_genus(9);
    CHECK(s.L2 == 16);
    CHECK(s.chi == 8);
    CHECK(s.Ksq == 32);
    CHECK(s.pg == 9);
    CHECK(s.q_irr == 2);
    CHECK(s.severi);
    CHECK(s.plurigenera == std::vector<int>{40, 104, 200, 328});
    auto t = surface_invariants_from_genus(2);
    CHECK(t.chi == 1);
    CHECK(t.Ksq == 4);
    CHECK(t.pg == 2);
    CHECK(t.q_irr == 2);
    CHECK_THROWS_AS(surface_invariants_from_genus(1), DomainError);
}

TEST_CASE("product surfaces") {
    auto a = product_surface_invariants(5, 5);
    CHECK(a.q_irr == 10);
    CHECK(a.pg == 25);
    auto b = product_surface_invariants(1, 1);
    CHECK(b.q_irr == 2);
    CHECK(b.pg == 1);
    auto c = product_surface_invariants(0, 4);
    CHECK(c.q_irr == 4);
    CHECK(c.pg == 0);
}

TEST_CASE("singularity scan on reference curves") {
    using P = PolyMV<double>;
    P x = P::variable(3, 0), y = P::variable(3, 1), z = P::variable(3, 2);
    ScanOptions so;
    so.starts = 200;
    auto smooth = singularity_scan(x.pow(6) + y.pow(6) + z.pow(6), 6, so);
    CHECK(smooth.points.empty());
    auto nodal = singularity_scan(y * y * z - x * x * x - x * x * z, 3, so);
    REQUIRE(nodal.points.size() == 1);
    CHECK(nodal.points[0].classification == SingularityKind::node);
    CHECK(genus_from_scan(3, nodal) == 0);
    // y^2 z^2 = x^4 + y^4... tacnode at [0:0:1]: y^2 z^2 - x^4 - y^4 has local form y^2 = x^4.
    auto tac = singularity_scan(y * y * z * z - x.pow(4) - y.pow(4), 4, so);
    REQUIRE(tac.points.size() == 1);
    CHECK(tac.points[0].classification == SingularityKind::tacnode_like);
    CHECK(tac.points[0].delta == 2);
}

TEST_CASE("degenerations at q = 4") {
    using C = PrecComplex<R128>;
    CHECK(sextic_factorization_check(C(4), 1, 1.0, 1e-12).pass);
    CHECK_FALSE(sextic_factorization_check(C(4), -1, 1.01, 1e-12).pass);
    CHECK(a_square_check(C(4)).pass);
    CHECK(cubic_j_check(C(4), -1, 1e-8).pass);
}

TEST_CASE("run_all sorts reports and tags the coupling") {
    RunOptions o;
    o.trials = 3;
    auto rs = run_all(o, {CheckGroup::transfer, CheckGroup::invariants});
    REQUIRE(rs.size() == 6);
    for (std::size_t i = 1; i < rs.size(); ++i) CHECK(rs[i - 1].name <= rs[i].name);
    for (const auto& r : rs) {
        CHECK(r.pass);
        CHECK(r.metadata.at("coupling") == "q=2+0i,g=0.6+0i");
    }
}

TEST_CASE("unsupported precision becomes a failed report") {
    RunOptions o;
    o.precision = 64;
    auto rs = run_all(o, {CheckGroup::ybe});
    REQUIRE(rs.size() == 1);
    CHECK_FALSE(rs[0].pass);
    CHECK(rs[0].metadata.count("error") == 1);
}

TEST_CASE("group names") {
    CHECK(parse_group("appendix-b") == CheckGroup::appendix_b);
    CHECK_FALSE(parse_group("appendix_b"));
    CHECK(all_groups().size() == 8);
}
