#include <doctest.h>

#include "sl22/rmatrix/rmatrix.hpp"

using namespace sl22;
using Cd = PrecComplex<double>;

TEST_CASE("support of the R-matrix") {
    CHECK(rmatrix_support().size() == kSupportSize);
    CHECK(kSupportSize == 36);
}

TEST_CASE("rational R-matrix at a coincident pair") {
    Model<double> m(ModelParams<double>::from_spec(CouplingSpec::demo_real()));
    Rng rng(3);
    auto p = sample_s(m, rng);
    auto r = rational_rmatrix(p, p, m.params(), SlotReading::standard);
    int nonzero = 0;
    for (const auto& e : r.entries) nonzero += abs(e) > 0;
    CHECK(nonzero <= kSupportSize);
    CHECK(condition_estimate(r.to_cmatrix()) < 1e10);
}

TEST_CASE("Yang-Baxter residual of sampled triples") {
    Model<double> m(ModelParams<double>::from_spec(CouplingSpec::demo_complex()));
    Rng rng(9);
    auto p1 = sample_s(m, rng), p2 = sample_s(m, rng), p3 = sample_s(m, rng);
    const auto& mp = m.params();
    auto r12 = rational_rmatrix(p1, p2, mp), r13 = rational_rmatrix(p1, p3, mp), r23 = rational_rmatrix(p2, p3, mp);
    CHECK(ybe_residual(r12, r13, r23, 1e-9).pass);
    auto bad = rational_rmatrix(p1, p2, mp, SlotReading::printed);
    CHECK_FALSE(ybe_residual(bad, rational_rmatrix(p1, p3, mp, SlotReading::printed),
                             rational_rmatrix(p2, p3, mp, SlotReading::printed), 1e-9)
                    .pass);
}

TEST_CASE("two-site operator on the identity") {
    RMatrix16<double> id;
    for (int i = 0; i < 16; ++i) id.entries[i * 16 + i] = Cd(1);
    CMatrix<double> v = CMatrix<double>::identity(64);
    CMatrix<double> w = v;
    apply_two_site(id, 0, 2, 3, w);
    CHECK(max_abs_entry(matmul(w, v)) == doctest::Approx(1));
    for (int i = 0; i < 64; ++i) CHECK(abs(w(i, i) - Cd(1)) == 0);
}
