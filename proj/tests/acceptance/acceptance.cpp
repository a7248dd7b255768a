// Acceptance driver: `acceptance <criterion 1..12> [path to sl22verify]`.
// Prints one line per criterion and exits 0 iff it passes.

#include "sl22/elliptic/elliptic.hpp"
#include "sl22/verify/checks.hpp"
#include "sl22/verify/singular.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace sl22;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        detail << (ok ? "" : "!") << what << "; ";
    }
    void report(const CheckReport& r, const std::string& tag) {
        std::ostringstream s;
        s << tag << " max=" << to_double_text(r.max_residual_text) << " tol=" << r.tolerance;
        require(r.pass, s.str());
    }
    static std::string to_double_text(const std::string& t) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2e", std::strtod(t.c_str(), nullptr));
        return buf;
    }
};

const std::array<std::pair<const char*, CouplingSpec>, 2> kCouplings{
    std::pair{"real", CouplingSpec::demo_real()}, std::pair{"complex", CouplingSpec::demo_complex()}};

Rng rng_for(const std::string& label) { return Rng(derive_seed(kSeed, label)); }

void c01(Outcome& o) {
    for (const auto& [tag, c] : kCouplings) {
        Model<double> m(ModelParams<double>::from_spec(c));
        Rng g = rng_for(std::string("c01.") + tag);
        o.report(ybe_trials(YbeBuilder::rational, m, g, 100, 1e-9), std::string("rational ") + tag);
    }
}

void c02(Outcome& o) {
    for (const auto& [tag, c] : kCouplings) {
        Model<double> m(ModelParams<double>::from_spec(c));
        Rng g = rng_for(std::string("c02.") + tag);
        CheckReport r = ybe_trials(YbeBuilder::bk, m, g, 100, 1e-9);
        o.report(r, std::string("bk ") + tag);
        auto s = r.metadata.find("sign_assignment");
        o.require(s != r.metadata.end() && !s->second.empty(),
                  "signs=" + (s == r.metadata.end() ? std::string("missing") : s->second));
    }
}

void c03(Outcome& o) {
    for (const auto& [tag, c] : kCouplings) {
        Model<double> m(ModelParams<double>::from_spec(c));
        Rng g1 = rng_for(std::string("c03.generic.") + tag), g2 = rng_for(std::string("c03.symmetric.") + tag);
        o.report(identity_trials_generic(m, g1, 100, 1e-9), std::string("Q1-Q5 ") + tag);
        o.report(identity_trials_symmetric(m, g2, 100, 1e-9), std::string("Qbar1-Qbar5 ") + tag);
    }
}

void c04(Outcome& o) {
    CheckReport r = isogeny_trials<R256>(kSeed, 20, 1e-20);
    o.report(r, "Phi2 over 20 couplings at 256 bits");
    PrecComplex<R256> z = phi2(PrecComplex<R256>(), PrecComplex<R256>());
    o.require(z.re == R256(-157464000000000LL) && z.im == 0, "Phi2(0,0)=" + to_decimal(z.re, 16));
}

void c05(Outcome& o) {
    for (const auto& [tag, c] : kCouplings) {
        auto mp = ModelParams<R128>::from_spec(c);
        o.report(legendre_check(mp, true, 1e-10), std::string("legendre_j(k) vs J(E2) ") + tag);
        o.report(e3_reading_check(mp, 1e-10), std::string("E3 single reading ") + tag);
    }
}

void c06(Outcome& o) {
    for (const auto& [tag, c] : kCouplings) {
        Model<double> m(ModelParams<double>::from_spec(c));
        Rng g = rng_for(std::string("c06.") + tag);
        CheckReport r = form_equivalence_trials(m, g, 50, 1e-8);
        o.report(r, std::string("form equivalence ") + tag);
        o.require(r.metadata["slot_13_4.standard"] == "pass" && r.metadata["slot_13_4.printed"] == "fail",
                  "one slot reading: " + r.metadata["slot_13_4.reading"]);
    }
}

void c07(Outcome& o) {
    using Cx = PrecComplex<R128>;
    const Cx q(4);
    for (int eps : {1, -1}) {
        std::string e = eps > 0 ? "+1" : "-1";
        CheckReport on = sextic_factorization_check(q, eps, 1.0, 1e-12);
        CheckReport off = sextic_factorization_check(q, eps, 1.01, 1e-12);
        o.report(on, "sextic eps=" + e);
        o.require(!off.pass, "fails at 1.01U eps=" + e);
        Rng g = rng_for("c07.cbar." + e);
        o.report(cbar_component_check(q, eps, CubicReading::gauge_reduced, g, 50, 1e-10), "component 50/50 eps=" + e);
    }
    CheckReport sq = a_square_check(q);
    o.require(sq.pass, "A(U=0) = F1^2 coefficient-exact terms=" + sq.metadata["terms_at_U0"]);
}

void c08(Outcome& o) {
    using Cx = PrecComplex<R128>;
    o.report(cubic_j_check(Cx(4), -1, 1e-8), "j=1728 eps=-1 q=4");
    o.report(cubic_j_check(Cx(2), -1, 1e-8), "j=1728 eps=-1 q=2");
    o.report(cubic_j_check(Cx(2), 1, 1e-8), "printed formula eps=+1 q=2");
}

void c09(Outcome& o) {
    Model<R256> m(ModelParams<R256>::from_spec(CouplingSpec::demo_real()));
    struct Target {
        const char* tag;
        const PolyMV<R256>* curve;
        int degree, points, nodes, genus;
    };
    for (const Target& t : {Target{"Cbar", &m.cbar_homogeneous(), 6, 3, 1, 5}, Target{"octic", &m.octic_c(), 8, 12, 12, 9}}) {
        ScanOptions so;
        so.seed = kSeed;
        auto scan = singularity_scan(*t.curve, t.degree, so);
        so.starts *= 2;
        auto twice = singularity_scan(*t.curve, t.degree, so);
        int nodes = 0, tac = 0;
        for (const auto& p : scan.points) {
            nodes += p.classification == SingularityKind::node;
            tac += p.classification == SingularityKind::tacnode_like;
        }
        std::ostringstream s;
        s << t.tag << " points=" << scan.points.size() << " nodes=" << nodes << " tacnode-like=" << tac
          << " doubled=" << twice.points.size();
        o.require(!scan.warning && static_cast<int>(scan.points.size()) == t.points && nodes == t.nodes &&
                      tac == t.points - t.nodes && twice.points.size() == scan.points.size(),
                  s.str());
        int g = scan.warning ? -1 : genus_from_scan(t.degree, scan);
        o.require(g == t.genus, std::string(t.tag) + " genus=" + std::to_string(g));
    }
    SurfaceInvariants s = surface_invariants_from_genus(9);
    std::ostringstream d;
    d << "chi=" << s.chi << " K2=" << s.Ksq << " pg=" << s.pg << " q=" << s.q_irr << " P3=" << s.plurigenera[1];
    o.require(s.chi == 8 && s.Ksq == 32 && s.pg == 9 && s.q_irr == 2 && s.Ksq == 4 * s.chi && s.severi &&
                  s.plurigenera[1] == 104,
              d.str());
    ProductInvariants p = product_surface_invariants(5, 5);
    o.require(p.q_irr == 10 && p.pg == 25,
              "product(5,5)=(" + std::to_string(p.q_irr) + "," + std::to_string(p.pg) + ")");
}

void c10(Outcome& o) {
    for (const auto& [tag, c] : kCouplings) {
        Model<double> m(ModelParams<double>::from_spec(c));
        Rng g = rng_for(std::string("c10.") + tag);
        AppendixBResult r = appendix_b_pipeline(m, g, 50, 1e-8);
        o.report(r.exponent, std::string("one exponent (") + r.exponent.metadata["exponent"] + ") " + tag);
        o.report(r.rescaling, std::string("rescaled quartic = S~ ") + tag);
    }
}

void c11(Outcome& o) {
    for (const auto& [tag, c] : kCouplings) {
        Model<double> m(ModelParams<double>::from_spec(c));
        for (int n : {2, 3}) {
            Rng g = rng_for("c11." + std::to_string(n) + "." + tag);
            o.report(transfer_trials(m, g, n, 5, 1e-8), "N=" + std::to_string(n) + " " + tag);
        }
    }
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    status = pclose(p);
    return out;
}

void c12(Outcome& o, const std::string& exe) {
    if (exe.empty()) {
        o.require(false, "path to sl22verify not given");
        return;
    }
    const std::string cmd = "\"" + exe + "\" verify all --seed 42 --json";
    double worst = 0;
    std::string first, second;
    int s1 = 0, s2 = 0;
    for (int k = 0; k < 2; ++k) {
        auto t0 = std::chrono::steady_clock::now();
        (k == 0 ? first : second) = capture(cmd, k == 0 ? s1 : s2);
        worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    o.require(!first.empty() && first == second, "byte-identical (" + std::to_string(first.size()) + " bytes)");
    o.require(worst < 300, "wall-clock " + std::to_string(worst) + " s < 300 s");
    auto f = first.find("\"failed\": ");
    o.detail << "suite " << (s1 == 0 ? "all pass" : "failed=" + (f == std::string::npos ? "?" : first.substr(f + 10, 3)))
             << "; ";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <criterion 1..12> [sl22verify]\n";
        return 2;
    }
    const int id = std::atoi(argv[1]);
    const std::string exe = argc > 2 ? argv[2] : "";
    // Time limits in seconds.
    const std::map<int, std::pair<double, std::function<void(Outcome&)>>> criteria{
        {1, {30, c01}}, {2, {60, c02}}, {3, {10, c03}}, {4, {10, c04}},  {5, {5, c05}},   {6, {10, c06}},
        {7, {10, c07}}, {8, {5, c08}},  {9, {120, c09}}, {10, {10, c10}}, {11, {30, c11}},
        {12, {600, [&](Outcome& o) { c12(o, exe); }}},
    };
    auto it = criteria.find(id);
    if (it == criteria.end()) {
        std::cerr << "unknown criterion " << argv[1] << "\n";
        return 2;
    }
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        it->second.second(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double limit = it->second.first;
    o.require(secs < limit, "time " + Outcome::to_double_text(std::to_string(secs)) + " s < " +
                                std::to_string(static_cast<int>(limit)) + " s");
    std::printf("criterion %02d %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    return o.pass ? 0 : 1;
}
