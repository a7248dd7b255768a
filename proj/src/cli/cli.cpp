#include "sl22/cli/cli.hpp"

#include "sl22/elliptic/elliptic.hpp"
#include "sl22/model/model.hpp"
#include "sl22/numkit/errors.hpp"
#include "sl22/verify/run.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace sl22::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Args {
    std::string q_re = "2", q_im = "0", g_re = "0.6", g_im = "0", u_re = "0", u_im = "0";
    int precision = 53;
    double tol = -1;
    std::uint64_t seed = 1;
    int trials = 100;
    int epsilon = 0;
    bool json = false;
    std::string out_path;
    std::string target;  // verify group or sample kind
    bool has_u = false, has_g = false, has_tol = false, has_eps = false, has_trials = false;
};

bool is_decimal(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

const auto kDecimal = CLI::Validator(
    [](std::string& s) { return is_decimal(s) ? std::string() : "not a decimal number: " + s; }, "DECIMAL");

CouplingSpec coupling_of(const Args& a) {
    CouplingSpec c;
    c.q_re = a.q_re;
    c.q_im = a.q_im;
    c.g_re = a.g_re;
    c.g_im = a.g_im;
    if (a.has_u) c.u = std::make_pair(a.u_re, a.u_im);
    return c;
}

Json config_json(const Args& a, const std::vector<std::string>& checks) {
    Json c;
    c["q-re"] = a.q_re;
    c["q-im"] = a.q_im;
    if (a.has_u) {
        c["u-re"] = a.u_re;
        c["u-im"] = a.u_im;
    } else {
        c["g-re"] = a.g_re;
        c["g-im"] = a.g_im;
    }
    c["precision"] = a.precision;
    if (a.has_tol) c["tol"] = a.tol;
    c["seed"] = a.seed;
    c["trials"] = a.trials;
    if (a.has_eps) c["epsilon"] = a.epsilon;
    c["checks"] = checks;
    return c;
}

std::string short_sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string short_sci(const std::string& decimal) { return short_sci(std::strtod(decimal.c_str(), nullptr)); }

template <class R>
std::string cx_text(const PrecComplex<R>& z) {
    return to_decimal(z.re, 20) + (z.im < 0 ? "" : "+") + to_decimal(z.im, 20) + "i";
}

int emit_verify(const Args& a, std::ostream& out, std::ostream& err) {
    std::vector<CheckGroup> groups;
    std::vector<std::string> names;
    if (a.target == "all") {
        groups = all_groups();
    } else {
        groups.push_back(*parse_group(a.target));
    }
    for (CheckGroup g : groups) names.emplace_back(to_string(g));

    RunOptions opt;
    opt.coupling = coupling_of(a);
    opt.precision = a.precision;
    opt.tol = a.tol;
    opt.seed = a.seed;
    opt.trials = a.trials;
    if (a.has_eps) opt.epsilon = a.epsilon;
    std::vector<CheckReport> reports = run_all(opt, groups);

    int passed = 0;
    Json js;
    js["version"] = kVersion;
    js["config"] = config_json(a, names);
    js["reports"] = Json::array();
    for (const auto& r : reports) {
        passed += r.pass;
        Json j;
        j["name"] = r.name;
        j["pass"] = r.pass;
        j["max_residual"] = r.max_residual_text;
        j["tolerance"] = r.tolerance;
        j["metadata"] = Json(r.metadata);
        js["reports"].push_back(j);
    }
    const int total = static_cast<int>(reports.size());
    js["summary"] = {{"total", total}, {"passed", passed}, {"failed", total - passed}};

    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path);
        if (!f) {
            err << "cannot write " << a.out_path << "\n";
            return 2;
        }
        f << js.dump(2) << "\n";
    }
    if (a.json) {
        out << js.dump(2) << "\n";
    } else {
        std::size_t w = 5;
        for (const auto& r : reports) w = std::max(w, r.name.size());
        out << std::left << std::setw(static_cast<int>(w)) << "check" << "  result  max_residual  tolerance\n";
        for (const auto& r : reports) {
            out << std::left << std::setw(static_cast<int>(w)) << r.name << "  " << (r.pass ? "PASS  " : "FAIL  ")
                << "  " << std::setw(12) << short_sci(r.max_residual_text) << "  " << short_sci(r.tolerance)
                << "\n";
            auto e = r.metadata.find("error");
            if (e != r.metadata.end()) out << "    error: " << e->second << "\n";
        }
        out << total << " checks, " << passed << " passed, " << total - passed << " failed\n";
    }
    return passed == total ? 0 : 1;
}

template <class R>
int emit_sample(const Args& a, std::ostream& out) {
    using Cx = PrecComplex<R>;
    Model<R> m(ModelParams<R>::from_spec(coupling_of(a), a.tol));
    Rng rng(derive_seed(a.seed, "sample." + a.target));
    const int n = a.has_trials ? a.trials : 5;
    Json js;
    js["version"] = kVersion;
    js["config"] = config_json(a, {});
    js["kind"] = a.target;
    js["points"] = Json::array();
    for (int i = 0; i < n; ++i) {
        std::vector<Cx> coords;
        ResidualReport res;
        if (a.target == "e1") {
            auto p = sample_e1(m, rng);
            coords = {p.xplus, p.xminus, p.gamma};
            res = e1_residual(p, m);
        } else if (a.target == "s") {
            auto p = sample_s(m, rng);
            coords = {p.x, p.y, p.z, p.w};
            res = surface_s_residual(p, m);
        } else if (a.target == "e2") {
            auto p = sample_e2(m, rng);
            coords = {p.y1, p.y2};
            res = e2_residual(p, m);
        } else if (a.target == "cbar") {
            auto p = sample_cbar(m, rng);
            coords = {p.x, p.y};
            res = cbar_residual(p, m);
        } else if (a.target == "a") {
            auto p = sample_a(m, rng);
            coords = {p.a, p.b, p.bb, p.g};
            res = surface_a_residual(p, m);
        } else {
            auto p = sample_z(m, rng);
            coords = {p.a, p.b, p.bb, p.c};
            res = surface_z_residual(p, m);
        }
        Json pt;
        pt["coords"] = Json::array();
        for (const auto& c : coords) pt["coords"].push_back(cx_text(c));
        pt["residual"] = res.normalized_text;
        js["points"].push_back(pt);
    }
    if (a.json) {
        out << js.dump(2) << "\n";
    } else {
        for (const auto& pt : js["points"]) {
            for (const auto& c : pt["coords"]) out << c.template get<std::string>() << "  ";
            out << "residual " << short_sci(pt["residual"].template get<std::string>()) << "\n";
        }
    }
    return 0;
}

template <class R>
int emit_report(const Args& a, std::ostream& out) {
    auto mp = ModelParams<R>::from_spec(coupling_of(a), a.tol);
    Json js;
    js["version"] = kVersion;
    js["config"] = config_json(a, {});
    Json d;
    d["q"] = cx_text(mp.q);
    if (mp.has_g) d["g"] = cx_text(mp.g);
    d["U"] = cx_text(mp.U);
    d["xi"] = cx_text(mp.xi);
    d["delta"] = cx_text(mp.delta);
    d["delta1"] = cx_text(mp.delta1);
    d["subm_u(+1)"] = cx_text(subm_u(mp.q, 1));
    d["subm_u(-1)"] = cx_text(subm_u(mp.q, -1));
    try {
        auto J = j_invariants(mp);
        d["J(E1)"] = cx_text(J.JE1);
        d["J(E2)"] = cx_text(J.JE2);
        d["J(E3)"] = cx_text(J.JE3);
    } catch (const DegenerateError& e) {
        d["J"] = std::string("unavailable: ") + e.what();
    }
    js["derived"] = d;
    if (a.json) {
        out << js.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : d.items()) out << std::left << std::setw(12) << k << v.template get<std::string>() << "\n";
    }
    return 0;
}

template <template <class> class F>
int dispatch(const Args& a, std::ostream& out) {
    switch (a.precision) {
    case 128: return F<R128>::call(a, out);
    case 256: return F<R256>::call(a, out);
    case 512: return F<R512>::call(a, out);
    default: return F<double>::call(a, out);
    }
}

template <class R>
struct SampleCall {
    static int call(const Args& a, std::ostream& out) { return emit_sample<R>(a, out); }
};
template <class R>
struct ReportCall {
    static int call(const Args& a, std::ostream& out) { return emit_report<R>(a, out); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Args a;
    CLI::App app{"Numerical verification of the q-deformed sl(2|2) R-matrix and its curves", "sl22verify"};
    app.set_config("--config", "", "flat key=value file with the flag names as keys; the command line wins");
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    app.add_option("--q-re", a.q_re, "Re q")->check(kDecimal);
    app.add_option("--q-im", a.q_im, "Im q")->check(kDecimal);
    auto* og_re = app.add_option("--g-re", a.g_re, "Re g")->check(kDecimal);
    auto* og_im = app.add_option("--g-im", a.g_im, "Im g")->check(kDecimal);
    auto* ou_re = app.add_option("--u-re", a.u_re, "Re U (replaces g)")->check(kDecimal);
    auto* ou_im = app.add_option("--u-im", a.u_im, "Im U (replaces g)")->check(kDecimal);
    app.add_option("--precision", a.precision, "mantissa bits")->check(CLI::IsMember({53, 128, 256, 512}));
    auto* otol = app.add_option("--tol", a.tol, "override every check tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", a.seed, "master seed");
    auto* otrials = app.add_option("--trials", a.trials, "trials per check")->check(CLI::Range(1, 1000000));
    auto* oeps = app.add_option("--epsilon", a.epsilon, "restrict degenerations to one branch")
                     ->check(CLI::IsMember({-1, 1}));
    app.add_flag("--json", a.json, "JSON on standard output");
    app.add_option("--out", a.out_path, "also write the JSON report here");

    std::vector<std::string> groups{"all"};
    for (CheckGroup g : all_groups()) groups.emplace_back(to_string(g));
    auto* verify = app.add_subcommand("verify", "run checks");
    verify->add_option("group", a.target, "check group")->required()->check(CLI::IsMember(groups));
    auto* sample = app.add_subcommand("sample", "print sampled points with residuals");
    sample->add_option("kind", a.target, "variety")->required()->check(CLI::IsMember({"e1", "s", "e2", "cbar", "a", "z"}));
    auto* report = app.add_subcommand("report", "print derived model quantities");
    app.require_subcommand(1);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 2;
    }

    a.has_g = og_re->count() + og_im->count() > 0;
    a.has_u = ou_re->count() + ou_im->count() > 0;
    a.has_tol = otol->count() > 0;
    a.has_eps = oeps->count() > 0;
    a.has_trials = otrials->count() > 0;
    if (a.has_g && a.has_u) {
        err << "--g-re/--g-im and --u-re/--u-im both determine U; give only one of them\n";
        return 2;
    }

    try {
        if (verify->parsed()) return emit_verify(a, out, err);
        if (sample->parsed()) return dispatch<SampleCall>(a, out);
        if (report->parsed()) return dispatch<ReportCall>(a, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace sl22::cli
