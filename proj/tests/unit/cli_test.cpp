#include <doctest.h>

#include "sl22/cli/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

int run(std::vector<std::string> args, std::string* out = nullptr) {
    args.insert(args.begin(), "sl22verify");
    std::ostringstream o, e;
    int code = sl22::cli::run(args, o, e);
    if (out) *out = o.str();
    return code;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"verify", "isogeny", "--bogus"}) == 2);
    CHECK(run({"verify", "nothing"}) == 2);
    CHECK(run({}) == 2);
    CHECK(run({"verify", "ybe", "--precision", "100"}) == 2);
    CHECK(run({"verify", "ybe", "--trials", "0"}) == 2);
    CHECK(run({"verify", "ybe", "--epsilon", "2"}) == 2);
    CHECK(run({"verify", "ybe", "--u-re", "17", "--g-re", "0.6"}) == 2);
}

TEST_CASE("passing run exits with 0 and a clean summary") {
    std::string out;
    CHECK(run({"verify", "transfer", "--trials", "2", "--json"}, &out) == 0);
    auto js = nlohmann::json::parse(out);
    CHECK(js["summary"]["failed"] == 0);
    CHECK(js["summary"]["total"] == 3);
    CHECK(js["config"]["checks"][0] == "transfer");
    CHECK(js["reports"][0]["max_residual"].is_string());
}

TEST_CASE("forced failure exits with 1") {
    CHECK(run({"verify", "ybe", "--trials", "3", "--tol", "1e-30"}) == 1);
}

TEST_CASE("isogeny at the stated coupling") {
    std::string out;
    CHECK(run({"verify", "isogeny", "--q-re", "2", "--g-re", "0.6", "--precision", "256", "--json"}, &out) == 0);
    auto js = nlohmann::json::parse(out);
    CHECK(js["config"]["precision"] == 256);
}

TEST_CASE("fixed seed gives identical JSON") {
    std::string a, b;
    run({"verify", "identities", "--seed", "42", "--trials", "5", "--json"}, &a);
    run({"verify", "identities", "--seed", "42", "--trials", "5", "--json"}, &b);
    CHECK(a == b);
    std::string c;
    run({"verify", "identities", "--seed", "43", "--trials", "5", "--json"}, &c);
    CHECK(a != c);
}

TEST_CASE("config file with command-line override") {
    const std::string path = "sl22_cli_test.cfg";
    {
        std::ofstream f(path);
        f << "q-re=1.5\nq-im=0.2\nseed=7\ntrials=2\n";
    }
    std::string out;
    CHECK(run({"verify", "transfer", "--config", path, "--seed", "9", "--json"}, &out) == 0);
    auto js = nlohmann::json::parse(out);
    CHECK(js["config"]["q-re"] == "1.5");
    CHECK(js["config"]["q-im"] == "0.2");
    CHECK(js["config"]["seed"] == 9);
    CHECK(js["config"]["trials"] == 2);
    std::remove(path.c_str());
}

TEST_CASE("config block round-trips through the flags") {
    std::string out;
    run({"verify", "transfer", "--q-re", "1.5", "--q-im", "0.2", "--seed", "3", "--trials", "2", "--json"}, &out);
    auto cfg = nlohmann::json::parse(out)["config"];
    std::vector<std::string> args{"verify", "transfer", "--json"};
    for (auto& [k, v] : cfg.items()) {
        if (k == "checks") continue;
        args.push_back("--" + k);
        args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::string again;
    run(args, &again);
    CHECK(nlohmann::json::parse(again)["config"] == cfg);
}

TEST_CASE("sample and report subcommands") {
    std::string out;
    CHECK(run({"sample", "cbar", "--trials", "3", "--json"}, &out) == 0);
    auto js = nlohmann::json::parse(out);
    CHECK(js["points"].size() == 3);
    CHECK(js["points"][0]["coords"].size() == 2);
    CHECK(run({"report", "--precision", "128", "--json"}, &out) == 0);
    auto r = nlohmann::json::parse(out);
    CHECK(r["derived"]["U"].is_string());
    CHECK(run({"sample", "z", "--u-re", "17", "--q-re", "4"}) == 0);
}
