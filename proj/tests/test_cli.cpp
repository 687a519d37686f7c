#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "observa/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = observa::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("observa-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& content) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("check reports verdicts and witnesses") {
    Scratch s;
    const std::string twocyc = s.write("twocyc.json", run({"gen", "twocyc"}).out);
    const Result r = run({"check", "--observable", twocyc});
    CHECK(r.code == 1);
    CHECK(r.out.find("G2 cycle") != std::string::npos);

    const Result j = run({"--format", "json", "check", "--observable", "--partly", "--aposteriori", twocyc});
    CHECK(j.code == 1);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["observable"]["witness"]["type"] == "pair_cycle");
    CHECK(doc["partly_aposteriori_observable"]["holds"] == false);

    // Deterministic output.
    CHECK(run({"--format", "json", "check", "--partly", twocyc}).out ==
          run({"--format", "json", "check", "--partly", twocyc}).out);

    const std::string star = s.write("star2.json", run({"gen", "star", "2"}).out);
    CHECK(run({"check", "--partly", star}).code == 0);
    CHECK(run({"check", star}).code == 1);
}

TEST_CASE("min-time reads from stdin") {
    const Result gen = run({"gen", "worst-case", "4"});
    REQUIRE(gen.code == 0);
    const Result r = run({"min-time", "-"}, gen.out);
    CHECK(r.code == 0);
    CHECK(std::stoi(r.out) >= 6);
    CHECK(r.out == "6\n");

    const Result partial = run({"--format", "json", "min-time", "--partial", "-"}, run({"gen", "shift"}).out);
    CHECK(partial.code == 1);
    CHECK(nlohmann::json::parse(partial.out)["min_time"].is_null());
}

TEST_CASE("track prints every step") {
    Scratch s;
    const std::string star = s.write("star2.json", run({"gen", "example", "star(2)"}).out);
    const Result r = run({"track", star, "SD"});
    CHECK(r.code == 0);
    CHECK(r.out.find("final: {c}") != std::string::npos);
    CHECK(r.out.find("localized at: 2") != std::string::npos);

    const Result j = run({"--format", "json", "track", star, "S,D,S"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["steps"].size() == 4);
    CHECK(doc["localization_times"] == nlohmann::json::array({2}));
    CHECK(doc["final"] == nlohmann::json::array({"l1", "l2"}));

    CHECK(run({"track", star, "SX"}).code == 2);
}

TEST_CASE("unobservable edges are closed before analysis") {
    const std::string doc = R"({"nodes":["0","1","2"],"colors":["a"],"edges":[["0","1","a"],["1","2"],["2","0","a"]]})";
    const Result closed = run({"des-close", "-"}, doc);
    CHECK(closed.code == 0);
    const auto g = nlohmann::json::parse(closed.out);
    CHECK(g["edges"].size() == 3);
    CHECK_FALSE(g.contains("unobservable"));

    const Result r = run({"--format", "json", "check", "-"}, doc);
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["epsilon_closed"] == true);
}

TEST_CASE("convert and validate") {
    const std::string json_text = run({"gen", "shift"}).out;
    const Result dot = run({"convert", "--to", "dot", "-"}, json_text);
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);
    const Result back = run({"convert", "--to", "json", "-"}, dot.out);
    CHECK(back.out == json_text);

    CHECK(run({"validate", "-"}, json_text).code == 0);
    const std::string dup = R"({"nodes":["a","a"],"colors":[],"edges":[]})";
    CHECK(run({"validate", "-"}, dup).code == 1);
    CHECK(run({"check", "-"}, dup).code == 2);
}

TEST_CASE("input errors") {
    const Result bad = run({"--format", "json", "check", "-"}, R"({"nodes":})");
    CHECK(bad.code == 2);
    const auto err = nlohmann::json::parse(bad.err);
    CHECK(err["error"]["code"] == 2);
    CHECK(err["error"]["kind"] == "parse_error");

    CHECK(run({"check", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"check", "--bogus", "-"}, "{}").code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"gen", "worst-case"}).code == 2);
    CHECK(run({"gen", "worst-case", "x"}).code == 2);
    CHECK(run({"gen", "nosuch"}).code == 2);
    CHECK(run({"design", "arcs", "-"}, "{}").code == 2);
    CHECK(run({"design", "nodes", "--k", "2", "--min", "-"}, run({"gen", "twocyc"}).out).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("design") {
    const std::string twocyc = run({"gen", "twocyc"}).out;
    CHECK(run({"design", "nodes", "-", "--k", "1"}, twocyc).code == 1);
    const Result r = run({"--format", "json", "design", "nodes", "-", "--min"}, twocyc);
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["k"] == 2);
    CHECK(doc["experimental"] == false);

    // The designed graph feeds straight back into check.
    CHECK(run({"check", "-"}, doc["graph"].dump()).code == 0);

    const std::string star = run({"gen", "star", "2"}).out;
    const Result e = run({"--format", "json", "design", "edges", "-"}, star);
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["k"] == 2);

    const Result budget = run({"design", "nodes", "-", "--budget-nodes", "1"}, run({"gen", "reduce-3col", "K3"}).out);
    CHECK(budget.code == 3);

    const Result exp = run({"--format", "json", "design", "edges", "--goal", "observable", "-"}, star);
    CHECK(nlohmann::json::parse(exp.out)["experimental"] == true);
}

TEST_CASE("gen output pipes into every subcommand") {
    Scratch s;
    const std::string roles = s.path("roles.json");
    const std::vector<std::vector<std::string>> gens = {
        {"gen", "worst-case", "5"}, {"gen", "random", "4", "2", "0.3", "42"},
        {"gen", "star", "3"},       {"gen", "example", "chain"},
        {"gen", "amb"},             {"gen", "reduce-3col", "K3", "--roles", roles},
        {"gen", "reduce-triangle", "K3"}, {"gen", "reduce-triangle", "paw", "--colored"},
        {"gen", "reduce-3col", "C5", "--colored"},
    };
    for (const auto& g : gens) {
        const Result out = run(g);
        REQUIRE(out.code == 0);
        for (const std::vector<std::string> cmd :
             {std::vector<std::string>{"validate", "-"}, {"check", "-"}, {"check", "--partly", "-"},
              {"min-time", "-"}, {"des-close", "-"}, {"convert", "--to", "dot", "-"}}) {
            CHECK(run(cmd, out.out).code != 2);
        }
    }
    std::ifstream file(roles);
    const auto doc = nlohmann::json::parse(file);
    CHECK(doc["node_roles"]["v0"] == "real");
    CHECK(doc["metadata"]["s"] == 3);

    CHECK(run({"check", "-"}, run({"gen", "reduce-3col", "K3", "--colored"}).out).code == 0);
    CHECK(run({"check", "--partly", "-"}, run({"gen", "reduce-triangle", "K5", "--colored"}).out).code == 0);
    CHECK(run({"gen", "reduce-3col", "K4", "--colored"}).code == 2);
}

TEST_SUITE_END();
