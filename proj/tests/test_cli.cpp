#include <catch2/catch_amalgamated.hpp>

#include "taugraph/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace taugraph;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("graph command renders the polynomial example as DOT") {
    auto r = run_cli({"graph", "--backend=gapped-poly", "--tau=same-degree",
                      "--elem=x^8-x^9", "--format=dot"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out ==
          "graph G {\n"
          "  \"x^3-x^2\";\n"
          "  \"x^3\";\n"
          "  \"x^3-x^2\" -- \"x^3\";\n"
          "  \"x^3\" -- \"x^3\";\n"
          "}\n");
}

TEST_CASE("graph command: K2 with a loop for 12") {
    auto r = run_cli({"graph", "--backend=int", "--tau=full", "--elem=12"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out ==
          "graph G {\n"
          "  \"2\";\n"
          "  \"3\";\n"
          "  \"2\" -- \"3\";\n"
          "  \"2\" -- \"2\";\n"
          "}\n");
    auto reduced = run_cli({"graph", "--backend=int", "--tau=full", "--elem=12", "--reduced"});
    CHECK(reduced.out.find("\"2\" -- \"2\"") == std::string::npos);
}

TEST_CASE("graph command: disconnected 4-vertex graph for 6 in quad:-5") {
    auto r = run_cli({"graph", "--backend=quad:-5", "--tau=full", "--elem=6", "--format=json"});
    REQUIRE(r.code == cli::kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"].size() == 4);
    CHECK(j["edges"].size() == 2);
    CHECK(j["metrics"]["connected"] == false);
    CHECK(j["metrics"]["diameter"] == "inf");
}

TEST_CASE("factorizations command lists classes") {
    auto r = run_cli({"factorizations", "--backend=int", "--tau=full", "--elem=12",
                      "--format=json"});
    REQUIRE(r.code == cli::kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["counts"]["total"] == 4);
    CHECK(j["counts"]["nontrivial"] == 3);

    auto atomic = run_cli({"factorizations", "--backend=gapped-poly", "--tau=same-degree",
                           "--elem=x^8-x^9", "--atomic", "--format=json"});
    REQUIRE(atomic.code == cli::kExitOk);
    auto aj = nlohmann::json::parse(atomic.out);
    REQUIRE(aj["classes"].size() == 1);
    CHECK(aj["classes"][0]["factors"] ==
          nlohmann::json::array({"x^3-x^2", "x^3", "x^3"}));

    auto trivial = run_cli({"factorizations", "--tau=empty", "--elem=12", "--format=json"});
    REQUIRE(trivial.code == cli::kExitOk);
    auto tj = nlohmann::json::parse(trivial.out);
    REQUIRE(tj["classes"].size() == 1);
    CHECK(tj["classes"][0]["trivial"] == true);
}

TEST_CASE("harness command exit codes distinguish violations") {
    auto ok = run_cli({"harness", "--check=atom-iff-k1", "--backend=int", "--tau=full",
                       "--range=2:100"});
    CHECK(ok.code == cli::kExitOk);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["verdict"] == "consistent");

    // ufd-family on quad with 6 in range: still consistent (contingency table)
    auto quad = run_cli({"harness", "--check=ufd-family", "--backend=quad:-5", "--tau=full",
                         "--norm-bound=50"});
    CHECK(quad.code == cli::kExitOk);
}

TEST_CASE("usage, parse and cap errors have distinct exit codes and one-line messages") {
    auto usage = run_cli({"graph", "--elem=12", "--tau=unknown-relation"});
    CHECK(usage.code == cli::kExitUsage);
    CHECK(usage.err.starts_with("taugraph: error: usage: "));
    CHECK(std::count(usage.err.begin(), usage.err.end(), '\n') == 1);

    auto parse = run_cli({"graph", "--backend=gapped-poly", "--tau=full", "--elem=x^3+x"});
    CHECK(parse.code == cli::kExitParse);
    CHECK(parse.err.starts_with("taugraph: error: parse: "));

    auto unit = run_cli({"graph", "--backend=int", "--tau=full", "--elem=1"});
    CHECK(unit.code == cli::kExitParse);

    auto cap = run_cli({"factorizations", "--backend=int", "--tau=full", "--elem=360",
                        "--max-factorizations=2"});
    CHECK(cap.code == cli::kExitCap);
    CHECK(cap.err.starts_with("taugraph: error: cap: "));

    auto badcheck = run_cli({"harness", "--check=nope", "--range=2:10"});
    CHECK(badcheck.code == cli::kExitUsage);

    auto badsample = run_cli({"harness", "--check=classify", "--backend=gapped-poly",
                              "--tau=same-degree", "--range=2:10"});
    CHECK(badsample.code == cli::kExitUsage); // ranges are an integer-backend thing

    auto missing = run_cli({"graph"});
    CHECK(missing.code == cli::kExitUsage);
}

TEST_CASE("identical invocations produce byte-identical output") {
    std::vector<std::vector<std::string>> cases{
        {"graph", "--backend=gapped-poly", "--tau=full", "--elem=x^8-x^9", "--format=json"},
        {"factorizations", "--backend=quad:-5", "--tau=full", "--elem=6", "--format=json"},
        {"harness", "--check=classify", "--backend=int", "--tau=parity", "--range=2:60"},
        {"harness", "--check=relation-properties", "--backend=int", "--tau=coprime",
         "--range=2:30"},
    };
    for (const auto& args : cases) {
        CAPTURE(args[0]);
        auto a = run_cli(args);
        auto b = run_cli(args);
        REQUIRE(a.code == b.code);
        REQUIRE(a.out == b.out);
    }
}

TEST_CASE("config file mirrors command-line flags") {
    std::string path = "taugraph_test_config.ini";
    {
        std::ofstream f(path);
        f << "[graph]\n"
          << "backend=int\n"
          << "tau=full\n"
          << "elem=12\n";
    }
    auto from_file = run_cli({"--config", path});
    auto from_flags = run_cli({"graph", "--backend=int", "--tau=full", "--elem=12"});
    CHECK(from_file.code == from_flags.code);
    CHECK(from_file.out == from_flags.out);
    std::remove(path.c_str());
}

TEST_CASE("--output writes the same bytes to a file") {
    std::string path = "taugraph_test_out.dot";
    auto to_stdout = run_cli({"graph", "--backend=int", "--tau=full", "--elem=12"});
    auto to_file =
        run_cli({"graph", "--backend=int", "--tau=full", "--elem=12", "--output", path});
    REQUIRE(to_file.code == cli::kExitOk);
    CHECK(to_file.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == to_stdout.out);
    std::remove(path.c_str());
}

TEST_CASE("elems lists drive polynomial harness samples") {
    auto r = run_cli({"harness", "--check=atom-iff-k1", "--backend=gapped-poly",
                      "--tau=same-degree", "--elems=x^5,x^7,x^8-x^9"});
    REQUIRE(r.code == cli::kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["elements"].size() == 3);
    CHECK(j["sample"] == "list[3]");
}

TEST_CASE("help is help") {
    auto r = run_cli({"--help"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("graph") != std::string::npos);
}
