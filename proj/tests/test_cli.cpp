#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "csf/cli.hpp"
#include "csf/formulas.hpp"
#include "csf/json_io.hpp"

using namespace csf;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

int count_prefix(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    int count = 0;
    for (std::string line; std::getline(in, line);)
        if (line.rfind(prefix, 0) == 0) ++count;
    return count;
}

}  // namespace

TEST_CASE("compute prints the projected expansion") {
    auto r = call({"compute", "tadpole:4,1", "--basis", "e"});
    CHECK(r.code == 0);
    CHECK(r.out == "15*e[5] + 9*e[4,1] + 3*e[3,2] + 1*e[2,2,1]\n");
    CHECK(call({"compute", "hat:2,3,0"}).out == "10*Lambda[5] + 6*Lambda[3,2] + 2*Lambda[2,3] + 6*Lambda[1,4]\n");
    CHECK(call({"compute", "cycle-ribbon:5"}).out == "4*R[1,2,1,1] + 6*R[1,1,2,1] + 30*R[1,1,1,1,1]\n");
    CHECK(call({"compute", "cycle-psi:2"}).out == "-1*Psi[2] + 1*Psi[1,1]\n");
    CHECK(call({"compute", "cycle:2", "--basis", "p"}).out == "-1*p[2] + 1*p[1,1]\n");
}

TEST_CASE("compute in other bases agrees after projection") {
    for (const char* basis : {"Psi", "R", "S"}) {
        auto r = call({"compute", "tadpole:4,1", "--basis", basis, "--format", "json"});
        REQUIRE(r.code == 0);
        NSymPoly f = nsym_from_json(nlohmann::json::parse(r.out));
        CHECK(basis_name(f.basis()) == std::string(basis));
        CHECK(project_to_e(f) == project_to_e(elementary_expansion(FamilySpec::parse("tadpole:4,1"))));
    }
}

TEST_CASE("json output round-trips") {
    auto r = call({"compute", "hat:1,4,1", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["basis"] == "Lambda");
    CHECK(nsym_from_json(j) == elementary_expansion(FamilySpec::parse("hat:1,4,1")));
    auto e = call({"compute", "tadpole:4,1", "--basis", "e", "--format", "json"});
    auto je = nlohmann::json::parse(e.out);
    CHECK(je["terms"][0] == nlohmann::json{{"partition", {5}}, {"num", "15"}, {"den", "1"}});
    CHECK(to_json(sym_from_json(je)) == je);
    Graph g = graph_from_json(nlohmann::json::parse(R"({"n":4,"edges":[[0,1],[2,1],[2,3]]})"));
    CHECK(graph_from_json(to_json(g)) == g);
}

TEST_CASE("oracle on a JSON graph") {
    auto r = call({"oracle", "--graph", R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})", "--basis", "e"});
    CHECK(r.code == 0);
    CHECK(r.out == "6*e[3]\n");
    CHECK(call({"oracle", "path:3", "--basis", "p"}).out == "1*p[3] - 2*p[2,1] + 1*p[1,1,1]\n");
    CHECK(call({"oracle", "complete:8"}).code == 2);
    CHECK(call({"oracle", "complete:8", "--subset-cap", "28"}).out == "40320*e[8]\n");
}

TEST_CASE("verify sweeps") {
    auto r = call({"verify", "cycle-ribbon", "--max-size", "8"});
    CHECK(r.code == 0);
    CHECK(count_prefix(r.out, "PASS") == 7);
    CHECK(count_prefix(r.out, "FAIL") == 0);
    auto t = call({"verify", "tadpole", "--max-size", "6"});
    CHECK(t.code == 0);
    CHECK(count_prefix(t.out, "PASS ") > 5);
}

TEST_CASE("positivity") {
    auto r = call({"positivity", "spider:1,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("e-positive: no") != std::string::npos);
    CHECK(r.out.find("witness: e[2,2] = -2") != std::string::npos);
    auto h = call({"positivity", "hat:1,4,1"});
    CHECK(h.out.find("e-positive: yes") != std::string::npos);
    CHECK(h.out.find("Lambda-positive closed form: yes") != std::string::npos);
}

TEST_CASE("enumerate") {
    CHECK(call({"enumerate", "compositions", "3"}).out == "3\n2,1\n1,2\n1,1,1\n");
    CHECK(call({"enumerate", "hooks", "4"}).out == "1,1,1,1\n1,1,2\n1,3\n4\n");
    CHECK(call({"enumerate", "refinements", "2,1"}).out == "2,1\n1,1,1\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"compute"}).code == 2);
    CHECK(call({"compute", "tadpole:1,1"}).code == 2);
    CHECK(call({"compute", "tadpole:4,1", "--basis", "x"}).code == 2);
    CHECK(call({"verify", "nosuch"}).code == 2);
    CHECK(call({"oracle", "--graph", "{not json"}).code == 2);
    CHECK(call({"oracle", "--graph", R"({"n":2,"edges":[[0,0]]})"}).code == 2);
    CHECK(call({"enumerate", "hooks", "a"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
    auto a = call({"compute", "barbell:3,2,2", "--basis", "e"});
    auto b = call({"compute", "barbell:3,2,2", "--basis", "e"});
    CHECK(a.out == b.out);
    CHECK(a.out == "28*e[7] + 20*e[6,1] + 12*e[5,2] + 68*e[4,3] + 16*e[3,3,1]\n");
}
