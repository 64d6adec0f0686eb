#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homres/workspace.hpp"

using namespace homres;

TEST_CASE("serialization round-trips byte-identically") {
    Workspace w = fixture_workspace();
    std::string once = serialize(w);
    std::string twice = serialize(parse_workspace(once));
    CHECK(once == twice);
    CHECK(serialize(w) == once);  // determinism across calls
    CHECK(once.back() == '\n');
}

TEST_CASE("parsed fixture workspace resolves all names") {
    Workspace w = parse_workspace(serialize(fixture_workspace()));
    CHECK(w.algebras.size() == 3);
    CHECK(w.module("K1").dim == 1);
    CHECK(w.module("REG1").dim == 2);
    CHECK(w.module("LAMBDA").dim == 3);
    CHECK(w.morphism("soc_inc").target.name == "REG1");
    CHECK(w.subcategory("add(REG1+K1)").generators.size() == 2);
    CHECK(w.sequence("nonsplit").length() == 2);
    CHECK(is_exact(padded(w.sequence("nonsplit"))).exact);
    CHECK_THROWS_AS((void)w.module("NOPE"), WorkspaceError);
    CHECK_THROWS_AS((void)w.sequence("NOPE"), WorkspaceError);
}

TEST_CASE("integers are reduced mod p on load") {
    Workspace w = parse_workspace(R"({
      "algebras": {"F": {"p": 2, "dim": 1, "unit": [3], "mult": [5]}},
      "modules": {"M": {"algebra": "F", "dim": 1, "action": [[-1]]}}
    })");
    CHECK(w.algebra("F")->unit[0] == 1);
    CHECK(w.algebra("F")->mult[0] == 1);
    CHECK(w.module("M").action[0].at(0, 0) == 1);
}

TEST_CASE("malformed input is rejected with a structural error") {
    CHECK_THROWS_AS(parse_workspace("{ truncated"), WorkspaceError);
    CHECK_THROWS_AS(parse_workspace("[1,2]"), WorkspaceError);
    // dangling module reference
    CHECK_THROWS_AS(parse_workspace(R"({
      "modules": {"M": {"algebra": "NOPE", "dim": 0, "action": []}}
    })"),
                    WorkspaceError);
    // wrong matrix size
    CHECK_THROWS_AS(parse_workspace(R"({
      "algebras": {"F": {"p": 2, "dim": 1, "unit": [1], "mult": [1]}},
      "modules": {"M": {"algebra": "F", "dim": 2, "action": [[1, 0]]}}
    })"),
                    WorkspaceError);
    // composite modulus
    CHECK_THROWS_AS(parse_workspace(R"({
      "algebras": {"F": {"p": 4, "dim": 1, "unit": [1], "mult": [1]}}
    })"),
                    WorkspaceError);
    // non-composable sequence
    CHECK_THROWS(parse_workspace(R"({
      "algebras": {"F": {"p": 2, "dim": 1, "unit": [1], "mult": [1]}},
      "modules": {"M": {"algebra": "F", "dim": 1, "action": [[1]]},
                  "N": {"algebra": "F", "dim": 2, "action": [[1,0,0,1]]}},
      "morphisms": {"f": {"source": "M", "target": "N", "matrix": [1, 0]}},
      "sequences": {"s": {"maps": ["f", "f"]}}
    })"));
}

TEST_CASE("DOT rendering lists nodes, dims, ranks and exactness marks") {
    Workspace w = fixture_workspace();
    std::map<std::string, Sequence> chains{{"nonsplit", w.sequence("nonsplit")}};
    std::string dot = to_dot(chains);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("K1 (dim 1)") != std::string::npos);
    CHECK(dot.find("REG1 (dim 2)") != std::string::npos);
    CHECK(dot.find("rank 1, exact") != std::string::npos);
    CHECK(to_dot(chains) == dot);  // deterministic
}
