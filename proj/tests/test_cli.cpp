// End-to-end checks of the pdyn binary: flags, exit codes, JSON schema
// basics, CSV/JSON value agreement.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using Json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command =
        std::string(PDYN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

Json parse_doc(const RunResult& result) {
    Json doc = Json::parse(result.out);
    REQUIRE(doc.contains("schema_version"));
    REQUIRE(doc.contains("command"));
    REQUIRE(doc.contains("argv"));
    REQUIRE(doc.contains("result"));
    REQUIRE(doc.contains("elapsed_ms"));
    CHECK(doc["schema_version"] == 1);
    return doc;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    // fields in this project never embed commas or quotes; split naively
    std::vector<std::vector<std::string>> rows;
    std::string line;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != '\n') {
            if (text[i] != '\r') line += text[i];
            continue;
        }
        if (!line.empty()) {
            std::vector<std::string> fields;
            std::string field;
            for (char c : line) {
                if (c == ',') {
                    fields.push_back(field);
                    field.clear();
                } else {
                    field += c;
                }
            }
            fields.push_back(field);
            rows.push_back(std::move(fields));
        }
        line.clear();
    }
    return rows;
}

std::string fixture_path(const std::string& name) {
    return std::string(PDYN_SOURCE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("orbit command serializes terms, tags and reason") {
    RunResult r = run_cli("orbit 3 --map collatz --stop-target 2");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    Json orbit = doc["result"]["orbit"];
    CHECK(orbit["terms"] ==
          Json::parse(R"(["3","10","5","16","8","4","2"])"));
    CHECK(orbit["truncation_reason"] == "target-reached");
    CHECK(orbit["branch_tags"][0] == "nondivisible");
    CHECK(orbit["stats"]["sum"] == "48");
    CHECK(orbit["stats"]["nondivisible"]["count"] == "2");
}

TEST_CASE("orbit command on a fixed point") {
    RunResult r = run_cli("orbit 0 --map collatz --steps 2");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    CHECK(doc["result"]["orbit"]["terms"] == Json::parse(R"(["0","0","0"])"));
}

TEST_CASE("missing map file is a map error") {
    CHECK(run_cli("orbit 1 --map missing.map").exit_code == 3);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("cycles --help").exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("orbit").exit_code == 2);
    CHECK(run_cli("nonsense 1").exit_code == 2);
    CHECK(run_cli("cycles --map collatz --range 5..1").exit_code == 2);
    CHECK(run_cli("cycles --map collatz --range five").exit_code == 2);
    CHECK(run_cli("cycles --map collatz --range 1..5 --format xml").exit_code ==
          2);
    CHECK(run_cli("identity --range 2..1").exit_code == 2);
}

TEST_CASE("verify certifies the trivial cycle") {
    RunResult r = run_cli("verify --map collatz --cycle 4,2,1 --checks t3,t4,eq1");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    CHECK(doc["result"]["all_pass"] == true);
    CHECK(doc["result"]["cycle"]["members"] == Json::parse(R"(["1","4","2"])"));
    REQUIRE(doc["result"]["checks"].size() == 3);
    for (const Json& check : doc["result"]["checks"])
        CHECK(check["status"] == "pass");
}

TEST_CASE("verify defaults to t3,t4,eq1 on Collatz") {
    RunResult r = run_cli("verify --map collatz --cycle 4,2,1");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    REQUIRE(doc["result"]["checks"].size() == 3);
    CHECK(doc["result"]["checks"][2]["check"] == "eq1");
}

TEST_CASE("verify rejects a non-cycle with exit 4") {
    CHECK(run_cli("verify --map collatz --cycle 1,4,3").exit_code == 4);
}

TEST_CASE("verify inverse identities") {
    RunResult r = run_cli("verify --map inverse-collatz --cycle 1,2,4 --checks inv");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    Json check = doc["result"]["checks"][0];
    CHECK(check["check"] == "inverse-identities");
    CHECK(check["lines"][0]["lhs"] == "21");
    CHECK(check["lines"][0]["rhs"] == "21");
}

TEST_CASE("coefficient checks on a special map exit 3") {
    CHECK(run_cli("verify --map inverse-collatz --cycle 1,2,4 --checks t3")
              .exit_code == 3);
}

TEST_CASE("padic-verify zero residual and special-map rejection") {
    RunResult r = run_cli("padic-verify 1 --map collatz --precision 6");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    CHECK(doc["result"]["pass"] == true);
    CHECK(doc["result"]["residual"]["residue"] == "0");
    CHECK(doc["result"]["residual"]["digits"] ==
          Json::parse("[0,0,0,0,0,0]"));

    CHECK(run_cli("padic-verify 3 --map collatz").exit_code == 0);
    CHECK(run_cli("padic-verify 1 --map inverse-collatz").exit_code == 3);
}

TEST_CASE("cycles finds only the trivial cycle on [1, 100]") {
    RunResult r = run_cli("cycles --map collatz --range 1..100");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    REQUIRE(doc["result"]["cycles"].size() == 1);
    CHECK(doc["result"]["cycles"][0]["members"] ==
          Json::parse(R"(["1","4","2"])"));
    CHECK(doc["result"]["unresolved"] == 0);
}

TEST_CASE("cycles JSON and CSV carry identical values") {
    RunResult json_run = run_cli("cycles --map collatz --range -100..-1");
    CHECK(json_run.exit_code == 0);
    Json doc = parse_doc(json_run);
    Json cycles = doc["result"]["cycles"];
    REQUIRE(cycles.size() == 3);
    CHECK(doc["result"]["unresolved"] == 0);
    CHECK(doc["result"]["scanned"] == "100");

    RunResult csv_run =
        run_cli("cycles --map collatz --range -100..-1 --format csv");
    CHECK(csv_run.exit_code == 0);
    auto rows = parse_csv(csv_run.out);
    REQUIRE(rows.size() == 4);  // header + 3 cycles
    CHECK(rows[0] == std::vector<std::string>{"index", "min_member", "length",
                                              "members", "certificates",
                                              "all_ok"});
    for (size_t i = 0; i < cycles.size(); ++i) {
        const Json& cycle = cycles[i];
        const auto& row = rows[i + 1];
        CHECK(row[1] == cycle["min_member"].get<std::string>());
        CHECK(row[2] == std::to_string(cycle["length"].get<int>()));
        std::string members;
        for (const Json& member : cycle["members"]) {
            if (!members.empty()) members += " ";
            members += member.get<std::string>();
        }
        CHECK(row[3] == members);
        CHECK(row[5] == "true");
    }
}

TEST_CASE("identity command asserts the Collatz gaps") {
    RunResult r = run_cli("identity --range 1..5");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    CHECK(doc["result"]["asserted"] == true);
    CHECK(doc["result"]["all_pass"] == true);
    Json rows = doc["result"]["rows"];
    REQUIRE(rows.size() == 5);
    const char* expected[] = {"0", "2", "4", "6", "8"};
    for (size_t i = 0; i < 5; ++i) {
        CHECK(rows[i]["gap"] == expected[i]);
        CHECK(rows[i]["pass"] == true);
    }

    RunResult csv_run = run_cli("identity --range 1..5 --format csv");
    auto csv_rows = parse_csv(csv_run.out);
    REQUIRE(csv_rows.size() == 6);
    for (size_t i = 0; i < 5; ++i) {
        CHECK(csv_rows[i + 1][0] == rows[i]["n"].get<std::string>());
        CHECK(csv_rows[i + 1][2] == rows[i]["gap"].get<std::string>());
        CHECK(csv_rows[i + 1][4] == "true");
    }
}

TEST_CASE("identity over a longer range passes every seed") {
    RunResult r = run_cli("identity --range 1..100");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    CHECK(doc["result"]["all_pass"] == true);
    CHECK(doc["result"]["rows"].size() == 100);
}

TEST_CASE("identity failure exits 1 when a seed cannot reach the target") {
    CHECK(run_cli("identity --range 27..27 --max-steps 5").exit_code == 1);
}

TEST_CASE("identity base case n = 2 has gap 2") {
    RunResult r = run_cli("identity --range 2..2 --absorbing 2");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    CHECK(doc["result"]["asserted"] == true);
    CHECK(doc["result"]["rows"][0]["gap"] == "2");
}

TEST_CASE("identity in scan mode reports gaps without asserting") {
    // non-Collatz map: data only, no pass column. Orbit 4,2,1 under
    // x/2 | x^2+1 gives S = 7 and a lone odd term 3, so the gap is 4.
    const std::string path = "/tmp/pdyn_scan_quad.map";
    {
        std::ofstream out(path);
        out << "p = 2\ndivisible = x\notherwise = x^2 + 1\n";
    }
    RunResult r =
        run_cli("identity --range 4..4 --map " + path + " --absorbing 1");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    CHECK(doc["result"]["asserted"] == false);
    Json row = doc["result"]["rows"][0];
    CHECK(row["reached"] == true);
    CHECK(row["gap"] == "4");
    CHECK_FALSE(row.contains("pass"));
    std::remove(path.c_str());
}

TEST_CASE("map files load from disk") {
    const std::string path = "/tmp/pdyn_test_quad.map";
    {
        std::ofstream out(path);
        out << "# x/2 when even, x^2+1 when odd\n";
        out << "p = 2\n";
        out << "divisible = x\n";
        out << "otherwise = x^2 + 1\n";
    }
    RunResult r = run_cli("orbit 1 --map " + path + " --steps 4");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    // the second revisit of 2 closes the loop
    CHECK(doc["result"]["orbit"]["terms"] ==
          Json::parse(R"(["1","2","1","2"])"));
    CHECK(doc["result"]["orbit"]["truncation_reason"] == "cycle-closed");

    {
        std::ofstream out(path);
        out << "p = 2\ndivisible = x\n";  // missing 'otherwise'
    }
    CHECK(run_cli("orbit 1 --map " + path).exit_code == 3);
    std::remove(path.c_str());
}

TEST_CASE("shipped sample maps parse") {
    RunResult r = run_cli("orbit 6 --map " + fixture_path("maps/collatz.map") +
                          " --stop-target 1");
    CHECK(r.exit_code == 0);
    Json doc = parse_doc(r);
    CHECK(doc["result"]["orbit"]["truncation_reason"] == "target-reached");
}
