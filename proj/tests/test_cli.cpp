#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "hopfchrom/serialize.hpp"

using namespace hopfchrom;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// ctest runs from the build directory, next to the binary.
RunResult run_cli(const std::string& args) {
    std::string cmd = "./hopfchrom " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe_ = popen(cmd.c_str(), "r");
    REQUIRE(pipe_ != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe_)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe_);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli chromsym reproduces the displayed rho row") {
    RunResult r = run_cli("--format json chromsym butterfly --irrep 4 --method wreath");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["schema"] == "hopfchrom/1");
    CHECK(j["X_gamma"]["text"] == "m[2,2,1] + 6*m[2,1,1,1] + 30*m[1,1,1,1,1]");
    // The table is printed alongside, so the index is meaningful.
    CHECK(j.contains("table"));
}

TEST_CASE("cli orbital value at 3") {
    RunResult r = run_cli("--format json chromsym butterfly --orbital");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    IntPolynomial p([&] {
        std::vector<Rational> coeffs;
        for (const auto& c : j["orbital_chromatic"]["polynomial"]) {
            if (c.is_string()) {
                std::string s = c.get<std::string>();
                auto slash = s.find('/');
                coeffs.emplace_back(std::stoll(s.substr(0, slash)),
                                    std::stoll(s.substr(slash + 1)));
            } else {
                coeffs.emplace_back(c.get<long long>());
            }
        }
        return coeffs;
    }());
    CHECK(p.eval_integer(3) == 3);
}

TEST_CASE("cli output is byte-stable") {
    RunResult a = run_cli("--format json chromsym butterfly --irrep 0");
    RunResult b = run_cli("--format json chromsym butterfly --irrep 0");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    RunResult t1 = run_cli("chartab P3");
    RunResult t2 = run_cli("chartab P3");
    CHECK(t1.output == t2.output);
}

TEST_CASE("cli methods agree on fixtures") {
    for (const std::string g : {"butterfly", "K4", "P4", "C5"}) {
        RunResult w = run_cli("--format json chromsym " + g + " --method wreath");
        RunResult d = run_cli("--format json chromsym " + g + " --method direct");
        Json jw = Json::parse(w.output), jd = Json::parse(d.output);
        CHECK(jw["X_gamma_all"] == jd["X_gamma_all"]);
    }
}

TEST_CASE("cli aut and graph6 input") {
    RunResult r = run_cli("--format json aut DK{");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["order"] == 8);
    // Named and graph6 input give identical output for the same class.
    RunResult named = run_cli("--format json aut butterfly");
    CHECK(named.output == r.output);
}

TEST_CASE("cli hopf product") {
    std::string vertex = R"([{"F": {"n": 1, "labels": []}, "irrep": 0, "coeff": 1}])";
    RunResult r = run_cli("--format json hopf product --instance young=subsets:2,H=Z2 '" +
                          vertex + "' '" + vertex + "'");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["result"].size() == 2);  // (Kbar_2, triv) + (Kbar_2, sign)
    for (const auto& term : j["result"]) {
        CHECK(term["F"]["n"] == 2);
        CHECK(term["coeff"] == 1);
    }
}

TEST_CASE("cli errors are machine readable with nonzero exit") {
    RunResult r = run_cli("--format json aut 'not-a-graph6@@'");
    CHECK(r.exit_code != 0);
    Json j = Json::parse(r.output);
    CHECK(j.contains("error"));
    CHECK(j["error"]["type"] == "parse_error");
}

TEST_CASE("cli verify youngsets suite exits zero") {
    RunResult r = run_cli("--format json verify --suite youngsets");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["pass"] == true);
}

TEST_CASE("serialization round trips") {
    // Graphs through edge-list json.
    Graph b = Graph::butterfly();
    CHECK(graph_from_json(graph_to_json(b)) == b);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), parse_error);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 0]]})")), parse_error);
    // Permutations as image arrays.
    Perm p = Perm::from_cycles("(0 2)(1 3)", 5);
    CHECK(perm_from_json(perm_to_json(p)) == p);
    // Hopf elements through the instance.
    HopfInstance inst(young_subsets(2), AbelianGroup::cyclic(2));
    std::map<YPoint, int> labels{{YPoint{1, 0}, 1}};
    auto [id, w] = inst.canonicalize(inst.make_function(3, labels));
    (void)w;
    HopfElement a{{MBasisKey{id, 1}, 3}, {MBasisKey{id, 0}, -2}};
    CHECK(hopf_element_from_json(inst, hopf_element_to_json(inst, a)) == a);
    // Instance selectors.
    auto [young, h] = parse_instance_selector("young=subsets:2,H=Z2");
    CHECK(young->name() == "subsets:2");
    CHECK(h.str() == "Z2");
    CHECK_THROWS_AS(parse_instance_selector("young=subsets:2"), parse_error);
    CHECK_THROWS_AS(parse_instance_selector("H=Z2"), parse_error);
}

TEST_CASE("cli reads graphs from files") {
    {
        std::FILE* f = std::fopen("cli_test_graph.json", "w");
        REQUIRE(f != nullptr);
        std::fputs(R"({"n": 3, "edges": [[0, 1], [1, 2]]})", f);
        std::fclose(f);
    }
    RunResult r = run_cli("--format json aut @cli_test_graph.json");
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.output)["order"] == 2);
    {
        std::FILE* f = std::fopen("cli_test_graph.g6", "w");
        REQUIRE(f != nullptr);
        std::fputs("DK{\n", f);
        std::fclose(f);
    }
    RunResult g6 = run_cli("--format json aut @cli_test_graph.g6");
    CHECK(g6.exit_code == 0);
    CHECK(Json::parse(g6.output)["order"] == 8);
    std::remove("cli_test_graph.json");
    std::remove("cli_test_graph.g6");
}
