#include "treestab/cli.hpp"
#include "treestab/families.hpp"
#include "treestab/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace treestab;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "",
               const std::optional<std::string>& guard_env = std::nullopt) {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, in, out, err, guard_env);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("treestab_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("family tokens") {
    CHECK(cli::family_from_tokens({"K", "5"}, 1) == families::complete(5));
    CHECK(cli::family_from_tokens({"K5"}, 1) == families::complete(5));
    CHECK(cli::family_from_tokens({"Kmn", "2", "3"}, 1) == families::complete_bipartite(2, 3));
    CHECK(cli::family_from_tokens({"K2,3"}, 1) == families::complete_bipartite(2, 3));
    CHECK(cli::family_from_tokens({"C6"}, 1) == families::cycle(6));
    CHECK(cli::family_from_tokens({"domino"}, 1) == families::domino());
    CHECK(cli::family_from_tokens({"random", "6", "0.5"}, 9) == cli::family_from_tokens({"random", "6", "0.5"}, 9));
    CHECK_THROWS_AS(cli::family_from_tokens({"Q", "3"}, 1), std::runtime_error);
    CHECK_THROWS_AS(cli::family_from_tokens({"K", "x"}, 1), std::runtime_error);
    CHECK_THROWS_AS(cli::family_from_tokens({}, 1), std::runtime_error);
}

TEST_CASE("weights parsing") {
    EdgeWeights w = cli::parse_weights("# weights\n0 1 2\n1 2 -3/2\n");
    CHECK(w.at({0, 1}) == 2);
    CHECK(w.at({2, 1}) == Rational(-3, 2));
    CHECK_THROWS_AS(cli::parse_weights("0 1\n"), ParseError);
    CHECK_THROWS_AS(cli::parse_weights("0 1 x\n"), ParseError);
}

TEST_CASE("poly and factored output") {
    Result k5 = run_cli({"poly", "--factored", "--family", "K 5"});
    CHECK(k5.code == 0);
    CHECK(k5.out == "(x0 + x1 + x2 + x3 + x4)^3\n");

    Result k23 = run_cli({"poly", "--factored", "--family", "Kmn 2 3"});
    CHECK(k23.out == "(x0 + x1)^2*(x2 + x3 + x4)\n");

    Result c4 = run_cli({"poly", "-"}, "n 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(c4.code == 0);
    CHECK(c4.out == "x0*x1 + x0*x3 + x1*x2 + x2*x3\n");

    Result c5 = run_cli({"poly", "--factored", "--family", "C 5"});
    CHECK(c5.code == 1);
    CHECK(c5.err.find("not distance-hereditary") != std::string::npos);

    Result json = run_cli({"--format", "json", "poly", "--text", "Bw"});
    CHECK(Json::parse(json.out)["polynomial"] == "x0 + x1 + x2");
}

TEST_CASE("edge polynomial legend") {
    Result r = run_cli({"edgepoly", "--family", "K 3"});
    CHECK(r.code == 0);
    CHECK(r.out == "# x0 = 0-1\n# x1 = 0-2\n# x2 = 1-2\nx0*x1 + x0*x2 + x1*x2\n");
}

TEST_CASE("weighted polynomial and sign check") {
    std::string wfile = temp_file("w_k3", "0 1 -2\n0 2 1\n1 2 1\n");
    Result r = run_cli({"wpoly", "--family", "K 3", "--weights", wfile});
    CHECK(r.code == 0);
    CHECK(r.out.find("-2*x0 - 2*x1 + x2") != std::string::npos);
    CHECK(r.out.find("mixed_sign_unstable") != std::string::npos);

    std::string bad = temp_file("w_bad", "0 1 1\n");
    CHECK(run_cli({"wpoly", "--family", "K 3", "--weights", bad}).code == 2);
    CHECK(run_cli({"wpoly", "--family", "K 3"}).code == 2);
}

TEST_CASE("trees") {
    CHECK(run_cli({"trees", "--family", "K 6"}).out == "1296\n");
    Result listed = run_cli({"--format", "json", "trees", "--list", "--family", "C 4"});
    Json j = Json::parse(listed.out);
    CHECK(j["count"] == "4");
    CHECK(j["trees"].size() == 4);
}

TEST_CASE("dh, stability and check-cert") {
    Result dh = run_cli({"dh", "--family", "C 4"});
    CHECK(dh.out.rfind("distance-hereditary: yes\n", 0) == 0);
    Result house_dh = run_cli({"--format", "json", "dh", "--family", "house"});
    CHECK(Json::parse(house_dh.out)["witness"]["kind"] == "house");

    Result stable = run_cli({"stability", "--family", "K 4"});
    CHECK(stable.out == "stable\nP = (x0 + x1 + x2 + x3)^2\n");

    Result gem = run_cli({"--format", "json", "stability", "--family", "gem"});
    CHECK(gem.code == 0);
    Json verdict = Json::parse(gem.out);
    CHECK(verdict["stable"] == false);
    CHECK(verdict["reduced"] == "x0^3 + 2*x0^2 + 2*x0");

    // closed loop: the emitted verdict validates against the same graph
    std::string cert = temp_file("gem_verdict.json", gem.out);
    Result ok = run_cli({"check-cert", "--family", "gem", "--cert", cert});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid\n");

    // the gem certificate makes no sense on the house: its reduction is real-rooted or malformed
    Result wrong = run_cli({"check-cert", "--family", "house", "--cert", cert});
    CHECK(wrong.code != 0);

    Json tampered = verdict["certificate"];
    tampered["terminal"] = Json{{"kind", "exact_zero"}, {"point", Json::array({Json{{"re", "0"}, {"im", "1"}}})}};
    std::string tfile = temp_file("gem_tampered.json", tampered.dump());
    Result bad = run_cli({"check-cert", "--family", "gem", "--cert", tfile});
    CHECK(bad.code == 1);
    CHECK(bad.out.rfind("invalid", 0) == 0);

    std::string garbage = temp_file("garbage.json", "{\"subgraph\": 3}");
    CHECK(run_cli({"check-cert", "--family", "gem", "--cert", garbage}).code == 2);
    Json far = verdict["certificate"];
    far["ops"][0]["var"] = 17;
    std::string ffile = temp_file("gem_far.json", far.dump());
    CHECK(run_cli({"check-cert", "--family", "gem", "--cert", ffile}).code == 2);
}

TEST_CASE("newton and weak stability") {
    Result n = run_cli({"newton", "--family", "C 4"});
    CHECK(n.code == 0);
    CHECK(n.out.find("saturated") != std::string::npos);
    Result c6 = run_cli({"--format", "json", "weakstable", "--family", "C 6"});
    CHECK(Json::parse(c6.out)["weakly_stable"] == false);
    Result c5 = run_cli({"weakstable", "--family", "C 5"});
    CHECK(c5.out == "weakly stable (52 partitions checked)\n");
}

TEST_CASE("family output round trips through the parser") {
    Result el = run_cli({"family", "domino"});
    CHECK(parse_graph(el.out, GraphFormat::EdgeList) == families::domino());
    Result g6 = run_cli({"family", "--graph6", "K", "5"});
    CHECK(parse_graph(g6.out, GraphFormat::Graph6) == families::complete(5));
}

TEST_CASE("census") {
    Result r = run_cli({"--format", "json", "census", "5"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["disagreements"] == 0);
    CHECK(run_cli({"census", "9"}).code == 2);
}

TEST_CASE("input errors and guard precedence") {
    Result parse = run_cli({"poly", "-"}, "n 3\n0 1\n1 1\n");
    CHECK(parse.code == 2);
    CHECK(parse.err.find("line 3") != std::string::npos);

    CHECK(run_cli({"poly", "--text", "Bw", "--family", "K 3"}).code == 2);
    CHECK(run_cli({"poly", "/nonexistent/graph.txt"}).code == 2);
    CHECK(run_cli({"poly", "-"}, "n 4\n0 1\n2 3\n").code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"--format", "xml", "poly", "--family", "K 3"}).code == 2);

    Result env = run_cli({"poly", "--family", "K 6"}, "", std::string("100"));
    CHECK(env.code == 2);
    CHECK(env.err.rfind("guard:", 0) == 0);
    CHECK(run_cli({"--max-trees", "2000", "poly", "--family", "K 6"}, "", std::string("100")).code == 0);
    CHECK(run_cli({"--max-trees", "100", "poly", "--family", "K 6"}).code == 2);
    CHECK(run_cli({"poly", "--family", "K 6"}, "", std::string("lots")).code == 2);
}
