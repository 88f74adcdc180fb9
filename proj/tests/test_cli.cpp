#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "magnetite/cli.hpp"

using magnetite::cli::run_command;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
    return std::string(MAGNETITE_TEST_DATA) + "/" + name;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(MAGNETITE_TEST_GOLDEN) + "/" + name,
                     std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze N") {
    RunResult r = run({"analyze", data("n.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("sharp: yes") != std::string::npos);
    CHECK(r.out.find("minimal generators of the sharp quotient: {(1)}") !=
          std::string::npos);
    CHECK(r.out.find("pure magnet count: 2") != std::string::npos);
}

TEST_CASE("analyze ex4 json matches the golden bytes") {
    RunResult r = run({"analyze", data("ex4.json"), "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("analyze_ex4.json"));
}

TEST_CASE("text and json reports carry the same numbers") {
    RunResult text = run({"analyze", data("ex4.json")});
    RunResult js = run({"analyze", data("ex4.json"), "--json"});
    json parsed = json::parse(js.out);
    std::string count = parsed["pure_magnet_count"].get<std::string>();
    CHECK(text.out.find("pure magnet count: " + count) != std::string::npos);
    CHECK(parsed["sharp"] == false);
    CHECK(text.out.find("sharp: no") != std::string::npos);

    RunResult vtext = run({"verify", data("n23.json"), "--max-degree", "8"});
    RunResult vjson = run({"verify", data("n23.json"), "--max-degree", "8", "--json"});
    json vparsed = json::parse(vjson.out);
    CHECK(vtext.out.find("classes (sound up to the truncation): " +
                         std::to_string(vparsed["classes"].get<std::size_t>())) !=
          std::string::npos);
    CHECK(vtext.out.find("predicted pure magnet count: " +
                         vparsed["predicted_count"].get<std::string>()) !=
          std::string::npos);
}

TEST_CASE("pure-magnets ex4 list matches the golden bytes") {
    RunResult r = run({"pure-magnets", data("ex4.json"), "--list", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("pure_magnets_ex4.json"));
    json parsed = json::parse(r.out);
    CHECK(parsed["magnets"].size() == 5);
}

TEST_CASE("verify on N acting on dN") {
    RunResult r = run({"verify", data("n.json"), "--action-on", data("d2.json"),
                       "--max-degree", "8", "--json"});
    CHECK(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["verdict"] == "match");
    CHECK(parsed["exactness"] == true);
    CHECK(parsed["classes"] == 2);
}

TEST_CASE("classify and is-pure") {
    RunResult r = run({"classify", data("n.json"), "--magnet", data("n23.json"),
                       "--json"});
    CHECK(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["zero"] == true);

    RunResult p = run({"is-pure", data("zxn.json"), "--magnet",
                       data("zcross0.json"), "--json"});
    CHECK(p.code == 0);
    CHECK(json::parse(p.out)["pure"] == true);
}

TEST_CASE("attractor report") {
    RunResult r = run({"attractor", data("n.json"), "--magnet", data("n23.json"),
                       "--degree", "5", "--json"});
    CHECK(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["empty_scheme"] == false);
    CHECK(parsed["ideal_elements"].size() == 5);
    CHECK(parsed["basis"].size() == 1);
}

TEST_CASE("exit code 1 on mathematical validation failures") {
    // Magnet from a different ambient group.
    RunResult r = run({"classify", data("n.json"), "--magnet", data("zxn.json")});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());

    // Minimal generators of a non-sharp monoid.
    RunResult m = run({"min-generators", data("zxn.json")});
    CHECK(m.code == 1);

    // Target not contained in the acting monoid.
    RunResult v = run({"verify", data("d2.json"), "--action-on", data("n.json"),
                       "--max-degree", "4"});
    CHECK(v.code == 1);
}

TEST_CASE("exit code 2 on resource limits") {
    RunResult r = run({"attractor", data("n.json"), "--magnet", data("n23.json"),
                       "--degree", "50", "--ball-cap", "10"});
    CHECK(r.code == 2);
}

TEST_CASE("exit code 3 on parse errors") {
    CHECK(run({"analyze", data("bad_syntax.json")}).code == 3);
    CHECK(run({"analyze", data("bad_length.json")}).code == 3);
    CHECK(run({"analyze", data("bad_torsion.json")}).code == 3);
    CHECK(run({"analyze", data("missing_file.json")}).code == 3);
    CHECK(run({"frobulate", data("n.json")}).code == 3);
    CHECK(run({}).code == 3);
}

TEST_CASE("ball cap environment variable") {
    setenv("MAGNETITE_BALL_CAP", "10", 1);
    RunResult capped = run({"attractor", data("n.json"), "--magnet",
                            data("n23.json"), "--degree", "50"});
    CHECK(capped.code == 2);
    // The explicit flag wins over the environment.
    RunResult flag = run({"attractor", data("n.json"), "--magnet",
                          data("n23.json"), "--degree", "12", "--ball-cap",
                          "100000"});
    CHECK(flag.code == 0);
    unsetenv("MAGNETITE_BALL_CAP");
}

TEST_CASE("seed changes nothing observable") {
    RunResult a = run({"verify", data("n23.json"), "--max-degree", "8", "--json"});
    RunResult b = run({"verify", data("n23.json"), "--max-degree", "8", "--json",
                       "--seed", "31337"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("help exits cleanly") {
    RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("analyze") != std::string::npos);
}

}  // TEST_SUITE
