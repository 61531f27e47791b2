#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(LJV_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string("--input ") + LJV_DATA_DIR + "/" + name; }

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("sr on I_1")
{
    auto r = run("sr " + data("i1.sr"));
    CHECK(r.code == 0);
    CHECK(r.out.find("2-linear") != std::string::npos);
    CHECK(r.out.find("4 lines") != std::string::npos);
    CHECK(r.out.find("ara = 4") != std::string::npos);
    CHECK(r.out.find("depth = 2") != std::string::npos);
    auto j = json_of(run("sr --format json " + data("i1.sr")));
    CHECK(j["schema"] == 1);
    CHECK(j["line_count"] == 4);
    CHECK(j["sums"].size() == 4);
    CHECK(j["invariants"]["ara"] == 4);
    CHECK(j["oracle"]["agrees"] == true);
}

TEST_CASE("sr rejects the 4-cycle with a negative verdict")
{
    CHECK(run("sr " + data("four_cycle.sr")).code == 1);
}

TEST_CASE("ferrer")
{
    auto j = json_of(run("ferrer --lambda \"2 1\" --format json"));
    CHECK(j["projdim"] == 2);
    CHECK(j["generators"] == nlohmann::json::array({"x1*y1", "x1*y2", "x2*y1"}));
    CHECK(j["oracle"]["agrees"] == true);
    CHECK(run("ferrer --lambda \"1 2\"").code == 2);
}

TEST_CASE("check and order")
{
    CHECK(run("check " + data("example1.arr")).code == 0);
    CHECK(run("check " + data("example1.json")).code == 0);
    CHECK(run("check " + data("example1_shuffled.arr")).code == 1);
    auto o = json_of(run("order --format json " + data("example1_shuffled.arr")));
    CHECK(o["found"] == true);
    CHECK(run("order " + data("triangle.arr")).code == 1);
    CHECK(run("order --budget-nodes 2 " + data("triangle.arr")).code == 3);
}

TEST_CASE("malformed input exits with 2 and a location")
{
    auto r = run("check " + data("malformed.arr"));
    CHECK(r.code == 2);
    CHECK(r.out.find("3:") != std::string::npos);
    CHECK(run("check --input /nonexistent/file").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("decompose, tableau, invariants, extend")
{
    auto d = run("decompose " + data("example1.arr"));
    CHECK(d.code == 0);
    CHECK(d.out.find("generators:") != std::string::npos);
    auto t = json_of(run("tableau --format json " + data("example1.arr")));
    CHECK(t["lines"].size() == 4);
    CHECK(t["properties_ok"] == true);
    CHECK(t["sv"]["ok"] == true);
    CHECK(t["ara"] == 4);
    auto shuffled = json_of(run("tableau --format json " + data("example1_shuffled.arr")));
    CHECK(shuffled["ara"] == 4);
    auto i = json_of(run("invariants --format json " + data("example1.arr")));
    CHECK(i["depth"] == 3);
    CHECK(i["cd"] == 4);
    CHECK(i["conn_dim_affine"] == 2);
    auto e = json_of(run("extend --blocks \"1 1 1 1\" --format json " + data("example1.arr")));
    CHECK(e["depth"] == 3);
}

TEST_CASE("simplicial")
{
    auto s = json_of(run("simplicial --format json " + data("simplicial_example.json")));
    CHECK(s["components"].size() == 3);
    auto a = json_of(run("simplicial --ara --format json " + data("ara_example.json")));
    CHECK(a["ara"] == 8);
    CHECK(a["stci"] == true);
}

TEST_CASE("oracle subcommands")
{
    auto b = json_of(run("oracle betti --format json " + data("i1.sr")));
    CHECK(b["projdim"] == 4);
    CHECK(b["reg"] == 1);
    CHECK(run("oracle betti --max-vars 5 " + data("i1.sr")).code == 3);
    auto v = json_of(run("oracle verify-radical --gf 2 --format json " + data("example1.arr")));
    CHECK(v["exact_vanishing"] == true);
    CHECK(v["points"] == 128);
}

TEST_CASE("identical configuration gives identical bytes")
{
    auto a = run("oracle verify-radical --gf 101 --seed 9 --format json " + data("example1.arr"));
    auto b = run("oracle verify-radical --gf 101 --seed 9 --format json " + data("example1.arr"));
    CHECK(a.out == b.out);
    CHECK(run("sr " + data("i3.sr")).out == run("sr " + data("i3.sr")).out);
}
