#include "doctest.h"

#include "canord/cli.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

using namespace canord;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "canord");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

size_t count_of(const std::string& s, const std::string& what) {
    size_t k = 0;
    for (size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++k;
    return k;
}

}  // namespace

TEST_CASE("ranges and groups") {
    CHECK(cli::parse_range("3").lo == 3);
    CHECK(cli::parse_range("1..4").hi == 4);
    CHECK_THROWS_AS(cli::parse_range("4..1"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_range("a"), std::invalid_argument);
    CHECK(cli::parse_group("E6").rank == 6);
    CHECK(cli::parse_group("d5").letter == 'D');
    CHECK_THROWS_AS(cli::parse_group("Z9"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_group("E9"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_group("D3"), std::invalid_argument);
}

TEST_CASE("default sweep") {
    auto rows = cli::expand({});
    CHECK(std::is_sorted(rows.begin(), rows.end()));
    // A12 4, BL B L DL 6 each, BD 5, Anz 6x3, ADE 6 + 3 + 3
    CHECK(rows.size() == 4 + 24 + 5 + 18 + 12);
    cli::SweepConfig ade;
    ade.families = {Family::ADE};
    auto a = cli::expand(ade);
    REQUIRE(a.size() == 12);
    CHECK(a.front().label() == "A1");
    CHECK(a.back().label() == "E8");
}

TEST_CASE("verify") {
    Result a12 = call({"verify", "--type", "A12", "--e", "2"});
    CHECK(a12.code == 0);
    CHECK(a12.out.find("resolution 4, group 4") != std::string::npos);

    Result l = call({"verify", "--type", "L", "--n", "1"});
    CHECK(l.code == 0);
    CHECK(l.out.find("resolution 2, group 2") != std::string::npos);
    CHECK(l.out.find("skew-constructible: false") != std::string::npos);

    CHECK(call({"verify", "--type", "BD", "--n", "0"}).code == 2);
    CHECK(call({"verify", "--type", "BL"}).code == 2);
    CHECK(call({"verify", "--type", "Q", "--n", "1"}).code == 2);
    CHECK(call({"verify", "--group", "E7"}).code == 0);
    CHECK(call({"verify", "--type", "BL", "--n", "2", "--format", "yaml"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--help"}).code == 0);

    Result j = call({"verify", "--type", "Anz", "--n", "2", "--e", "3", "--format", "json"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["countGroup"] == 3);
    CHECK(parsed.dump(2) + "\n" == j.out);
}

TEST_CASE("table") {
    Result r = call({"table", "--families", "BL,B", "--n", "1..4", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 8);
    for (const auto& row : j) CHECK(row["agree"] == true);
    CHECK(j.dump(2) + "\n" == r.out);

    Result ade = call({"table", "--families", "ADE"});
    CHECK(ade.code == 0);
    CHECK(count_of(ade.out, "\n") == 12);
    CHECK(ade.out.rfind("E8", 0) == std::string::npos);  // sorted: A rows first
    CHECK(ade.out.find("A1 ") == 0);

    CHECK(call({"table", "--families", ""}).code == 2);
    CHECK(call({"table", "--families", "BD", "--n", "1"}).code == 2);  // clamps to nothing
}

TEST_CASE("quiver and lattice") {
    Result q = call({"quiver", "--group", "A3", "--dot"});
    CHECK(q.code == 0);
    CHECK(count_of(q.out, " -- ") == 4);
    Result z = call({"quiver", "--group", "Z9"});
    CHECK(z.code == 2);
    CHECK(z.err.find("unknown group") != std::string::npos);

    Result qj = call({"quiver", "--group", "E6", "--format", "json"});
    auto j = nlohmann::json::parse(qj.out);
    CHECK(j["dims"].size() == 7);
    CHECK(j["affineDiagram"] == true);

    Result lat = call({"lattice", "--type", "L", "--n", "2", "--dot"});
    CHECK(lat.code == 0);
    CHECK(count_of(lat.out, "e=2") >= 2);
    Result bd = call({"lattice", "--type", "BDn", "--n", "3", "--format", "json"});
    CHECK(bd.code == 0);
    CHECK(nlohmann::json::parse(bd.out).contains("curves"));
    CHECK(call({"lattice", "--type", "BL", "--n", "1..3"}).code == 2);
}
