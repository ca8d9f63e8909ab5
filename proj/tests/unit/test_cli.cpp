#include "ringinv/literal.hpp"
#include "ringinv_cli/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#ifndef RINGINV_TEST_DATA
#error "RINGINV_TEST_DATA must point at tests/data"
#endif

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = ringinv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kData = RINGINV_TEST_DATA;

}  // namespace

TEST_CASE("compute prints the inverse") {
    auto r = run({"compute", "--ring", "zmod:7", "--op", "invert-along", "--a", "5", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    CHECK(r.err.empty());

    r = run({"compute", "--ring", "gqmat:2", "--op", "invert-along", "--a", "[[1,0],[1,0]]", "--d", "[[1,1],[0,0]]"});
    CHECK(r.code == 0);
    CHECK(r.out == "[[1/2,1/2],[0,0]]\n");

    CHECK(run({"compute", "--ring", "zmod:8", "--op", "drazin", "--a", "2"}).out == "0 index=3\n");
    CHECK(run({"compute", "--ring", "gqmat:2", "--op", "moore-penrose", "--a", "[[1,1],[1,1]]"}).out ==
          "[[1/4,1/4],[1/4,1/4]]\n");
    CHECK(run({"compute", "--ring", "zmod:9", "--op", "mp-left", "--a", "7"}).out == "4\n");
    CHECK(run({"compute", "--ring", "zmod:7", "--op", "unit-inverse", "--a", "3"}).out == "5\n");
    CHECK(run({"compute", "--ring", "zmod:7", "--op", "invert-along", "--a", "-2", "--d", "3"}).out == "3\n");
    CHECK(run({"compute", "--ring", "zmod:7", "--op", "penrose", "--a", "3", "--b", "5"}).out == "{1,2,3,4}\n");
}

TEST_CASE("compute with sigma") {
    auto r = run({"compute", "--ring", "zmod:9", "--op", "invert-along", "--a", "7", "--d", "4", "--sigma", "2",
                  "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["b"] == "4");
    CHECK(j["u"] == "2");
    CHECK(j["u_inv"] == "5");
    CHECK(j["sigma"] == "2");

    r = run({"compute", "--ring", "zmod:6", "--op", "invert-along", "--a", "4", "--d", "2", "--sigma", "3"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("not bijective") != std::string::npos);

    r = run({"compute", "--ring", "zmod:6", "--op", "invert-along", "--a", "4", "--d", "2", "--sigma", "3",
             "--bypass", "--d-inner", "2"});
    CHECK(r.code == 1);
    CHECK(r.out == "none (unit-criterion-failed)\n");
}

TEST_CASE("absent results exit with 1") {
    auto r = run({"compute", "--ring", "zmod:4", "--op", "group", "--a", "2", "--json"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["exists"] == false);
    CHECK(j["reason"] == "not-regular");
    CHECK(run({"compute", "--ring", "zmod:6", "--op", "unit-inverse", "--a", "3"}).out == "none (not-a-unit)\n");
}

TEST_CASE("json output round-trips through the literal grammar") {
    auto r = run({"compute", "--ring", "gqmat:2", "--op", "invert-along", "--a", "[[1,0],[1,0]]", "--d",
                  "[[1,1],[0,0]]", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto ring = ringinv::parse_ring_spec(j["ring"].get<std::string>());
    for (const char* key : {"a", "d", "b", "u", "u_inv", "v", "v_inv", "left_witness", "right_witness", "d_inner"}) {
        CAPTURE(key);
        const auto text = j[key].get<std::string>();
        CHECK(ringinv::format_element(ringinv::parse_element(ring, text)) == text);
    }
    CHECK(j["b"] == "[[1/2,1/2],[0,0]]");
    CHECK(j["left_witness"] == j["u_inv"]);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--ring", "zmod:9", "--law", "absorption-cross", "--sigma", "2", "--exhaustive"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 violated") != std::string::npos);

    r = run({"verify", "--ring", "zmod:9", "--law", "absorption-cross", "--sigma", "2", "--inputs",
             R"(["7","5","4","2"])", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["reports"].size() == 1);
    CHECK(j["reports"][0]["verdict"] == "holds");
    CHECK(j["reports"][0]["lhs"] == "6");
    CHECK(j["reports"][0]["inputs"] == nlohmann::json::array({"7", "5", "4", "2"}));

    r = run({"verify", "--ring", "gqmat:2", "--law", "absorption-cross", "--drop", "d1-eq-sigma-d2", "--inputs",
             R"([["[[1,0],[1,0]]","[[0,0],[1,1]]","[[1,1],[0,0]]","[[1,1],[1,1]]"]])"});
    CHECK(r.code == 1);
    CHECK(r.out.rfind("violated absorption-cross", 0) == 0);
    CHECK(r.out.find("lhs=[[1,1],[1/2,1/2]] rhs=[[1,1],[0,0]]") != std::string::npos);

    r = run({"verify", "--ring", "gqmat:2", "--law", "absorption", "--exhaustive", "--candidates",
             kData + "/crossed_pair.json"});
    CHECK(r.code == 0);
}

TEST_CASE("search") {
    auto r = run({"search", "--ring", "gqmat:2", "--law", "absorption-cross", "--drop", "d1-eq-sigma-d2",
                  "--candidates", kData + "/crossed_pair.json", "--limit", "0", "--json"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& rep : j["reports"]) {
        if (rep["inputs"] == nlohmann::json::array({"[[1,0],[1,0]]", "[[0,0],[1,1]]", "[[1,1],[0,0]]",
                                                    "[[1,1],[1,1]]"})) {
            found = true;
            CHECK(rep["lhs"] == "[[1,1],[1/2,1/2]]");
            CHECK(rep["rhs"] == "[[1,1],[0,0]]");
            CHECK(rep["hypotheses_met"] == true);
        }
    }
    CHECK(found);
    CHECK(j["violated"].get<int>() == static_cast<int>(j["reports"].size()));

    r = run({"search", "--ring", "zmod:5", "--law", "absorption", "--drop", "sigma-bijective"});
    CHECK(r.code == 0);
}

TEST_CASE("usage errors exit with 2") {
    const std::vector<std::vector<std::string>> bad = {
        {},
        {"frobnicate"},
        {"compute", "--ring", "zmod:7", "--op", "invert-along", "--a", "5"},
        {"compute", "--ring", "zmod:0", "--op", "group", "--a", "5"},
        {"compute", "--ring", "zmod:7", "--op", "group", "--a", "x"},
        {"compute", "--ring", "zmod:7", "--op", "teleport", "--a", "1"},
        {"compute", "--ring", "zmod:7", "--a", "1"},
        {"verify", "--ring", "zmod:7", "--law", "nope", "--exhaustive"},
        {"verify", "--ring", "zmod:7", "--law", "absorption"},
        {"verify", "--ring", "zmod:7", "--law", "absorption", "--exhaustive", "--inputs", "[\"1\",\"1\",\"1\"]"},
        {"verify", "--ring", "zmod:7", "--law", "absorption", "--inputs", "[\"1\",\"1\"]"},
        {"verify", "--ring", "gqmat:2", "--law", "absorption", "--exhaustive"},
        {"search", "--ring", "zmod:7", "--law", "absorption"},
        {"search", "--ring", "zmod:7", "--law", "absorption", "--drop", "gravity"},
        {"search", "--ring", "gqmat:2", "--law", "absorption", "--drop", "sigma-bijective", "--candidates",
         "/nonexistent.json"},
    };
    for (const auto& args : bad) {
        auto r = run(args);
        std::string joined;
        for (const auto& a : args) joined += a + ' ';
        CAPTURE(joined);
        CHECK(r.code == 2);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("identical argv gives identical bytes") {
    const std::vector<std::string> args = {"search", "--ring", "zmod:6", "--law", "along-sigma-criterion", "--drop",
                                           "sigma-bijective", "--limit", "0", "--threads", "4", "--json"};
    const auto first = run(args);
    for (int k = 0; k < 3; ++k) {
        CHECK(run(args).out == first.out);
    }
    auto single = args;
    single[10] = "1";
    CHECK(run(single).out == first.out);
}

TEST_CASE("help and law listing") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("compute") != std::string::npos);
    r = run({"laws"});
    CHECK(r.code == 0);
    CHECK(r.out.find("absorption-cross arity=4") != std::string::npos);
}
