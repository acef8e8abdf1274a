#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "latin/serialize.hpp"
#include "helpers.hpp"

using namespace latin;
using namespace testutil;

TEST_CASE("cuboid JSON roundtrip") {
    const auto c = exampleCuboid();
    const auto doc = cuboidToJson(c);
    CHECK(doc["sizes"] == nlohmann::json({3, 2, 2}));
    CHECK(doc["class"] == 2);
    CHECK(doc["order"] == 6);
    CHECK(cuboidFromJson(doc) == c);

    // EMPTY cells serialize as null.
    const auto p = examplePartial();
    const auto pdoc = cuboidToJson(p);
    CHECK(pdoc["cells"][0].is_null());
    CHECK(cuboidFromJson(pdoc) == p);
}

TEST_CASE("one-based display shifts symbols on output only") {
    const auto doc = cuboidToJson(exampleCuboid(), true);
    CHECK(doc["cells"][0] == 1);
    CHECK(doc["cells"][11] == 1);
}

TEST_CASE("code JSON roundtrip") {
    const auto code = exampleCode();
    const auto doc = codeToJson(code);
    CHECK(doc["alphabets"] == nlohmann::json({3, 3, 2}));
    const auto back = codeFromJson(doc);
    CHECK(back.alphabets == code.alphabets);
    CHECK(back.words == code.words);
}

TEST_CASE("malformed documents raise data_error") {
    CHECK_THROWS_AS(cuboidFromJson(nlohmann::json::parse(R"({"sizes":[2,2]})")),
                    data_error);
    CHECK_THROWS_AS(
        cuboidFromJson(nlohmann::json::parse(
            R"({"sizes":[2,2],"class":1,"order":2,"cells":[0,1,1]})")),
        data_error);
}

TEST_CASE("count results carry exact big integers") {
    CountResult res;
    res.semiReduced = mpz_class("123456789012345678901234567890");
    res.totalFactor = 2;
    res.total = res.semiReduced * 2;
    res.nodesVisited = 7;
    const auto doc = countResultToJson(res);
    CHECK(doc["semiReduced"] == "123456789012345678901234567890");
    CHECK(doc["total"] == "246913578024691357802469135780");
}

TEST_CASE("CSV rows for count tables") {
    CHECK(countResultCsvHeader() ==
          "sizes,class,semiReduced,total,nodes,millis");
    CountResult res;
    res.semiReduced = 4;
    res.totalFactor = 720;
    res.total = 2880;
    res.nodesVisited = 42;
    res.millis = 0.0;
    const auto row = countResultToCsvRow(CuboidShape({3, 2, 2}, 2), res);
    CHECK(row == "3x2x2,2,4,2880,42,0");
}

TEST_CASE("verdict and bound report serialization") {
    const auto v = verdictToJson(existenceBound(CuboidShape({2, 2, 2, 2}, 2)));
    CHECK(v["lhs"] == 4);
    CHECK(v["rhs"] == 3);
    CHECK(v["satisfied"] == false);

    const auto rep = boundReportToJson(boundReport({3, 3, 2}, 2));
    CHECK(rep["singleton"] == 6);
    CHECK(rep["delta"] == 2);
}
