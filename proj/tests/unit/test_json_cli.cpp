#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include <qmzv/errors.hpp>
#include <qmzv/expansion.hpp>
#include <qmzv/families.hpp>
#include <qmzv/json_io.hpp>

#include "../common/identities.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace qmzv;
using nlohmann::json;
using qmzv::test::oz;
using qmzv::test::q;

namespace
{

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name)
{
    return std::string(QMZV_TEST_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("combination JSON round trip")
{
    const LinComb c = oz({{{4}, 2}, {{2, 3}, -1, 6}}, q(1, 1440));
    const json j = lincomb_to_json(c);
    CHECK(j["constant"] == "1/1440");
    CHECK(j["terms"][0]["index"] == json::array({4}));
    CHECK(j["terms"][1]["coeff"] == "-1/6");
    CHECK(lincomb_from_json(j) == c);
    CHECK(lincomb_from_json(json::parse(j.dump())) == c);

    CHECK_THROWS_AS(lincomb_from_json(json::parse(R"({"basis":"okounkov","terms":[{"index":[2],"coeff":0.5}]})")),
                    ParseError);
    CHECK(lincomb_from_json(json::parse(R"({"basis":"brackets","terms":[]})")).basis() == "eulerian");
    CHECK_THROWS_AS(lincomb_from_json(json::parse(R"({"terms":[]})")), ParseError);
}

TEST_CASE("identity and family files")
{
    const IdentitySpec spec = identity_from_json(json::parse(R"({
        "lhs": {"d": true, "lincomb": {"basis": "okounkov", "terms": [{"index": [2], "coeff": "1"}]}},
        "rhs": {"basis": "okounkov", "terms": [{"index": [4], "coeff": "3"}]}})"));
    CHECK(spec.lhs_derived);
    CHECK_FALSE(spec.conjectural);
    CHECK(identity_from_json(identity_to_json(spec)).rhs == spec.rhs);

    const PolyFamily f = family_from_json("low", json::parse(R"({"2": ["0", "1"], "3": ["0", "1", "1"]})"));
    CHECK(f.poly(3) == family_okounkov().poly(3));
    CHECK_THROWS_AS(family_from_json("bad", json::parse(R"({"2": ["1", "1"]})")), InvalidFamilyError);
    CHECK_THROWS_AS(family_from_json("bad", json::parse(R"({"x": ["0", "1"]})")), ParseError);
}

TEST_CASE("cli expand")
{
    CHECK(run({"expand", "--family", "eulerian", "--index", "2", "--terms", "5"}).out == "0, 1, 3, 4, 7, 6\n");
    CHECK(run({"expand", "--family", "okounkov", "--index", "", "--terms", "3"}).out == "1, 0, 0, 0\n");
    const Run bad = run({"expand", "--family", "okounkov", "--index", "1", "--terms", "3"});
    CHECK(bad.code == cli::kInadmissible);
    CHECK(bad.err.find("1") != std::string::npos);
    CHECK(run({"expand", "--family", "okounkov", "--index", "2,x"}).code == cli::kUsage);
    CHECK(run({"expand", "--family", "nope", "--index", "2"}).code == cli::kUsage);
    CHECK(run({"bogus"}).code == cli::kUsage);

    const Run table = run({"expand", "--family", "eulerian", "--index", "4", "--terms", "2", "--format", "table"});
    CHECK(table.out == "0: 0\n1: 1/6\n2: 3/2\n");

    const Run js = run({"expand", "--family", "eulerian", "--index", "3", "--terms", "2", "--format", "json"});
    const json j = json::parse(js.out);
    CHECK(j["coefficients"] == json::array({"0", "1/2", "5/2"}));
}

TEST_CASE("cli precision from the environment")
{
    ::setenv("QMZV_PRECISION", "3", 1);
    CHECK(run({"expand", "--family", "eulerian", "--index", "2"}).out == "0, 1, 3, 4\n");
    CHECK(run({"expand", "--family", "eulerian", "--index", "2", "-N", "1"}).out == "0, 1\n");
    ::setenv("QMZV_PRECISION", "zero", 1);
    CHECK(run({"expand", "--family", "eulerian", "--index", "2"}).code == cli::kUsage);
    ::unsetenv("QMZV_PRECISION");
    const Run def = run({"expand", "--family", "eulerian", "--index", "2", "--format", "json"});
    CHECK(json::parse(def.out)["precision"] == 100);
}

TEST_CASE("cli product")
{
    const Run p = run({"product", "--family", "okounkov", "--left", "2", "--right", "3", "--mode", "stuffle"});
    CHECK(p.code == 0);
    CHECK(p.out == "Z(5) + Z(2,3) + Z(3,2)\n");
    const Run e =
        run({"product", "--family", "eulerian", "--left", "1", "--right", "1", "--mode", "stuffle", "--check"});
    CHECK(e.code == 0);
    CHECK(e.out.find("[2] + 2 [1,1] - [1]") == 0);
    CHECK(e.out.find("verified") != std::string::npos);

    // series mode and stuffle mode agree
    const Run s = run({"product", "--family", "okounkov", "--left", "2,2", "--right", "3", "--mode", "series",
                       "--terms", "10", "--format", "json"});
    const Run st = run({"product", "--family", "okounkov", "--left", "2,2", "--right", "3", "--format", "json"});
    const LinComb c = lincomb_from_json(json::parse(st.out)["product"]);
    const json sj = json::parse(s.out);
    const QSeries expected = lincomb_expand(c, 10);
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(sj["coefficients"][n] == to_string(expected[n]));

    const Run closure = run({"product", "--family", data("no_closure.json"), "--left", "3", "--right", "3"});
    CHECK(closure.code == cli::kClosureFailure);
    CHECK(closure.err.find("t") != std::string::npos);

    const Run custom =
        run({"product", "--family", data("okounkov_low.json"), "--left", "2", "--right", "2", "--check"});
    CHECK(custom.code == 0);
    CHECK(custom.out.find("Z(4) + 2 Z(2,2)") == 0);
}

TEST_CASE("cli convert")
{
    CHECK(run({"convert", "--direction", "oz-to-brackets", "--index", "4"}).out == "[4] - 1/6 [2]\n");
    CHECK(run({"convert", "--direction", "brackets-to-oz", "--index", "3"}).out == "1/2 Z(3)\n");
    CHECK(run({"convert", "--direction", "oz-to-brackets", "--index", "2,4"}).out == "[2,4] - 1/6 [2,2]\n");
    CHECK(run({"convert", "--direction", "brackets-to-oz", "--lincomb-file", data("lincomb_brackets.json")}).out ==
          "Z(4) + 1/3 Z(2)\n");
    CHECK(run({"convert", "--direction", "brackets-to-oz", "--index", "2,1"}).code == cli::kInadmissible);

    // json output re-expands to the same series
    const Run js = run({"convert", "--direction", "oz-to-brackets", "--index", "3,5", "--format", "json"});
    const LinComb c = lincomb_from_json(json::parse(js.out));
    CHECK(lincomb_expand(c, 30) == zq_expand(family_okounkov(), Index{3, 5}, 30));
}

TEST_CASE("cli derive")
{
    const Run d2 = run({"derive", "--oz", "2"});
    CHECK(d2.code == 0);
    CHECK(d2.out == "3 Z(4) - 4 Z(2,2) + Z(2)\n");
    CHECK(run({"derive", "--oz", "3"}).out == "5 Z(5) - 6 Z(2,3) - 4 Z(3,2) + Z(3)\n");
    CHECK(run({"derive", "--oz", "1"}).code == cli::kInadmissible);
    const Run b = run({"derive", "--bracket", "2", "--format", "json"});
    CHECK(b.code == 0);
    const LinComb c = lincomb_from_json(json::parse(b.out));
    CHECK(lincomb_expand(c, 40) == q_derive(bracket_expand(Index{2}, 40)));
}

TEST_CASE("cli verify")
{
    const Run ok = run({"verify", data("dz22.json"), "--terms", "100"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("verified") != std::string::npos);
    const Run bad = run({"verify", data("dz22_corrupted.json"), "--terms", "30"});
    CHECK(bad.code == cli::kRefuted);
    CHECK(bad.out.find("refuted at q^") != std::string::npos);
    const Run js = run({"verify", data("dz22_corrupted.json"), "--terms", "30", "--format", "json"});
    CHECK(json::parse(js.out)["first_mismatch"].get<int>() >= 1);
    CHECK(run({"verify", data("missing.json")}).code == cli::kUsage);
}

TEST_CASE("cli find-relation")
{
    const Run r = run({"find-relation", "--target", "[4]", "--max-weight", "4", "--terms", "20"});
    CHECK(r.code == 0);
    CHECK(r.out == "Z(4) + 1/6 Z(2)\n");
    CHECK(run({"find-relation", "--target", "[4]", "--max-weight", "4", "--terms", "3"}).code == cli::kUsage);
    CHECK(run({"find-relation", "--target", "[4]", "--max-weight", "4", "--terms", "3", "--force"}).code == 0);
    CHECK(run({"find-relation", "--target", "[1]", "--max-weight", "4", "--terms", "20"}).code == cli::kNoSolution);
    const Run k = run({"find-relation", "--target", "d Z(2)", "--max-weight", "6", "--terms", "40"});
    CHECK(k.code == 0);
    CHECK(k.out.find("kernel dimension: 1") != std::string::npos);
}

TEST_CASE("cli output is deterministic")
{
    const std::vector<std::string> args = {"find-relation", "--target", "d Z(2,2)", "--max-weight", "6",
                                           "--terms", "40", "--format", "json"};
    CHECK(run(args).out == run(args).out);
}
