#include "cmplane/errors.hpp"
#include "cmplane/job.hpp"

#include <doctest.h>

using namespace cmplane;
using nlohmann::json;

namespace {

std::vector<std::string> violations_of(const std::string& doc)
{
    try {
        parse_job(std::string_view(doc));
    } catch (const SchemaError& e) {
        return e.violations();
    }
    return {};
}

bool mentions(const std::vector<std::string>& v, const std::string& needle)
{
    for (const auto& s : v)
        if (s.find(needle) != std::string::npos)
            return true;
    return false;
}

json c32_curve()
{
    json points = json::array();
    for (int sign : {1, -1})
        for (int k = 0; k < 3; ++k)
            // y = sign * i = zeta_12^{3 sign}, x = -y zeta_3^k = zeta_12^{3 sign + 4k + 6}
            points.push_back({{"location",
                               {{{"conductor", 12}, {"zeta_power", 3 * sign + 4 * k + 6}},
                                {{"conductor", 12}, {"zeta_power", 3 * sign}},
                                1}},
                              {"singularity", {{"type", "one-pair"}, {"p", 2}, {"q", 3}}}});
    return {{"degree", 6}, {"points", points}};
}

JobResult run(const json& doc)
{
    const auto r = run_job(parse_job(doc));
    INFO(r.report.dump());
    REQUIRE(validate_report(r.report).empty());
    return r;
}

} // namespace

TEST_CASE("parse_job accepts the documented job forms")
{
    const auto belyi = parse_job(std::string_view(R"({"command":"belyi","a":4,"b":1,"c":5,"d":10})"));
    CHECK(belyi.command == "belyi");
    CHECK(std::get<jobs::Belyi>(belyi.payload).cover.d() == 10);

    const auto mono = parse_job(std::string_view(R"({"command":"monodromy","pairs":[[3,2],[6,5]]})"));
    const auto& desc = std::get<jobs::Monodromy>(mono.payload).singularity;
    CHECK(std::holds_alternative<PuiseuxCharacteristic>(desc.kind));

    CHECK_NOTHROW(parse_job(std::string_view(R"({"command":"monodromy","ade":"E7"})")));
    CHECK_NOTHROW(parse_job(std::string_view(R"({"command":"monodromy","p":2,"q":3})")));
    CHECK_NOTHROW(parse_job(std::string_view(R"({"command":"monodromy","charpoly":[-1,1]})")));
    CHECK_NOTHROW(
        parse_job(std::string_view(R"({"command":"monodromy","singularity":{"type":"ade","name":"D5"}})")));
    CHECK_NOTHROW(parse_job(std::string_view(R"({"command":"spectrum","p":3,"q":5})")));
    CHECK_NOTHROW(parse_job(std::string_view(R"({"command":"albanese-local","pairs":[[5,2]],"N":10})")));
    CHECK_NOTHROW(parse_job(std::string_view(R"({"command":"cover","modules":[[1,-1,1]],"N":6})")));
    CHECK_NOTHROW(parse_job(std::string_view(
        R"({"command":"mw-rank","alexander":{"factors":[[10,1]]},"holonomy_order":10,"fiber":{"cm_conductor":10}})")));
    CHECK_NOTHROW(parse_job(json{{"command", "superabundance"}, {"curve", c32_curve()}, {"p", 2}, {"q", 3}}));
}

TEST_CASE("parse_job reports violations with paths")
{
    CHECK(violations_of(R"({"command":"belyi","a":4,"b":1,"c":4,"d":10})") ==
          std::vector<std::string>{"$: a+b+c != d"});
    CHECK(mentions(violations_of("{not json"), "malformed"));
    CHECK(mentions(violations_of(R"({"command":"frobnicate"})"), "unknown command"));
    CHECK(mentions(violations_of(R"({"a":1})"), "$.command: required field missing"));
    CHECK(mentions(violations_of(R"([1,2])"), "expected a JSON object"));
    CHECK(mentions(violations_of(R"({"command":"belyi","a":"4","b":1,"c":5,"d":10})"), "$.a: expected an integer"));
    CHECK(mentions(violations_of(R"({"command":"spectrum","p":4,"q":6})"), "gcd(p, q) != 1"));
    CHECK(mentions(violations_of(R"({"command":"monodromy","pairs":[[4,2]]})"), "$.pairs"));
    CHECK(mentions(violations_of(R"({"command":"monodromy","ade":"Q3"})"), "$.name"));
    CHECK(mentions(violations_of(R"({"command":"albanese-local","pairs":[[5,2]],"N":1})"), "$.N: must be >= 2"));

    // Several problems are reported together.
    const auto many = violations_of(R"({"command":"belyi","a":-1,"c":5,"d":"x"})");
    CHECK(many.size() == 3);

    json bad_curve = c32_curve();
    bad_curve["points"][2]["location"][0] = {{"conductor", 12}, {"coeffs", {"1/0"}}};
    bad_curve["points"][4]["singularity"] = {{"type", "bogus"}};
    const json doc{{"command", "superabundance"}, {"curve", bad_curve}, {"p", 2}, {"q", 3}};
    try {
        parse_job(doc);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(mentions(e.violations(), "$.curve.points[2].location[0].coeffs[0]"));
        CHECK(mentions(e.violations(), "$.curve.points[4].singularity.type"));
    }
}

TEST_CASE("reports for each command validate and are deterministic")
{
    const std::vector<json> docs{
        {{"command", "monodromy"}, {"pairs", {{3, 2}, {6, 5}}}},
        {{"command", "monodromy"}, {"singularity", {{"type", "charpoly"}, {"coeffs", {-1, 1, 0, 0, 2, -2, 0, 0, -1, 1}}}}},
        {{"command", "spectrum"}, {"p", 3}, {"q", 7}},
        {{"command", "resolve"}, {"pairs", {{3, 2}, {1, 2}}}},
        {{"command", "albanese-local"}, {"pairs", {{5, 2}}}, {"N", 10}},
        {{"command", "belyi"}, {"a", 4}, {"b", 1}, {"c", 5}, {"d", 10}},
        {{"command", "alexander"}, {"curve", c32_curve()}, {"p", 2}, {"q", 3}},
        {{"command", "alexander"}, {"curve", c32_curve()}},
        {{"command", "alexander"}, {"curve", c32_curve()}, {"alexander_polynomial", {1, -1, 1}}},
        {{"command", "superabundance"}, {"curve", c32_curve()}, {"p", 2}, {"q", 3}},
        {{"command", "cover"}, {"curve", c32_curve()}, {"p", 2}, {"q", 3}, {"N", 6}},
        {{"command", "cover"}, {"modules", {{1, -1, 1}, {1, -1, 1}}}, {"N", 12}},
        {{"command", "mw-rank"},
         {"curve", c32_curve()},
         {"p", 2},
         {"q", 3},
         {"holonomy_order", 6},
         {"fiber", {{"cm_conductor", 6}}},
         {"albanese_multiplicity_known", true}},
    };
    for (const auto& doc : docs) {
        INFO(doc.dump());
        const auto a = run(doc);
        const auto b = run(json::parse(doc.dump()));
        REQUIRE(a.report.dump(2) == b.report.dump(2));
        REQUIRE(a.summary == b.summary);
        REQUIRE_FALSE(a.summary.empty());
        // Round trip through text.
        REQUIRE(validate_report(json::parse(a.report.dump())).empty());
    }
}

TEST_CASE("report contents")
{
    const auto belyi = run({{"command", "belyi"}, {"a", 4}, {"b", 1}, {"c", 5}, {"d", 10}}).report["result"];
    CHECK(belyi["genus"] == 2);
    CHECK(belyi["cm_exponents"] == json({1, 3}));
    CHECK(belyi["deck_charpoly"]["factored"] == "Phi_10");
    CHECK(belyi["deck_charpoly"]["expanded"] == json({"1", "-1", "1", "-1", "1"}));

    const auto mono = run({{"command", "monodromy"}, {"pairs", {{3, 2}, {6, 5}}}}).report["result"];
    CHECK(mono["cabling_numbers"] == json({3, 36}));
    CHECK(mono["cm_verdict"]["status"] == "cm-by-unibranched");

    const auto res = run({{"command", "resolve"}, {"pairs", {{5, 2}}}}).report["result"];
    CHECK(res["oracle_agrees"] == true);

    const auto mw = run({{"command", "mw-rank"},
                         {"curve", c32_curve()},
                         {"p", 2},
                         {"q", 3},
                         {"holonomy_order", 6},
                         {"fiber", {{"cm_conductor", 3}}},
                         {"albanese_multiplicity_known", true}})
                        .report["result"];
    CHECK(mw["bound"] == 2);
    CHECK(mw["exact"] == 2);
    CHECK(mw["holonomy_consistency"] == true);
    CHECK(mw["assumptions"]["cm_conductor"] == 3);

    const auto bound_only = run({{"command", "alexander"}, {"curve", c32_curve()}}).report["result"];
    CHECK(bound_only["method"] == "bound-only");
    CHECK(bound_only["local_bound"]["factored"] == "Phi_6^6");
}

TEST_CASE("computation errors surface from run_job")
{
    auto curve = c32_curve();
    curve["degree"] = 7;
    CHECK_THROWS_AS(run_job(parse_job(json{{"command", "superabundance"}, {"curve", curve}, {"p", 2}, {"q", 3}})),
                    PreconditionError);
    CHECK_THROWS_AS(run_job(parse_job(json{{"command", "alexander"},
                                           {"curve", c32_curve()},
                                           {"alexander_polynomial", {1, 1}}})),
                    ComputationError);
}

TEST_CASE("validate_report rejects malformed reports")
{
    CHECK_FALSE(validate_report(json::array()).empty());
    CHECK_FALSE(validate_report(json{{"schema", "other"}, {"command", "belyi"}, {"result", json::object()}}).empty());
    auto good = run({{"command", "spectrum"}, {"p", 2}, {"q", 3}}).report;
    good["result"].erase("count");
    CHECK(validate_report(good) == std::vector<std::string>{"$.result.count: required field missing"});
}
