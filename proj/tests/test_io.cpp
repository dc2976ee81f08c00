#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "hoc/fixture_io.hpp"
#include "hoc/report.hpp"

using namespace hoc;
using nlohmann::json;

TEST_CASE("fuchsian fixture roundtrip") {
    std::string text = render_fuchsian_fixture("g1s2", 1, 2);
    Fixture fx = parse_fixture(text);
    CHECK(fx.type == "fuchsian");
    CHECK(fx.fuchsian.g == 1);
    CHECK(fx.fuchsian.s == 2);
    CHECK(fx.fuchsian_name == "g1s2");
}

TEST_CASE("finite fixture roundtrip") {
    for (FiniteGroup gp : {cyclic_group(3), symmetric_3()}) {
        std::string text = render_finite_fixture(gp);
        Fixture fx = parse_fixture(text);
        CHECK(fx.type == "finite");
        CHECK(fx.finite.order == gp.order);
        CHECK(fx.finite.cayley == gp.cayley);
        CHECK(fx.finite.generators == gp.generators);
        CHECK(fx.finite.sigma == gp.sigma);
        CHECK_NOTHROW(validate_group(fx.finite));
    }
}

TEST_CASE("modular fixture roundtrip") {
    GroupFixture fx = gamma0_11();
    Fixture parsed = parse_fixture(render_modular_fixture(fx));
    CHECK(parsed.type == "modular");
    CHECK(parsed.modular.level == 11);
    CHECK(parsed.modular.weight == 2);
    CHECK(parsed.modular.fricke_sign == -1);
    REQUIRE(parsed.modular.generators.size() == fx.generators.size());
    for (std::size_t i = 0; i < fx.generators.size(); ++i) {
        CHECK(parsed.modular.generators[i].name == fx.generators[i].name);
        CHECK(parsed.modular.generators[i].m == fx.generators[i].m);
        CHECK(parsed.modular.generators[i].parabolic == fx.generators[i].parabolic);
    }
    CHECK(parsed.modular.eta.size() == fx.eta.size());
}

TEST_CASE("checksum is enforced") {
    std::string text = render_fuchsian_fixture("g2s1", 2, 1);
    json j = json::parse(text);
    j["genus"] = 3; // payload no longer matches the stamped checksum
    CHECK_THROWS_AS(parse_fixture(j.dump(2)), input_error);
    j.erase("checksum"); // without a checksum the payload is accepted
    Fixture fx = parse_fixture(j.dump(2));
    CHECK(fx.fuchsian.g == 3);
}

TEST_CASE("malformed fixtures are rejected") {
    CHECK_THROWS_AS(parse_fixture("not json"), input_error);
    CHECK_THROWS_AS(parse_fixture("{\"type\": \"unknown\"}"), input_error);
    CHECK_THROWS_AS(load_fixture("/nonexistent/path.json"), input_error);
}

TEST_CASE("checksum is a pure function of the payload") {
    CHECK(fixture_checksum("abc") == fixture_checksum("abc"));
    CHECK(fixture_checksum("abc") != fixture_checksum("abd"));
}

TEST_CASE("report serialization is byte stable") {
    Report r;
    r.command = "demo";
    r.config_hash = config_hash({{"q", "3"}, {"g", "2"}});
    CheckRecord a;
    a.name = "alpha";
    a.anchor = "x = y";
    a.expected = "0";
    a.computed = "0";
    a.pass = true;
    CheckRecord b;
    b.name = "beta";
    b.anchor = "|r| small";
    b.expected = "residual < 1e-8";
    b.computed = format_double(3.25e-10);
    b.residual = 3.25e-10;
    b.pass = true;
    r.records = {a, b};
    CHECK(r.all_pass());

    std::string j1 = to_json(r);
    std::string j2 = to_json(r);
    CHECK(j1 == j2);
    json parsed = json::parse(j1);
    CHECK(parsed["command"] == "demo");
    CHECK(parsed["pass"] == true);
    CHECK(parsed["records"].size() == 2);
    CHECK(parsed["records"][1]["residual"] == format_double(3.25e-10));

    std::string csv = to_csv(r);
    CHECK(csv.find("alpha") != std::string::npos);
    CHECK(csv.find("beta") != std::string::npos);

    b.pass = false;
    r.records = {a, b};
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("config hash is order sensitive and deterministic") {
    auto h1 = config_hash({{"a", "1"}, {"b", "2"}});
    auto h2 = config_hash({{"a", "1"}, {"b", "2"}});
    auto h3 = config_hash({{"a", "1"}, {"b", "3"}});
    CHECK(h1 == h2);
    CHECK(h1 != h3);
}

TEST_CASE("double formatting is fixed width scientific") {
    CHECK(format_double(1.0) == "1.000000000000e+00");
    CHECK(format_double(-3.25e-10) == "-3.250000000000e-10");
}
