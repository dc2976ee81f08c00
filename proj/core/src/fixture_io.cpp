#include "hoc/fixture_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hoc/errors.hpp"

namespace hoc {

using nlohmann::json;

std::string fixture_checksum(const std::string& canonical_payload) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical_payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

namespace {

std::string canonical(json j) {
    j.erase("checksum");
    return j.dump(); // nlohmann objects iterate in key order
}

FiniteGroup finite_from_json(const json& j) {
    FiniteGroup gp;
    gp.name = j.at("name").get<std::string>();
    gp.cayley = j.at("cayley").get<std::vector<std::vector<int>>>();
    gp.order = gp.cayley.size();
    gp.generators = j.at("generators").get<std::vector<int>>();
    gp.sigma = j.at("sigma").get<std::vector<int>>();
    gp.inverses.assign(gp.order, -1);
    for (std::size_t g = 0; g < gp.order; ++g) {
        for (std::size_t h = 0; h < gp.order; ++h)
            if (gp.cayley[g][h] == 0) {
                gp.inverses[g] = int(h);
                break;
            }
        if (gp.inverses[g] < 0)
            throw input_error("fixture " + gp.name + ": element without inverse");
    }
    validate_group(gp);
    return gp;
}

GroupFixture modular_from_json(const json& j) {
    GroupFixture fx;
    fx.name = j.at("name").get<std::string>();
    fx.level = j.at("level").get<int>();
    fx.weight = j.at("weight").get<int>();
    fx.fricke_sign = j.at("fricke_sign").get<int>();
    for (const auto& g : j.at("generators")) {
        FixtureGenerator gen;
        gen.name = g.at("name").get<std::string>();
        auto m = g.at("matrix").get<std::vector<std::int64_t>>();
        if (m.size() != 4) throw input_error("fixture " + fx.name + ": matrix needs 4 entries");
        gen.m = {m[0], m[1], m[2], m[3]};
        gen.parabolic = g.at("parabolic").get<bool>();
        fx.generators.push_back(std::move(gen));
    }
    for (const auto& e : j.at("eta")) {
        auto pair = e.get<std::vector<int>>();
        if (pair.size() != 2) throw input_error("fixture " + fx.name + ": eta factor needs 2 entries");
        fx.eta.push_back({pair[0], pair[1]});
    }
    validate_fixture(fx);
    return fx;
}

} // namespace

Fixture parse_fixture(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw input_error(std::string("fixture parse: ") + e.what());
    }
    if (j.contains("checksum")) {
        const std::string want = j.at("checksum").get<std::string>();
        const std::string got = fixture_checksum(canonical(j));
        if (want != got)
            throw input_error("fixture checksum mismatch: file says " + want +
                              ", payload hashes to " + got);
    }
    Fixture out;
    out.type = j.at("type").get<std::string>();
    try {
        if (out.type == "fuchsian") {
            out.fuchsian_name = j.at("name").get<std::string>();
            out.fuchsian = make_signature(j.at("genus").get<int>(), j.at("cusps").get<int>());
        } else if (out.type == "finite") {
            out.finite = finite_from_json(j);
        } else if (out.type == "modular") {
            out.modular = modular_from_json(j);
        } else {
            throw input_error("fixture type must be fuchsian, finite or modular");
        }
    } catch (const json::exception& e) {
        throw input_error(std::string("fixture fields: ") + e.what());
    }
    return out;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open fixture file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture(buf.str());
}

namespace {

std::string stamp(json j) {
    j["checksum"] = fixture_checksum(canonical(j));
    return j.dump(2) + "\n";
}

} // namespace

std::string render_fuchsian_fixture(const std::string& name, int genus, int cusps) {
    json j;
    j["type"] = "fuchsian";
    j["name"] = name;
    j["genus"] = genus;
    j["cusps"] = cusps;
    return stamp(j);
}

std::string render_finite_fixture(const FiniteGroup& gp) {
    json j;
    j["type"] = "finite";
    j["name"] = gp.name;
    j["cayley"] = gp.cayley;
    j["generators"] = gp.generators;
    j["sigma"] = gp.sigma;
    return stamp(j);
}

std::string render_modular_fixture(const GroupFixture& fx) {
    json j;
    j["type"] = "modular";
    j["name"] = fx.name;
    j["level"] = fx.level;
    j["weight"] = fx.weight;
    j["fricke_sign"] = fx.fricke_sign;
    j["generators"] = json::array();
    for (const auto& g : fx.generators)
        j["generators"].push_back({{"name", g.name},
                                   {"matrix", {g.m.a, g.m.b, g.m.c, g.m.d}},
                                   {"parabolic", g.parabolic}});
    j["eta"] = json::array();
    for (const auto& e : fx.eta) j["eta"].push_back({e.multiplier, e.power});
    return stamp(j);
}

} // namespace hoc
