#pragma once

#include <string>
#include <vector>

#include "hoc/es/group_fixture.hpp"
#include "hoc/finite.hpp"
#include "hoc/fuchsian.hpp"

namespace hoc {

/// Parsed fixture file. Exactly one of the payloads is populated, according
/// to the "type" field: "fuchsian", "finite" or "modular".
struct Fixture {
    std::string type;
    FuchsianSignature fuchsian{};
    std::string fuchsian_name;
    FiniteGroup finite;
    GroupFixture modular;
};

/// Loads and validates a fixture from JSON text. If a "checksum" field is
/// present it must match fixture_checksum of the payload.
Fixture parse_fixture(const std::string& json_text);

Fixture load_fixture(const std::string& path);

/// FNV-1a hash of the canonical payload serialization (no checksum field).
std::string fixture_checksum(const std::string& canonical_payload);

/// Canonical JSON text for the built-in fixtures, checksum included.
std::string render_fuchsian_fixture(const std::string& name, int genus, int cusps);
std::string render_finite_fixture(const FiniteGroup& gp);
std::string render_modular_fixture(const GroupFixture& fx);

} // namespace hoc
