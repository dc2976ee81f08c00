#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hoc {

struct CheckRecord {
    std::string name;
    std::string anchor;   // the identity or formula the check exercises
    std::string expected;
    std::string computed;
    std::optional<double> residual;
    bool pass = false;
};

struct Report {
    std::string command;
    std::string config_hash;
    std::vector<CheckRecord> records;

    bool all_pass() const;
};

/// FNV-1a hash of a canonical key=value rendering of the run configuration.
std::string config_hash(const std::vector<std::pair<std::string, std::string>>& kv);

std::string format_double(double x); // fixed %.12e rendering used everywhere

/// Byte-stable JSON: keys in fixed order, floats rendered via format_double.
std::string to_json(const Report& r);
std::string to_csv(const Report& r);

} // namespace hoc
