#include "hoc/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

namespace hoc {

bool Report::all_pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

std::string config_hash(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0x1f;
        h *= 1099511628211ULL;
    };
    for (const auto& [k, v] : kv) {
        mix(k);
        mix(v);
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string to_json(const Report& r) {
    std::ostringstream os;
    os << "{\n  \"command\": \"" << json_escape(r.command) << "\",\n"
       << "  \"config_hash\": \"" << r.config_hash << "\",\n"
       << "  \"pass\": " << (r.all_pass() ? "true" : "false") << ",\n"
       << "  \"records\": [\n";
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        const auto& c = r.records[i];
        os << "    {\"anchor\": \"" << json_escape(c.anchor) << "\", "
           << "\"computed\": \"" << json_escape(c.computed) << "\", "
           << "\"expected\": \"" << json_escape(c.expected) << "\", "
           << "\"name\": \"" << json_escape(c.name) << "\", "
           << "\"pass\": " << (c.pass ? "true" : "false") << ", "
           << "\"residual\": ";
        if (c.residual)
            os << "\"" << format_double(*c.residual) << "\"";
        else
            os << "null";
        os << "}" << (i + 1 < r.records.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string to_csv(const Report& r) {
    std::ostringstream os;
    os << "name,anchor,expected,computed,residual,pass\n";
    auto cell = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    };
    for (const auto& c : r.records) {
        os << cell(c.name) << ',' << cell(c.anchor) << ',' << cell(c.expected) << ','
           << cell(c.computed) << ','
           << (c.residual ? format_double(*c.residual) : std::string()) << ','
           << (c.pass ? "true" : "false") << "\n";
    }
    return os.str();
}

} // namespace hoc
