#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace phee {

// Flat "key = value" text with optional "[kind name]" sections. '#' starts a
// comment; blank lines are skipped. Order is preserved.
struct ConfigSection {
    std::string kind;
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
};

struct ConfigFile {
    std::vector<std::pair<std::string, std::string>> top_level;
    std::vector<ConfigSection> sections;
};

ConfigFile parse_config(std::istream& in);
ConfigFile parse_config_file(const std::string& path);

// Typed accessors; throw invalid_argument naming the key on bad values.
double config_double(const std::string& key, const std::string& value);
long long config_int(const std::string& key, const std::string& value);
bool config_bool(const std::string& key, const std::string& value);
std::vector<std::uint32_t> config_u32_list(const std::string& key, const std::string& value);

} // namespace phee
