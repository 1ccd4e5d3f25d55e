#include "phee/config.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace phee {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

} // namespace

ConfigFile parse_config(std::istream& in) {
    ConfigFile cfg;
    ConfigSection* current = nullptr;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": unterminated section header");
            std::istringstream header(line.substr(1, line.size() - 2));
            ConfigSection section;
            header >> section.kind;
            std::string rest;
            std::getline(header, rest);
            section.name = trim(rest);
            if (section.kind.empty() || section.name.empty())
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": section header needs a kind and a name");
            cfg.sections.push_back(std::move(section));
            current = &cfg.sections.back();
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config line " + std::to_string(line_no) + ": empty key");
        auto& target = current ? current->entries : cfg.top_level;
        target.emplace_back(std::move(key), std::move(value));
    }
    return cfg;
}

ConfigFile parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    try {
        return parse_config(in);
    } catch (const std::runtime_error& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
}

double config_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("config key '" + key + "': '" + value + "' is not a number");
    }
}

long long config_int(const std::string& key, const std::string& value) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw std::invalid_argument("config key '" + key + "': '" + value + "' is not an integer");
    return v;
}

bool config_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw std::invalid_argument("config key '" + key + "': '" + value + "' is not a boolean");
}

std::vector<std::uint32_t> config_u32_list(const std::string& key, const std::string& value) {
    std::string normalized = value;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream in(normalized);
    std::vector<std::uint32_t> out;
    std::string token;
    while (in >> token) {
        const long long v = config_int(key, token);
        if (v < 0 || v > UINT32_MAX)
            throw std::invalid_argument("config key '" + key + "': value out of range");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty()) throw std::invalid_argument("config key '" + key + "': empty list");
    return out;
}

} // namespace phee
