#include "phee/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <zlib.h>

namespace phee {
namespace {

bool parse_i64(const char* begin, const char* end, std::int64_t& out) {
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

Graph parse_buffer(const std::string& text, bool directed, LoadReport* report) {
    LoadReport stats;
    std::unordered_map<std::int64_t, VertexId> ids;
    std::vector<std::int64_t> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;

    const auto intern = [&](std::int64_t label) {
        const auto [it, fresh] = ids.emplace(label, static_cast<VertexId>(labels.size()));
        if (fresh) labels.push_back(label);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        ++line_no;
        const char* b = text.data() + pos;
        const char* e = text.data() + eol;
        pos = eol + 1;
        while (b < e && (*b == ' ' || *b == '\t')) ++b;
        while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r')) --e;
        if (b == e || *b == '#' || *b == '%') continue;

        ++stats.lines;
        const char* tokens[3] = {nullptr, nullptr, nullptr};
        const char* ends[3] = {nullptr, nullptr, nullptr};
        int count = 0;
        const char* p = b;
        while (p < e) {
            while (p < e && (*p == ' ' || *p == '\t')) ++p;
            if (p >= e) break;
            const char* start = p;
            while (p < e && *p != ' ' && *p != '\t') ++p;
            if (count < 3) {
                tokens[count] = start;
                ends[count] = p;
            }
            ++count;
        }
        if (count != 2)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected two vertex ids, got " + std::to_string(count) +
                                     " tokens");
        std::int64_t a, bb;
        if (!parse_i64(tokens[0], ends[0], a) || !parse_i64(tokens[1], ends[1], bb))
            throw std::runtime_error("line " + std::to_string(line_no) + ": '" +
                                     std::string(b, e) + "' is not an integer pair");

        const VertexId u = intern(a);
        const VertexId v = intern(bb);
        if (u == v) {
            ++stats.self_loops;
            continue;
        }
        edges.emplace_back(u, v);
    }

    if (labels.empty()) throw std::runtime_error("edge list contains no vertices");

    // Count duplicates before Graph::from_edges silently dedups.
    std::vector<std::pair<VertexId, VertexId>> keys(edges);
    if (!directed)
        for (auto& [u, v] : keys)
            if (u > v) std::swap(u, v);
    std::sort(keys.begin(), keys.end());
    const auto unique_end = std::unique(keys.begin(), keys.end());
    stats.duplicates = keys.size() - static_cast<std::size_t>(unique_end - keys.begin());

    if (report) *report = stats;
    const std::size_t n = labels.size();
    return Graph::from_edges(n, edges, directed, std::move(labels));
}

} // namespace

Graph load_edge_list(std::istream& in, bool directed, LoadReport* report) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_buffer(buf.str(), directed, report);
}

Graph load_edge_list_file(const std::string& path, bool directed, LoadReport* report) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open " + path);
    std::string text;
    char chunk[1 << 16];
    int got;
    while ((got = gzread(f, chunk, sizeof chunk)) > 0) text.append(chunk, static_cast<std::size_t>(got));
    const bool bad = got < 0;
    gzclose(f);
    if (bad) throw std::runtime_error("read error on " + path);
    try {
        return parse_buffer(text, directed, report);
    } catch (const std::runtime_error& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    const std::size_t n = g.vertex_count();
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.out_neighbors(u)) {
            if (!g.directed() && v < u) continue;
            out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
        }
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) == 0) out << g.original_id(v) << ' ' << g.original_id(v) << '\n';
}

} // namespace phee
