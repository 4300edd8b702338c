#include "backbone/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <string_view>

#include "backbone/errors.hpp"

namespace backbone {

namespace {

bool is_comment_or_blank(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

/// Parses the first `count` integer tokens of `line`; extra tokens are
/// allowed and ignored.
bool parse_ints(std::string_view line, std::uint64_t* out, int count) {
    std::size_t pos = 0;
    for (int k = 0; k < count; ++k) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos >= line.size()) return false;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), out[k]);
        if (ec != std::errc()) return false;
        pos = static_cast<std::size_t>(ptr - line.data());
        if (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])))
            return false;
    }
    return true;
}

[[noreturn]] void malformed(const std::string& path, std::size_t line_no, const std::string& what) {
    throw MalformedInputError(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

EdgeListLoadResult load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::uint64_t t[2];
        if (!parse_ints(line, t, 2))
            malformed(path, line_no, "expected two non-negative integer tokens");
        raw.emplace_back(t[0], t[1]);
    }
    if (in.bad()) throw IoError("read failure on " + path);

    // Compact labels ascending, so equal inputs build equal graphs no
    // matter the line order.
    std::vector<std::uint64_t> labels;
    labels.reserve(2 * raw.size());
    for (auto [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    EdgeListLoadResult result;
    result.original_ids = labels;
    result.compact_ids.reserve(labels.size());
    for (NodeId i = 0; i < labels.size(); ++i) result.compact_ids.emplace(labels[i], i);

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw)
        edges.emplace_back(result.compact_ids.at(a), result.compact_ids.at(b));
    result.graph = Graph::from_edges(static_cast<NodeId>(labels.size()), edges, &result.stats);
    return result;
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        out << u << ' ' << v << '\n';
    }
    if (!out) throw IoError("write failure on " + path);
}

namespace {

Partition load_ground_truth_impl(const std::string& path, std::size_t n,
                                 const std::function<NodeId(std::uint64_t, std::size_t)>& to_node) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    constexpr std::uint32_t kUnassigned = 0xffffffffu;
    std::vector<std::uint32_t> assignment(n, kUnassigned);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::uint64_t t[2];
        if (!parse_ints(line, t, 2))
            malformed(path, line_no, "expected \"node community\" integer tokens");
        NodeId v = to_node(t[0], line_no);
        if (assignment[v] != kUnassigned)
            malformed(path, line_no, "node assigned twice");
        if (t[1] > 0xfffffffeull)
            malformed(path, line_no, "community label out of range");
        assignment[v] = static_cast<std::uint32_t>(t[1]);
    }
    if (in.bad()) throw IoError("read failure on " + path);
    for (std::size_t v = 0; v < n; ++v)
        if (assignment[v] == kUnassigned)
            throw MalformedInputError(path + ": node " + std::to_string(v) + " has no community");
    return Partition(assignment);
}

}  // namespace

Partition load_ground_truth(const std::string& path,
                            const std::unordered_map<std::uint64_t, NodeId>& compact_ids) {
    return load_ground_truth_impl(path, compact_ids.size(),
                                  [&](std::uint64_t label, std::size_t line_no) {
                                      auto it = compact_ids.find(label);
                                      if (it == compact_ids.end())
                                          malformed(path, line_no, "unknown node label");
                                      return it->second;
                                  });
}

Partition load_ground_truth(const std::string& path, NodeId n) {
    return load_ground_truth_impl(path, n, [&](std::uint64_t label, std::size_t line_no) {
        if (label >= n) malformed(path, line_no, "node label out of range");
        return static_cast<NodeId>(label);
    });
}

void write_ground_truth(const Partition& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    for (NodeId v = 0; v < p.num_nodes(); ++v) out << v << ' ' << p[v] << '\n';
    if (!out) throw IoError("write failure on " + path);
}

}  // namespace backbone
