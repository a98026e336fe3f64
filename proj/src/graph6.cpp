#include "toughham/graph6.hpp"

#include <istream>
#include <sstream>

namespace toughham {

namespace {

constexpr int kBias = 63;  // '?'

bool valid_char(char c) { return c >= 63 && c <= 126; }

std::string_view strip(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    return line;
}

}  // namespace

Graph parse_graph6(std::string_view input) {
    const std::string_view line = strip(input);
    if (line.empty()) throw MalformedGraph6Error("empty graph6 line");
    for (char c : line)
        if (!valid_char(c)) throw MalformedGraph6Error("invalid graph6 character");

    std::size_t pos = 0;
    long n = 0;
    if (line[0] != '~') {
        n = line[0] - kBias;
        pos = 1;
    } else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4) throw MalformedGraph6Error("truncated graph6 order");
        n = (static_cast<long>(line[1] - kBias) << 12) |
            (static_cast<long>(line[2] - kBias) << 6) | (line[3] - kBias);
        pos = 4;
    } else {
        // '~~' eight-byte order: anything that needs it is far over our cap.
        throw TooLargeError("graph6 order beyond 64 vertices");
    }
    if (n > kMaxVertices) throw TooLargeError("graph6 order " + std::to_string(n) + " > 64");

    const long bits_needed = n * (n - 1) / 2;
    const std::size_t chars_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (line.size() - pos != chars_needed)
        throw MalformedGraph6Error("graph6 body length mismatch");

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    long bit = 0;
    for (std::size_t i = pos; i < line.size(); ++i) {
        const int word = line[i] - kBias;
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = (word >> k) & 1;
            if (bit >= bits_needed) {
                if (set) throw MalformedGraph6Error("nonzero graph6 padding");
                continue;
            }
            if (!set) continue;
            // Column-wise upper triangle: bit index runs over (u, v),
            // v = 1..n-1, u = 0..v-1.
            long b = bit, v = 1;
            while (b >= v) b -= v++;
            adj[static_cast<std::size_t>(b)] |= 1ULL << v;
            adj[static_cast<std::size_t>(v)] |= 1ULL << b;
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

std::string write_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int word = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            word = (word << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + kBias));
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw MalformedEdgeListError("edge list must start with 'n m'");
    if (n > kMaxVertices) throw TooLargeError("edge list order > 64");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v)) throw MalformedEdgeListError("edge list truncated");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw MalformedEdgeListError("bad edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace toughham
