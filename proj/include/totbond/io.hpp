#pragma once

#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "embedding.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace totbond {

enum class GraphFormat { graph6, edge_list, planar_code };

/// A graph together with the rotation system it was read with.
struct PlaneGraph {
    Graph graph;
    Embedding embedding;
};

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

/// Decodes one graph6 line. `base` is added to reported byte offsets.
inline Graph decode_graph6(std::string_view line, std::size_t base = 0) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) {
        line.remove_prefix(header.size());
        base += header.size();
    }
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
    auto byte = [&](std::size_t i) -> int {
        if (i >= line.size()) throw ParseError("graph6: truncated", base + i);
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + i);
        return c - 63;
    };
    if (line.empty()) throw ParseError("graph6: empty line", base);
    std::size_t pos = 0;
    long n = byte(0);
    pos = 1;
    if (n == 63) {
        if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126) {
            throw ParseError("graph6: orders above 258047 are unsupported", base + 1);
        }
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }
    if (n > kMaxVertices) {
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices), base);
    }
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (line.size() - pos != need) {
        throw ParseError("graph6: expected " + std::to_string(need) + " data bytes for n=" + std::to_string(n) +
                             ", found " + std::to_string(line.size() - pos),
                         base + std::min(line.size(), pos + need));
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int chunk = byte(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (byte(pos + need - 1) & pad_mask) throw ParseError("graph6: nonzero padding bits", base + pos + need - 1);
    }
    return Graph(static_cast<int>(n), edges);
}

/// Reads one graph per line; blank lines are skipped.
inline std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        std::size_t here = offset;
        offset += line.size() + 1;
        std::string_view view(line);
        while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
        if (view.empty()) continue;
        out.push_back(decode_graph6(view, here));
    }
    return out;
}

inline void write_graph6(std::ostream& out, const Graph& g) { out << encode_graph6(g) << '\n'; }

// ---------------------------------------------------------------------------
// edge list: one "u v" pair per line, 0-based; '#' starts a comment.
// A comment of the form "# n <count>" fixes the order (for trailing isolated vertices).
// ---------------------------------------------------------------------------

inline Graph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    int n = 0;
    std::optional<int> declared;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        std::size_t here = offset;
        offset += line.size() + 1;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream comment(line.substr(hash + 1));
            std::string key;
            int value = 0;
            if (comment >> key >> value && key == "n") declared = value;
            line.erase(hash);
        }
        std::istringstream fields(line);
        long u = 0;
        long v = 0;
        if (!(fields >> u)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                throw ParseError("edge list: expected vertex id", here);
            }
            continue;
        }
        if (!(fields >> v)) throw ParseError("edge list: expected two vertex ids", here);
        std::string rest;
        if (fields >> rest) throw ParseError("edge list: trailing data '" + rest + "'", here);
        if (u < 0 || v < 0 || u >= kMaxVertices || v >= kMaxVertices) {
            throw ParseError("edge list: vertex id out of range", here);
        }
        if (u == v) throw ParseError("edge list: self-loop", here);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        n = std::max<int>(n, static_cast<int>(std::max(u, v)) + 1);
    }
    if (declared) {
        if (*declared < n) throw ParseError("edge list: declared order smaller than largest id", 0);
        n = *declared;
    }
    return Graph(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# n " << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

// ---------------------------------------------------------------------------
// planar_code (plantri): header ">>planar_code<<" (optionally " le"/" be" before "<<"),
// then per graph: order, then for each vertex its neighbors 1-based in rotation order,
// each list closed by 0. Entries are bytes, or 16-bit words when the order byte is 0.
// ---------------------------------------------------------------------------

namespace detail {

class ByteCursor {
 public:
    explicit ByteCursor(std::string data) : data_(std::move(data)) {}

    bool at_end() const { return pos_ >= data_.size(); }
    std::size_t offset() const { return pos_; }
    std::string_view rest() const { return std::string_view(data_).substr(pos_); }
    void skip(std::size_t k) { pos_ += k; }

    unsigned byte() {
        if (at_end()) throw ParseError("planar_code: truncated", pos_);
        return static_cast<unsigned char>(data_[pos_++]);
    }
    unsigned word(bool big_endian) {
        unsigned a = byte();
        unsigned b = byte();
        return big_endian ? (a << 8) | b : a | (b << 8);
    }

 private:
    std::string data_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline std::vector<PlaneGraph> read_planar_code(std::istream& in) {
    detail::ByteCursor cur(std::string(std::istreambuf_iterator<char>(in), {}));
    bool big_endian = false;
    for (std::string_view h : {">>planar_code<<", ">>planar_code le<<", ">>planar_code be<<"}) {
        if (cur.rest().substr(0, h.size()) == h) {
            big_endian = h.find("be") != std::string_view::npos;
            cur.skip(h.size());
            break;
        }
    }
    std::vector<PlaneGraph> out;
    while (!cur.at_end()) {
        const std::size_t start = cur.offset();
        bool wide = false;
        unsigned n = cur.byte();
        if (n == 0) {
            wide = true;
            n = cur.word(big_endian);
        }
        if (n > static_cast<unsigned>(kMaxVertices)) {
            throw ParseError("planar_code: order " + std::to_string(n) + " exceeds " +
                                 std::to_string(kMaxVertices),
                             start);
        }
        std::vector<std::vector<Vertex>> rotation(n);
        std::vector<Edge> edges;
        for (unsigned v = 0; v < n; ++v) {
            while (true) {
                const std::size_t at = cur.offset();
                unsigned w = wide ? cur.word(big_endian) : cur.byte();
                if (w == 0) break;
                if (w > n) throw ParseError("planar_code: neighbor id " + std::to_string(w) + " > n", at);
                if (w - 1 == v) throw FormatError("planar_code: self-loop at vertex " + std::to_string(v + 1));
                for (Vertex seen : rotation[v]) {
                    if (seen == static_cast<Vertex>(w - 1)) {
                        throw FormatError("planar_code: repeated neighbor " + std::to_string(w) + " of vertex " +
                                          std::to_string(v + 1));
                    }
                }
                rotation[v].push_back(static_cast<Vertex>(w - 1));
                edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w - 1));
            }
        }
        Graph g(static_cast<int>(n), edges);
        if (!rotation_matches(g, rotation)) {
            throw FormatError("planar_code: rotation of graph at byte " + std::to_string(start) +
                              " is not symmetric");
        }
        out.push_back(PlaneGraph{std::move(g), make_embedding(std::move(rotation))});
    }
    return out;
}

inline void write_planar_code_header(std::ostream& out) { out << ">>planar_code<<"; }

/// Appends one graph (no header). Orders above 255 would need the 16-bit form, which the
/// 64-vertex cap never reaches.
inline void write_planar_code(std::ostream& out, const Graph& g, const Embedding& emb) {
    if (!rotation_matches(g, emb.rotation)) throw InputError("embedding does not match graph");
    out.put(static_cast<char>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex u : emb.rotation[v]) out.put(static_cast<char>(u + 1));
        out.put('\0');
    }
}

// ---------------------------------------------------------------------------
// format dispatch
// ---------------------------------------------------------------------------

inline std::optional<GraphFormat> format_from_name(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "edge-list" || name == "edgelist" || name == "el") return GraphFormat::edge_list;
    if (name == "planar_code" || name == "planar-code" || name == "pc") return GraphFormat::planar_code;
    return std::nullopt;
}

/// Guesses from the file extension, then from the first bytes.
inline GraphFormat sniff_format(std::string_view path, std::string_view head) {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
    };
    if (ends_with(".pc") || ends_with(".plc") || ends_with(".planar_code")) return GraphFormat::planar_code;
    if (ends_with(".g6") || ends_with(".graph6")) return GraphFormat::graph6;
    if (ends_with(".el") || ends_with(".edges") || ends_with(".txt")) return GraphFormat::edge_list;
    if (head.substr(0, 13) == ">>planar_code") return GraphFormat::planar_code;
    if (head.substr(0, 10) == ">>graph6<<") return GraphFormat::graph6;
    bool digits = !head.empty();
    for (char c : head.substr(0, head.find('\n'))) {
        if (!(c == ' ' || c == '\t' || c == '\r' || c == '#' || (c >= '0' && c <= '9'))) digits = false;
    }
    return digits ? GraphFormat::edge_list : GraphFormat::graph6;
}

/// Reads every graph in a stream. planar_code entries carry their embedding.
inline std::vector<PlaneGraph> read_graphs(std::istream& in, GraphFormat format) {
    std::vector<PlaneGraph> out;
    switch (format) {
        case GraphFormat::graph6:
            for (auto& g : read_graph6(in)) out.push_back(PlaneGraph{std::move(g), {}});
            break;
        case GraphFormat::edge_list:
            out.push_back(PlaneGraph{read_edge_list(in), {}});
            break;
        case GraphFormat::planar_code:
            out = read_planar_code(in);
            break;
    }
    return out;
}

}  // namespace totbond
