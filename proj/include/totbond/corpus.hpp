#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "embedding.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"

namespace totbond {

struct CorpusItem {
    std::string id;
    Graph graph;
    /// Present for planar_code input.
    std::optional<Embedding> embedding;
};

namespace detail {

inline int parse_int(std::string_view s, std::string_view context) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
        throw InputError("corpus spec '" + std::string(context) + "': expected an integer, got '" + std::string(s) + "'");
    }
    return v;
}

/// "A..B" or "A".
inline std::pair<int, int> parse_range(std::string_view s, std::string_view context) {
    auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        int v = parse_int(s, context);
        return {v, v};
    }
    int a = parse_int(s.substr(0, dots), context);
    int b = parse_int(s.substr(dots + 2), context);
    if (a > b) throw InputError("corpus spec '" + std::string(context) + "': empty range");
    return {a, b};
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto at = s.find(sep, start);
        out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return out;
}

/// Partitions of n into at least two parts, each >= 2, nonincreasing.
inline void multipartite_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        if (cur.size() >= 2) out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 2; --p) {
        cur.push_back(p);
        multipartite_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

inline void generate_spec(std::string_view spec, std::vector<CorpusItem>& out) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw InputError("corpus '" + std::string(spec) + "' is neither a readable file nor a generator spec");
    }
    std::string_view kind = spec.substr(0, colon);
    if (kind == "named") {
        std::string_view what = spec.substr(colon + 1);
        std::optional<Graph> g;
        if (what == "petersen") g = petersen_graph();
        if (what == "cube") g = cube_graph();
        if (what == "icosahedron") g = icosahedron_graph();
        if (what == "t1") g = tree_t1();
        if (!g) throw InputError("corpus spec: unknown named graph '" + std::string(what) + "' (petersen, cube, icosahedron, t1)");
        out.push_back({std::string(spec), std::move(*g), std::nullopt});
        return;
    }
    if (kind == "kpartite") {
        std::vector<int> parts;
        for (auto f : split(spec.substr(colon + 1), ',')) parts.push_back(parse_int(f, spec));
        out.push_back({std::string(spec), complete_multipartite(parts), std::nullopt});
        return;
    }
    auto fields = split(spec.substr(colon + 1), ',');
    auto [lo, hi] = parse_range(fields[0], spec);
    auto add = [&](std::string id, Graph g) { out.push_back({std::move(id), std::move(g), std::nullopt}); };
    const std::string k(kind);
    if (kind == "path" || kind == "cycle" || kind == "complete" || kind == "star") {
        for (int n = lo; n <= hi; ++n) {
            Family f = kind == "path" ? Family::path : kind == "cycle" ? Family::cycle : kind == "complete" ? Family::complete : Family::star;
            add(k + ":" + std::to_string(n), generate({f, {n}}));
        }
    } else if (kind == "bipartite") {
        for (int a = lo; a <= hi; ++a) {
            for (int b = a; b <= hi; ++b) add("bipartite:" + std::to_string(a) + "," + std::to_string(b), complete_bipartite(a, b));
        }
    } else if (kind == "multipartite") {
        for (int n = lo; n <= hi; ++n) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            multipartite_partitions(n, n, cur, parts);
            for (const auto& p : parts) add("multipartite:" + join_ints(p), complete_multipartite(p));
        }
    } else if (kind == "trees") {
        for (int n = lo; n <= hi; ++n) {
            int i = 0;
            for_each_free_tree(n, [&](const Graph& t) { add("trees:" + std::to_string(n) + "#" + std::to_string(i++), t); });
        }
    } else if (kind == "graphs") {
        GraphFilter f;
        bool labeled = false;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            std::string_view opt = fields[i];
            auto eq = opt.find('=');
            std::string_view key = opt.substr(0, eq);
            if (key == "planar") {
                f.require_planar = true;
            } else if (key == "connected") {
                f.require_connected = true;
            } else if (key == "labeled") {
                labeled = true;
            } else if (eq != std::string_view::npos && (key == "mindeg" || key == "min-deg")) {
                f.min_degree = parse_int(opt.substr(eq + 1), spec);
            } else if (eq != std::string_view::npos && key == "girth") {
                f.min_girth = parse_int(opt.substr(eq + 1), spec);
            } else {
                throw InputError("corpus spec '" + std::string(spec) + "': unknown option '" + std::string(opt) + "'");
            }
        }
        for (int n = lo; n <= hi; ++n) {
            int i = 0;
            auto visit = [&](const Graph& g) { add("graphs:" + std::to_string(n) + "#" + std::to_string(i++), g); };
            if (labeled) {
                for_each_small_graph(n, f, visit);
            } else {
                for (const Graph& g : graphs_up_to_isomorphism(n, f)) visit(g);
            }
        }
    } else {
        throw InputError("corpus spec: unknown generator '" + std::string(kind) +
                         "' (path, cycle, complete, star, bipartite, multipartite, kpartite, trees, graphs, named)");
    }
}

}  // namespace detail

/// Reads every graph of a stream into items "<name>#<index>"; the format is sniffed from
/// `name` and the first bytes unless given.
inline std::vector<CorpusItem> read_corpus_stream(std::istream& in, const std::string& name,
                                                  std::optional<GraphFormat> format = std::nullopt) {
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    GraphFormat f = format.value_or(sniff_format(name, std::string_view(data).substr(0, 64)));
    std::istringstream stream(data);
    std::vector<CorpusItem> out;
    int i = 0;
    for (auto& pg : read_graphs(stream, f)) {
        std::optional<Embedding> emb;
        if (f == GraphFormat::planar_code) emb = std::move(pg.embedding);
        out.push_back({name + "#" + std::to_string(i++), std::move(pg.graph), std::move(emb)});
    }
    return out;
}

inline std::vector<CorpusItem> read_corpus_file(const std::filesystem::path& path, std::optional<GraphFormat> format = std::nullopt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open corpus file " + path.string());
    return read_corpus_stream(in, path.filename().string(), format);
}

/// A corpus source is a file path or '+'-joined generator specs:
///   path:A..B  cycle:A..B  complete:A..B  star:A..B (leaf count)
///   bipartite:A..B            every K_{m,n} with A <= m <= n <= B
///   multipartite:A..B         every K_{n1,...,nk}, k >= 2, parts >= 2, order in A..B
///   trees:A..B                free trees, one per isomorphism class
///   graphs:A..B[,mindeg=d][,girth=g][,planar][,connected][,labeled]
///   kpartite:n1,n2,...        one complete multipartite graph
///   named:petersen|cube|icosahedron|t1
inline std::vector<CorpusItem> load_corpus(std::string_view source) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(std::filesystem::path(source), ec)) return read_corpus_file(std::filesystem::path(source));
    std::vector<CorpusItem> out;
    for (auto part : detail::split(source, '+')) {
        if (std::filesystem::is_regular_file(std::filesystem::path(part), ec)) {
            auto more = read_corpus_file(std::filesystem::path(part));
            out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
        } else {
            detail::generate_spec(part, out);
        }
    }
    return out;
}

}  // namespace totbond
