#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "graph.hpp"

namespace moqc {

enum class GraphFormat { auto_detect, edge_list, dimacs, matrix_market };

inline GraphFormat parse_format(const std::string& name) {
    if (name == "auto") return GraphFormat::auto_detect;
    if (name == "edges" || name == "edgelist" || name == "edge-list") return GraphFormat::edge_list;
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "mtx" || name == "matrix-market" || name == "matrixmarket")
        return GraphFormat::matrix_market;
    throw invalid_input("unknown graph format: " + name);
}

namespace detail {

inline bool parse_ll(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

inline Graph load_edge_list(std::istream& in, const std::string& path) {
    GraphBuilder b;
    std::string line;
    long ln = 0;
    bool any = false;
    while (std::getline(in, line)) {
        ++ln;
        auto tk = tokens(line);
        if (tk.empty() || tk[0][0] == '#' || tk[0][0] == '%') continue;
        if (tk.size() < 2) throw parse_error(path, ln, "expected 'u v'");
        long long u, v;
        if (!parse_ll(tk[0], u) || !parse_ll(tk[1], v))
            throw parse_error(path, ln, "vertex labels must be integers");
        b.add_edge(u, v);
        any = true;
    }
    if (!any) throw parse_error(path, 0, "no edges in edge list");
    return b.finish();
}

inline Graph load_dimacs(std::istream& in, const std::string& path) {
    GraphBuilder b;
    std::string line;
    long ln = 0;
    long long n = -1, declared_m = -1, seen = 0;
    while (std::getline(in, line)) {
        ++ln;
        auto tk = tokens(line);
        if (tk.empty() || tk[0] == "c") continue;
        if (tk[0] == "p") {
            if (n >= 0) throw parse_error(path, ln, "duplicate problem line");
            if (tk.size() < 4 || (tk[1] != "edge" && tk[1] != "col"))
                throw parse_error(path, ln, "expected 'p edge <n> <m>'");
            if (!parse_ll(tk[2], n) || !parse_ll(tk[3], declared_m) || n < 0 || declared_m < 0)
                throw parse_error(path, ln, "bad problem line counts");
            if (n == 0) throw invalid_input(path + ": graph has an empty vertex set");
            b.declare_labels(n);
        } else if (tk[0] == "e") {
            if (n < 0) throw parse_error(path, ln, "edge before problem line");
            long long u, v;
            if (tk.size() < 3 || !parse_ll(tk[1], u) || !parse_ll(tk[2], v))
                throw parse_error(path, ln, "expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(path, ln, "vertex out of range 1..n");
            b.add_edge(u, v);
            ++seen;
        } else {
            throw parse_error(path, ln, "unknown line type '" + tk[0] + "'");
        }
    }
    if (n < 0) throw parse_error(path, 0, "missing problem line");
    return b.finish();
}

inline Graph load_matrix_market(std::istream& in, const std::string& path) {
    std::string line;
    long ln = 0;
    if (!std::getline(in, line)) throw parse_error(path, 1, "empty file");
    ++ln;
    auto hdr = tokens(line);
    if (hdr.size() < 4 || hdr[0] != "%%MatrixMarket" || hdr[1] != "matrix")
        throw parse_error(path, ln, "not a MatrixMarket matrix header");
    if (hdr[2] != "coordinate")
        throw parse_error(path, ln, "only coordinate format is supported");
    // field (hdr[3]) is ignored: values, if present, are skipped.
    long long rows = -1, cols = -1, nnz = -1;
    while (std::getline(in, line)) {
        ++ln;
        auto tk = tokens(line);
        if (tk.empty() || tk[0][0] == '%') continue;
        if (tk.size() < 3 || !parse_ll(tk[0], rows) || !parse_ll(tk[1], cols) ||
            !parse_ll(tk[2], nnz))
            throw parse_error(path, ln, "expected size line 'rows cols nnz'");
        break;
    }
    if (rows < 0) throw parse_error(path, 0, "missing size line");
    long long n = std::max(rows, cols);
    if (n == 0) throw invalid_input(path + ": graph has an empty vertex set");
    GraphBuilder b;
    b.declare_labels(n);
    long long seen = 0;
    while (std::getline(in, line)) {
        ++ln;
        auto tk = tokens(line);
        if (tk.empty() || tk[0][0] == '%') continue;
        long long u, v;
        if (tk.size() < 2 || !parse_ll(tk[0], u) || !parse_ll(tk[1], v))
            throw parse_error(path, ln, "expected entry 'i j [value]'");
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error(path, ln, "index out of range");
        b.add_edge(u, v);
        ++seen;
    }
    if (seen != nnz) throw parse_error(path, ln, "entry count does not match header");
    return b.finish();
}

inline GraphFormat sniff_format(const std::string& path) {
    auto ends_with = [&](const std::string& suf) {
        return path.size() >= suf.size() &&
               path.compare(path.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends_with(".mtx")) return GraphFormat::matrix_market;
    if (ends_with(".dimacs") || ends_with(".col") || ends_with(".clq"))
        return GraphFormat::dimacs;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        auto tk = tokens(line);
        if (tk.empty()) continue;
        if (tk[0] == "%%MatrixMarket") return GraphFormat::matrix_market;
        if (tk[0][0] == '%' || tk[0][0] == '#') continue;
        if (tk[0] == "c" || tk[0] == "p" || tk[0] == "e") return GraphFormat::dimacs;
        return GraphFormat::edge_list;
    }
    return GraphFormat::edge_list;
}

} // namespace detail

inline Graph load_graph(const std::string& path,
                        GraphFormat format = GraphFormat::auto_detect) {
    if (format == GraphFormat::auto_detect) format = detail::sniff_format(path);
    std::ifstream in(path);
    if (!in) throw parse_error(path, 0, "cannot open file");
    switch (format) {
        case GraphFormat::edge_list: return detail::load_edge_list(in, path);
        case GraphFormat::dimacs: return detail::load_dimacs(in, path);
        case GraphFormat::matrix_market: return detail::load_matrix_market(in, path);
        default: throw invalid_input("unresolved graph format");
    }
}

} // namespace moqc
