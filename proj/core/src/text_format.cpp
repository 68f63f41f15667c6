#include "strongk/text_format.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace strongk {

namespace {

// Strict non-negative decimal parse; rejects trailing junk.
bool parse_int(const std::string& tok, int& out) {
    if (tok.empty() || tok.size() > 9) return false;
    int v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

} // namespace

Digraph read_digraph(std::istream& in, const std::string& source) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) fail(source, 1, "missing header line");
    ++lineno;
    std::istringstream header(line);
    std::string ntok, mtok, extra;
    int n = 0, m = 0;
    if (!(header >> ntok >> mtok) || (header >> extra) || !parse_int(ntok, n) ||
        !parse_int(mtok, m))
        fail(source, lineno, "expected header \"n m\"");
    std::vector<Arc> arcs;
    arcs.reserve(m);
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            fail(source, lineno + 1, "expected " + std::to_string(m) +
                                         " arc lines, got " +
                                         std::to_string(i));
        ++lineno;
        std::istringstream ls(line);
        std::string utok, vtok;
        int u = 0, v = 0;
        if (!(ls >> utok >> vtok) || (ls >> extra) || !parse_int(utok, u) ||
            !parse_int(vtok, v))
            fail(source, lineno, "expected arc line \"u v\"");
        if (u >= n || v >= n)
            fail(source, lineno, "arc endpoint out of range");
        if (u == v) fail(source, lineno, "loop not allowed");
        if (!seen.insert({u, v}).second)
            fail(source, lineno, "duplicate arc");
        arcs.push_back({u, v});
    }
    return Digraph(n, std::move(arcs));
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return read_digraph(in, path);
}

std::string write_digraph(const Digraph& d) {
    std::string out = std::to_string(d.order()) + " " +
                      std::to_string(d.arc_count()) + "\n";
    for (const Arc& a : d.arcs())
        out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
    return out;
}

void write_digraph_file(const Digraph& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << write_digraph(d);
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        int v = 0;
        if (!parse_int(tok, v))
            throw ParseError("bad vertex id in list: \"" + tok + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty vertex list");
    return out;
}

std::string to_dot(const Digraph& d, const std::string& name) {
    std::string out = "digraph " + name + " {\n";
    for (int v = 0; v < d.order(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (const Arc& a : d.arcs())
        out += "  " + std::to_string(a.from) + " -> " + std::to_string(a.to) +
               ";\n";
    out += "}\n";
    return out;
}

} // namespace strongk
