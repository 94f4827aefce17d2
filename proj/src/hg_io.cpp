#include "turan/hg_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace turan {

namespace {

bool data_line(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace

Family read_hg(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, k = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (!data_line(line)) continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> k)) throw HgParseError(lineno, "expected header '<n> <k>'");
            std::string rest;
            if (ss >> rest) throw HgParseError(lineno, "trailing tokens after header");
            if (n < 0 || n > VertexSet::max_vertices)
                throw HgParseError(lineno, "ground-set size must be in 0.." + std::to_string(VertexSet::max_vertices));
            if (k < 1) throw HgParseError(lineno, "uniformity must be positive");
            continue;
        }
        Edge e;
        int prev = 0;
        int v;
        int count = 0;
        while (ss >> v) {
            if (v < 1 || v > n) throw HgParseError(lineno, "vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
            if (v <= prev) throw HgParseError(lineno, "vertices must be strictly ascending");
            e.insert(v);
            prev = v;
            ++count;
        }
        if (!ss.eof()) throw HgParseError(lineno, "malformed vertex token");
        if (count != k) throw HgParseError(lineno, "expected " + std::to_string(k) + " vertices, got " + std::to_string(count));
        if (!seen.insert(e).second) throw HgParseError(lineno, "duplicate edge " + e.to_string());
        edges.push_back(e);
    }
    if (n < 0) throw HgParseError(lineno, "missing header '<n> <k>'");
    return make_family(n, k, std::move(edges));
}

Family read_hg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_hg(in);
}

void write_hg(std::ostream& out, const Family& family) {
    out << family.n << ' ' << family.k << '\n';
    for (const Edge& e : family.edges) {
        bool first = true;
        e.for_each([&](int v) {
            if (!first) out << ' ';
            out << v;
            first = false;
        });
        out << '\n';
    }
}

void write_hg_file(const std::string& path, const Family& family) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_hg(out, family);
}

std::string to_hg_string(const Family& family) {
    std::ostringstream ss;
    write_hg(ss, family);
    return ss.str();
}

}  // namespace turan
