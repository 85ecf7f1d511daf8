#include "oneplanar/io.hpp"

#include <istream>
#include <set>
#include <sstream>
#include <vector>

namespace oneplanar {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('#'));
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    for (std::string t; iss >> t;) out.push_back(t);
    return out;
}

int parse_vertex(const std::string& t, int line) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        fail(line, "expected a nonnegative integer, got '" + t + "'");
    try {
        return std::stoi(t);
    } catch (const std::out_of_range&) {
        fail(line, "integer out of range: '" + t + "'");
    }
}

Edge parse_edge_of(const Graph& g, const std::string& tu, const std::string& tv,
                   int line) {
    int u = parse_vertex(tu, line), v = parse_vertex(tv, line);
    if (u >= g.vertex_count() || v >= g.vertex_count())
        fail(line, "vertex out of range");
    if (!g.has_edge(u, v)) fail(line, "no such edge " + tu + " " + tv);
    return mk_edge(u, v);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string raw;
    int line = 0;
    int fixed_n = -1;
    bool saw_edge = false;
    std::set<Edge> edges;
    int max_id = -1;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = clean(raw);
        if (s.empty()) continue;
        std::vector<std::string> t = tokens(s);
        if (t[0] == "n") {
            if (saw_edge || fixed_n >= 0) fail(line, "misplaced 'n' header");
            if (t.size() != 2) fail(line, "expected 'n <count>'");
            fixed_n = parse_vertex(t[1], line);
            continue;
        }
        if (t.size() != 2) fail(line, "expected 'u v'");
        int u = parse_vertex(t[0], line), v = parse_vertex(t[1], line);
        if (u == v) fail(line, "self-loop " + t[0] + " " + t[0]);
        if (!edges.insert(mk_edge(u, v)).second)
            fail(line, "duplicate edge " + t[0] + " " + t[1]);
        max_id = std::max({max_id, u, v});
        saw_edge = true;
    }
    int n = fixed_n >= 0 ? fixed_n : max_id + 1;
    if (max_id >= n) throw ParseError("vertex id " + std::to_string(max_id) +
                                      " exceeds the declared count");
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

std::string emit_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << e.first << " " << e.second << "\n";
    return out.str();
}

ConstraintSet parse_constraints(std::istream& in, const Graph& g) {
    ConstraintSet cs;
    std::map<Edge, int> colors;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = clean(raw);
        if (s.empty()) continue;
        std::vector<std::string> t = tokens(s);
        if (t[0] == "uncrossable" && t.size() == 3) {
            cs.uncrossable.insert(parse_edge_of(g, t[1], t[2], line));
        } else if (t[0] == "forbid" && t.size() == 5) {
            Edge e = parse_edge_of(g, t[1], t[2], line);
            Edge f = parse_edge_of(g, t[3], t[4], line);
            if (e == f) fail(line, "forbid needs two distinct edges");
            cs.forbidden_pairs.insert(std::minmax(e, f));
        } else if (t[0] == "color" && t.size() == 4) {
            int c = parse_vertex(t[1], line);
            Edge e = parse_edge_of(g, t[2], t[3], line);
            auto [it, fresh] = colors.emplace(e, c);
            if (!fresh && it->second != c) fail(line, "edge colored twice");
        } else {
            fail(line, "unrecognized directive '" + t[0] + "'");
        }
    }
    if (!colors.empty()) {
        for (const Edge& e : g.edges()) colors.emplace(mk_edge(e.first, e.second), 1);
        cs.colors = std::move(colors);
    }
    cs.validate_for(g);
    return cs;
}

CrossingWitness parse_witness(std::istream& in, const Graph& g) {
    CrossingWitness w;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = clean(raw);
        if (s.empty()) continue;
        std::vector<std::string> t = tokens(s);
        if (t[0] != "cross" || t.size() != 5)
            fail(line, "expected 'cross u1 v1 u2 v2'");
        Edge e = parse_edge_of(g, t[1], t[2], line);
        Edge f = parse_edge_of(g, t[3], t[4], line);
        w.pairs.emplace_back(e, f);
    }
    w.normalize();
    return w;
}

std::string emit_witness(const CrossingWitness& w) {
    std::ostringstream out;
    for (const auto& [e, f] : w.pairs)
        out << "cross " << e.first << " " << e.second << " " << f.first << " "
            << f.second << "\n";
    return out.str();
}

}  // namespace oneplanar
