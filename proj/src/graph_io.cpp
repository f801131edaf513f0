#include "kgraphlab/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace kgraphlab {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::stringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "expected an integer, got '" + tok + "'", line);
    }
}

}  // namespace

KGraph parse_graph_text(const std::string& text) {
    Skeleton sk;
    FactorizationRule rules;
    std::map<std::string, int> vid;
    std::map<std::string, std::pair<int, int>> eid;  // name -> (index, line)
    std::map<std::string, int> vline;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_k = false;
    std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> square_lines;

    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "k") {
            if (toks.size() != 2) throw Error(ErrorCode::ParseError, "usage: k <rank>", lineno);
            if (have_k) throw Error(ErrorCode::ParseError, "rank declared twice", lineno);
            sk.k = parse_int(toks[1], lineno);
            if (sk.k < 1) throw Error(ErrorCode::ParseError, "rank must be >= 1", lineno);
            have_k = true;
        } else if (kw == "vertex") {
            if (toks.size() != 2) throw Error(ErrorCode::ParseError, "usage: vertex <id>", lineno);
            if (vid.count(toks[1]))
                throw Error(ErrorCode::ParseError,
                            "duplicate vertex id '" + toks[1] + "' (first seen at line " +
                                std::to_string(vline[toks[1]]) + ")",
                            lineno);
            vid[toks[1]] = static_cast<int>(sk.vertices.size());
            vline[toks[1]] = lineno;
            sk.vertices.push_back(toks[1]);
        } else if (kw == "edge") {
            if (!have_k) throw Error(ErrorCode::ParseError, "rank k must be declared before edges", lineno);
            if (toks.size() != 5) throw Error(ErrorCode::ParseError, "usage: edge <id> <color> <range> <source>", lineno);
            if (eid.count(toks[1]))
                throw Error(ErrorCode::ParseError,
                            "duplicate edge id '" + toks[1] + "' (first seen at line " +
                                std::to_string(eid[toks[1]].second) + ")",
                            lineno);
            EdgeRec rec;
            rec.name = toks[1];
            rec.color = parse_int(toks[2], lineno);
            if (rec.color < 1 || (have_k && rec.color > sk.k))
                throw Error(ErrorCode::ParseError, "edge color " + toks[2] + " out of range 1.." + std::to_string(sk.k),
                            lineno);
            auto rv = vid.find(toks[3]);
            auto sv = vid.find(toks[4]);
            if (rv == vid.end()) throw Error(ErrorCode::ParseError, "unknown range vertex '" + toks[3] + "'", lineno);
            if (sv == vid.end()) throw Error(ErrorCode::ParseError, "unknown source vertex '" + toks[4] + "'", lineno);
            rec.range = rv->second;
            rec.source = sv->second;
            eid[rec.name] = {static_cast<int>(sk.edges.size()), lineno};
            sk.edges.push_back(rec);
        } else if (kw == "square") {
            if (toks.size() != 6 || toks[3] != "=")
                throw Error(ErrorCode::ParseError, "usage: square <e_i> <f_j> = <f'_j> <e'_i>", lineno);
            square_lines.emplace_back(toks[1], toks[2], toks[4], toks[5], lineno);
        } else {
            throw Error(ErrorCode::ParseError, "unknown directive '" + kw + "'", lineno);
        }
    }
    if (!have_k) throw Error(ErrorCode::ParseError, "missing 'k <rank>' line", lineno);

    for (const auto& [a, b, b2, a2, line] : square_lines) {
        auto lookup = [&, line = line](const std::string& name) {
            auto it = eid.find(name);
            if (it == eid.end()) throw Error(ErrorCode::ParseError, "unknown edge '" + name + "' in square", line);
            return it->second.first;
        };
        SquareRule sq;
        sq.line = line;
        sq.a = lookup(a);
        sq.b = lookup(b);
        sq.b2 = lookup(b2);
        sq.a2 = lookup(a2);
        rules.squares.push_back(sq);
    }

    return validate_kgraph(sk, rules);
}

KGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

std::string graph_to_text(const KGraph& g) {
    std::ostringstream out;
    out << "k " << g.k << "\n";
    for (const auto& v : g.vertex_names) out << "vertex " << v << "\n";
    for (const auto& e : g.edges)
        out << "edge " << e.name << " " << e.color << " " << g.vertex_names[e.range] << " "
            << g.vertex_names[e.source] << "\n";
    for (const auto& [lhs, rhs] : g.sorted_to_unsorted)
        out << "square " << g.edges[lhs.first].name << " " << g.edges[lhs.second].name << " = "
            << g.edges[rhs.first].name << " " << g.edges[rhs.second].name << "\n";
    return out.str();
}

}  // namespace kgraphlab
