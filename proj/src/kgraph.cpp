#include "kgraphlab/kgraph.hpp"

#include <algorithm>
#include <sstream>

namespace kgraphlab {

Path KGraph::vertex_path(int v) const {
    Path p;
    p.degree = zero_degree();
    p.range = v;
    p.source = v;
    return p;
}

Path KGraph::edge_path(int e) const {
    Path p;
    p.degree = Degree::unit(k, edges[e].color - 1);
    p.edges = {e};
    p.range = edges[e].range;
    p.source = edges[e].source;
    return p;
}

void KGraph::swap_adjacent(std::vector<int>& es, size_t pos) const {
    int x = es[pos], y = es[pos + 1];
    if (color(x) < color(y)) {
        auto it = sorted_to_unsorted.find({x, y});
        if (it == sorted_to_unsorted.end())
            throw Error(ErrorCode::MissingSquare,
                        "no square for pair " + edges[x].name + "." + edges[y].name);
        es[pos] = it->second.first;
        es[pos + 1] = it->second.second;
    } else if (color(x) > color(y)) {
        auto it = unsorted_to_sorted.find({x, y});
        if (it == unsorted_to_sorted.end())
            throw Error(ErrorCode::MissingSquare,
                        "no square for pair " + edges[x].name + "." + edges[y].name);
        es[pos] = it->second.first;
        es[pos + 1] = it->second.second;
    } else {
        throw Error(ErrorCode::InvalidArgument, "cannot transpose equal colors");
    }
}

void KGraph::normalize(std::vector<int>& es) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < es.size(); ++i) {
            if (color(es[i]) > color(es[i + 1])) {
                swap_adjacent(es, i);
                changed = true;
                break;  // leftmost inversion first
            }
        }
    }
}

void KGraph::normalize_rightmost(std::vector<int>& es) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = es.size(); i-- > 1;) {
            if (color(es[i - 1]) > color(es[i])) {
                swap_adjacent(es, i - 1);
                changed = true;
                break;
            }
        }
    }
}

int KGraph::extract_front(std::vector<int>& es, int color_wanted) const {
    size_t p = 0;
    while (p < es.size() && color(es[p]) != color_wanted) ++p;
    if (p == es.size())
        throw Error(ErrorCode::DegreeOutOfRange, "no edge of color " + std::to_string(color_wanted) + " left");
    // Everything before position p has strictly smaller color, so each
    // transposition is a genuine square application.
    for (size_t q = p; q > 0; --q) swap_adjacent(es, q - 1);
    int front = es.front();
    es.erase(es.begin());
    return front;
}

Path KGraph::compose(const Path& mu, const Path& nu) const {
    if (mu.source != nu.range)
        throw Error(ErrorCode::NotComposable,
                    "s(" + path_str(mu) + ") = " + vertex_names[mu.source] + " != r(" + path_str(nu) + ") = " +
                        vertex_names[nu.range]);
    Path out;
    out.degree = mu.degree + nu.degree;
    out.edges = mu.edges;
    out.edges.insert(out.edges.end(), nu.edges.begin(), nu.edges.end());
    normalize(out.edges);
    out.range = mu.range;
    out.source = nu.source;
    return out;
}

Path KGraph::segment(const Path& lambda, const Degree& m, const Degree& n) const {
    if (!leq(Degree::zero(k), m) || !leq(m, n) || !leq(n, lambda.degree))
        throw Error(ErrorCode::DegreeOutOfRange,
                    "segment bounds " + m.str() + ", " + n.str() + " for path of degree " + lambda.degree.str());
    std::vector<int> rest = lambda.edges;
    int cursor = lambda.range;
    auto take = [&](const Degree& t) {
        std::vector<int> pref;
        for (int c = 1; c <= k; ++c)
            for (int i = 0; i < t[c - 1]; ++i) pref.push_back(extract_front(rest, c));
        if (!pref.empty()) cursor = edges[pref.back()].source;
        return pref;
    };
    take(m);
    Path out;
    out.range = cursor;
    out.edges = take(n - m);
    out.degree = n - m;
    out.source = cursor;
    return out;
}

std::set<Path> KGraph::paths_of_degree(std::optional<int> range, const Degree& n) const {
    std::set<Path> out;
    std::vector<int> starts;
    if (range) {
        starts.push_back(*range);
    } else {
        for (int v = 0; v < num_vertices(); ++v) starts.push_back(v);
    }
    std::vector<int> acc;
    for (int v : starts) {
        // Extend color by color; within a color, chain edges range-to-source.
        auto rec = [&](auto&& self, int c, int remaining, int end) -> void {
            if (c > k) {
                Path p;
                p.degree = n;
                p.edges = acc;
                p.range = v;
                p.source = end;
                out.insert(std::move(p));
                return;
            }
            if (remaining == 0) {
                self(self, c + 1, c + 1 <= k ? n[c] : 0, end);
                return;
            }
            for (int e : edges_by_color_range_[c - 1][end]) {
                acc.push_back(e);
                self(self, c, remaining - 1, edges[e].source);
                acc.pop_back();
            }
        };
        rec(rec, 1, n[0], v);
    }
    return out;
}

std::set<Path> KGraph::paths_up_to(const Degree& bound) const {
    return paths_up_to(std::nullopt, bound);
}

std::set<Path> KGraph::paths_up_to(std::optional<int> range, const Degree& bound) const {
    std::set<Path> out;
    for (const Degree& n : degrees_up_to(bound)) {
        auto batch = paths_of_degree(range, n);
        out.insert(batch.begin(), batch.end());
    }
    return out;
}

Path KGraph::make_path(const std::vector<int>& edge_seq) const {
    if (edge_seq.empty()) throw Error(ErrorCode::InvalidArgument, "empty edge sequence");
    Path out;
    out.degree = zero_degree();
    for (size_t i = 0; i + 1 < edge_seq.size(); ++i) {
        if (edges[edge_seq[i]].source != edges[edge_seq[i + 1]].range)
            throw Error(ErrorCode::NotComposable,
                        "edges " + edges[edge_seq[i]].name + " and " + edges[edge_seq[i + 1]].name +
                            " are not composable");
    }
    for (int e : edge_seq) out.degree.coords[edges[e].color - 1] += 1;
    out.edges = edge_seq;
    normalize(out.edges);
    out.range = edges[edge_seq.front()].range;
    out.source = edges[edge_seq.back()].source;
    return out;
}

Path KGraph::parse_path(const std::string& literal) const {
    auto vit = vertex_id.find(literal);
    if (vit != vertex_id.end()) return vertex_path(vit->second);
    std::vector<int> seq;
    std::stringstream ss(literal);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        auto eit = edge_id.find(tok);
        if (eit == edge_id.end())
            throw Error(ErrorCode::InvalidArgument, "unknown edge or vertex '" + tok + "' in path '" + literal + "'");
        seq.push_back(eit->second);
    }
    return make_path(seq);
}

std::string KGraph::path_str(const Path& p) const {
    if (p.is_vertex()) return vertex_names[p.range];
    std::string s;
    for (size_t i = 0; i < p.edges.size(); ++i) {
        if (i) s += ".";
        s += edges[p.edges[i]].name;
    }
    return s;
}

void KGraph::check_cubes() const {
    // Local confluence on overlapping redexes: every composable tri-colored
    // triple must reach the same normal form under leftmost and rightmost
    // rewriting.
    for (size_t a = 0; a < edges.size(); ++a) {
        for (size_t b = 0; b < edges.size(); ++b) {
            if (edges[a].source != edges[b].range) continue;
            if (edges[a].color == edges[b].color) continue;
            for (size_t c = 0; c < edges.size(); ++c) {
                if (edges[b].source != edges[c].range) continue;
                if (edges[c].color == edges[a].color || edges[c].color == edges[b].color) continue;
                std::vector<int> l = {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
                std::vector<int> r = l;
                normalize(l);
                normalize_rightmost(r);
                if (l != r)
                    throw Error(ErrorCode::CubeInconsistency,
                                "triple " + edges[a].name + "." + edges[b].name + "." + edges[c].name +
                                    " has two distinct normal forms");
            }
        }
    }
}

KGraph validate_kgraph(const Skeleton& skeleton, const FactorizationRule& rules) {
    if (skeleton.k < 1) throw Error(ErrorCode::InvalidArgument, "rank k must be >= 1");
    if (skeleton.vertices.empty()) throw Error(ErrorCode::EmptyGraph, "skeleton has no vertices");

    KGraph g;
    g.k = skeleton.k;
    g.vertex_names = skeleton.vertices;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!g.vertex_id.emplace(g.vertex_names[v], v).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate vertex id '" + g.vertex_names[v] + "'");
    }
    g.edges = skeleton.edges;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const EdgeRec& rec = g.edges[e];
        if (!g.edge_id.emplace(rec.name, static_cast<int>(e)).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate edge id '" + rec.name + "'");
        if (rec.color < 1 || rec.color > g.k)
            throw Error(ErrorCode::InvalidArgument, "edge '" + rec.name + "' has color out of range");
        if (rec.range < 0 || rec.range >= g.num_vertices() || rec.source < 0 || rec.source >= g.num_vertices())
            throw Error(ErrorCode::InvalidArgument, "edge '" + rec.name + "' has missing endpoint");
    }

    auto ename = [&](int e) { return g.edges[e].name; };
    auto pairname = [&](std::pair<int, int> p) { return ename(p.first) + "." + ename(p.second); };

    for (const SquareRule& sq : rules.squares) {
        const EdgeRec &a = g.edges[sq.a], &b = g.edges[sq.b], &b2 = g.edges[sq.b2], &a2 = g.edges[sq.a2];
        if (!(a.color < b.color) || a2.color != a.color || b2.color != b.color)
            throw Error(ErrorCode::EndpointMismatch,
                        "square " + ename(sq.a) + " " + ename(sq.b) + " = " + ename(sq.b2) + " " + ename(sq.a2) +
                            " has a bad color pattern",
                        sq.line);
        if (a.source != b.range || b2.source != a2.range || a.range != b2.range || b.source != a2.source)
            throw Error(ErrorCode::EndpointMismatch,
                        "square " + ename(sq.a) + " " + ename(sq.b) + " = " + ename(sq.b2) + " " + ename(sq.a2) +
                            " does not preserve endpoints",
                        sq.line);
        auto fwd = g.sorted_to_unsorted.emplace(std::make_pair(sq.a, sq.b), std::make_pair(sq.b2, sq.a2));
        if (!fwd.second)
            throw Error(ErrorCode::NonBijectiveSquare, "pair " + pairname({sq.a, sq.b}) + " factored twice", sq.line);
        auto bwd = g.unsorted_to_sorted.emplace(std::make_pair(sq.b2, sq.a2), std::make_pair(sq.a, sq.b));
        if (!bwd.second)
            throw Error(ErrorCode::NonBijectiveSquare, "pair " + pairname({sq.b2, sq.a2}) + " hit twice", sq.line);
    }

    // Totality on both sides of the bijection.
    for (size_t x = 0; x < g.edges.size(); ++x) {
        for (size_t y = 0; y < g.edges.size(); ++y) {
            if (g.edges[x].source != g.edges[y].range) continue;
            int cx = g.edges[x].color, cy = g.edges[y].color;
            std::pair<int, int> key{static_cast<int>(x), static_cast<int>(y)};
            if (cx < cy && !g.sorted_to_unsorted.count(key))
                throw Error(ErrorCode::MissingSquare, "composable pair " + pairname(key) + " has no square");
            if (cx > cy && !g.unsorted_to_sorted.count(key))
                throw Error(ErrorCode::MissingSquare, "composable pair " + pairname(key) + " is not factored");
        }
    }

    g.edges_by_color_range_.assign(g.k, std::vector<std::vector<int>>(g.num_vertices()));
    std::vector<int> order(g.edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int l, int r) { return g.edges[l].name < g.edges[r].name; });
    for (int e : order) g.edges_by_color_range_[g.edges[e].color - 1][g.edges[e].range].push_back(e);

    if (g.k >= 3) g.check_cubes();
    return g;
}

}  // namespace kgraphlab
