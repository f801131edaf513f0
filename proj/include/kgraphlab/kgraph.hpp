#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgraphlab/degree.hpp"
#include "kgraphlab/error.hpp"

namespace kgraphlab {

// Colors are 1-based, matching the graph file format.
struct EdgeRec {
    std::string name;
    int color = 0;
    int range = 0;
    int source = 0;
};

struct Skeleton {
    int k = 0;
    std::vector<std::string> vertices;
    std::vector<EdgeRec> edges;  // endpoints are indices into `vertices`
};

// One commuting square: compose(a, b) = compose(b2, a2) with
// color(a) = color(a2) < color(b) = color(b2). Fields are edge indices.
struct SquareRule {
    int a = -1, b = -1, b2 = -1, a2 = -1;
    int line = -1;  // source line when parsed from a file
};

struct FactorizationRule {
    std::vector<SquareRule> squares;
};

// Morphism in canonical form: edge list in composition order (range end
// first), colors nondecreasing. Two paths are equal iff field-wise equal.
struct Path {
    Degree degree;
    std::vector<int> edges;
    int range = -1;
    int source = -1;

    bool is_vertex() const { return edges.empty(); }
    auto operator<=>(const Path&) const = default;
};

class KGraph {
public:
    int k = 0;
    std::vector<std::string> vertex_names;
    std::vector<EdgeRec> edges;
    std::map<std::string, int> vertex_id;
    std::map<std::string, int> edge_id;

    // sorted_to_unsorted[(a,b)] = (b2,a2) and its inverse; keys/values are
    // adjacent edge pairs in composition order.
    std::map<std::pair<int, int>, std::pair<int, int>> sorted_to_unsorted;
    std::map<std::pair<int, int>, std::pair<int, int>> unsorted_to_sorted;

    int num_vertices() const { return static_cast<int>(vertex_names.size()); }
    int color(int edge) const { return edges[edge].color; }

    Path vertex_path(int v) const;
    Path edge_path(int e) const;

    // Canonical normal form of mu.nu; throws NotComposable.
    Path compose(const Path& mu, const Path& nu) const;

    // lambda(m, n) for 0 <= m <= n <= d(lambda); throws DegreeOutOfRange.
    Path segment(const Path& lambda, const Degree& m, const Degree& n) const;

    std::set<Path> paths_of_degree(std::optional<int> range, const Degree& n) const;
    std::set<Path> paths_up_to(const Degree& bound) const;
    std::set<Path> paths_up_to(std::optional<int> range, const Degree& bound) const;

    // Builds the canonical path for an edge-index sequence given in
    // composition order; throws NotComposable.
    Path make_path(const std::vector<int>& edge_seq) const;

    // "v" for a vertex, "e.f" for an edge sequence (vertex names win for
    // single tokens).
    Path parse_path(const std::string& literal) const;
    std::string path_str(const Path& p) const;

    Degree zero_degree() const { return Degree::zero(k); }

private:
    friend KGraph validate_kgraph(const Skeleton& skeleton, const FactorizationRule& rules);

    // Edges of each color grouped by range vertex, sorted by name.
    std::vector<std::vector<std::vector<int>>> edges_by_color_range_;

    void normalize(std::vector<int>& es) const;
    void normalize_rightmost(std::vector<int>& es) const;
    void swap_adjacent(std::vector<int>& es, size_t pos) const;
    // Moves the first color-`color` edge to the front of `es` through
    // squares and pops it; `es` stays canonical.
    int extract_front(std::vector<int>& es, int color) const;

    void check_cubes() const;
};

// Validates totality/bijectivity of the squares, endpoint preservation and
// (for k >= 3) cube consistency. Throws Error on the first violation found.
KGraph validate_kgraph(const Skeleton& skeleton, const FactorizationRule& rules);

}  // namespace kgraphlab
