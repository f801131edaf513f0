#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "kgraphlab/kgraph.hpp"

using namespace kgraphlab;

namespace {

bool throws_code(ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace

TEST_CASE("validate accepts the fixtures") {
    KGraph a = fixtures::fix_a();
    CHECK(a.k == 2);
    CHECK(a.num_vertices() == 1);
    KGraph b = fixtures::fix_b();
    CHECK(b.k == 1);
    CHECK(b.sorted_to_unsorted.empty());  // rules vacuous for k = 1
    CHECK(fixtures::fix_c().num_vertices() == 2);
    CHECK(fixtures::fix_d().edges.size() == 4);
    CHECK(fixtures::fix_e().k == 3);
}

TEST_CASE("validate rejects broken presentations") {
    CHECK(throws_code(ErrorCode::MissingSquare, [] {
        parse_graph_text("k 2\nvertex v\nedge e 1 v v\nedge f 2 v v\n");
    }));
    CHECK(throws_code(ErrorCode::EmptyGraph, [] { parse_graph_text("k 1\n"); }));
    CHECK(throws_code(ErrorCode::CubeInconsistency, [] { parse_graph_text(fixtures::kFixCubeBad); }));
    // Two squares landing on the same unsorted pair.
    CHECK(throws_code(ErrorCode::NonBijectiveSquare, [] {
        parse_graph_text(
            "k 2\nvertex v\nedge e1 1 v v\nedge e2 1 v v\nedge f 2 v v\n"
            "square e1 f = f e1\nsquare e2 f = f e1\n");
    }));
    // A square whose right side breaks the endpoints.
    CHECK(throws_code(ErrorCode::EndpointMismatch, [] {
        parse_graph_text(
            "k 2\nvertex u\nvertex v\nedge e 1 u u\nedge f 2 u v\nedge e2 1 v v\nedge f2 2 u v\n"
            "square e f = f2 e\n");
    }));
}

TEST_CASE("compose reaches the color-sorted normal form") {
    KGraph g = fixtures::fix_a();
    Path e = g.parse_path("e"), f = g.parse_path("f");
    Path ef = g.compose(e, f);
    Path fe = g.compose(f, e);
    CHECK(ef == fe);
    CHECK(ef.degree == Degree({1, 1}));
    CHECK(g.path_str(ef) == "e.f");

    // Unit law.
    CHECK(g.compose(g.vertex_path(e.range), e) == e);
    CHECK(g.compose(e, g.vertex_path(e.source)) == e);

    KGraph c = fixtures::fix_c();
    Path gp = c.parse_path("g");
    CHECK(throws_code(ErrorCode::NotComposable, [&] { c.compose(gp, gp); }));
}

TEST_CASE("segment factors canonically") {
    KGraph g = fixtures::fix_a();
    Path ef = g.parse_path("e.f");
    CHECK(g.segment(ef, Degree({0, 0}), ef.degree) == ef);
    CHECK(g.segment(ef, Degree({0, 0}), Degree({0, 0})) == g.vertex_path(ef.range));
    CHECK(g.segment(ef, Degree({0, 0}), Degree({0, 1})) == g.parse_path("f"));
    CHECK(g.segment(ef, Degree({0, 1}), Degree({1, 1})) == g.parse_path("e"));
    CHECK(throws_code(ErrorCode::DegreeOutOfRange, [&] { g.segment(ef, Degree({1, 1}), Degree({0, 0})); }));
}

TEST_CASE("segment recomposition on all bounded splits") {
    for (const KGraph& g : {fixtures::fix_a(), fixtures::fix_d()}) {
        for (const Path& lam : g.paths_up_to(Degree({2, 2}))) {
            for (const Degree& m : degrees_up_to(lam.degree)) {
                for (const Degree& n : degrees_up_to(lam.degree)) {
                    if (!leq(m, n)) continue;
                    Path left = g.segment(lam, g.zero_degree(), m);
                    Path mid = g.segment(lam, m, n);
                    Path right = g.segment(lam, n, lam.degree);
                    CHECK(g.compose(left, g.compose(mid, right)) == lam);
                }
            }
        }
    }
}

TEST_CASE("factorisation uniqueness, brute force") {
    KGraph g = fixtures::fix_d();
    for (const Path& lam : g.paths_up_to(Degree({2, 1}))) {
        for (const Degree& m : degrees_up_to(lam.degree)) {
            Degree n = lam.degree - m;
            int count = 0;
            for (const Path& mu : g.paths_of_degree(lam.range, m))
                for (const Path& nu : g.paths_of_degree(mu.source, n))
                    if (g.compose(mu, nu) == lam) ++count;
            CHECK(count == 1);
        }
    }
}

TEST_CASE("associativity on bounded composable triples") {
    for (const KGraph& g : {fixtures::fix_d(), fixtures::fix_e()}) {
        Degree cap(std::vector<int>(g.k, 1));
        auto all = g.paths_up_to(cap);
        for (const Path& a : all)
            for (const Path& b : all) {
                if (a.source != b.range) continue;
                for (const Path& c : all) {
                    if (b.source != c.range) continue;
                    CHECK(g.compose(g.compose(a, b), c) == g.compose(a, g.compose(b, c)));
                }
            }
    }
}

TEST_CASE("path enumeration") {
    KGraph a = fixtures::fix_a();
    CHECK(a.paths_of_degree(std::nullopt, Degree({2, 3})).size() == 1);
    CHECK(a.paths_up_to(Degree({1, 1})).size() == 4);
    CHECK(a.paths_up_to(Degree({0, 0})).size() == 1);  // |Lambda^0| = |vertices|

    KGraph b = fixtures::fix_b();
    auto cubes = b.paths_of_degree(std::nullopt, Degree({3}));
    REQUIRE(cubes.size() == 1);
    CHECK(b.path_str(*cubes.begin()) == "a.a.a");
    CHECK(b.paths_up_to(Degree({2})).size() == 3);

    KGraph c = fixtures::fix_c();
    auto vid = c.vertex_id.at("v");
    CHECK(c.paths_of_degree(vid, Degree({1})).empty());
    CHECK(c.paths_up_to(Degree({0})).size() == 2);
}

TEST_CASE("degree-zero paths are exactly the vertices") {
    for (const KGraph& g : {fixtures::fix_a(), fixtures::fix_c(), fixtures::fix_d()}) {
        auto zeros = g.paths_of_degree(std::nullopt, g.zero_degree());
        CHECK(static_cast<int>(zeros.size()) == g.num_vertices());
        for (const Path& p : zeros) CHECK(p.is_vertex());
    }
}
