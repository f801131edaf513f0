#pragma once

#include <string>

#include "kgraphlab/graph_io.hpp"

namespace fixtures {

// One vertex, one edge per color; the unique 2-graph on this skeleton.
inline const char* kFixA = R"(k 2
vertex v
edge e 1 v v
edge f 2 v v
square e f = f e
)";

// One vertex, one loop, k = 1.
inline const char* kFixB = R"(k 1
vertex v
edge a 1 v v
)";

// Two vertices joined by a single edge g with r(g) = u, s(g) = v.
inline const char* kFixC = R"(k 1
vertex u
vertex v
edge g 1 u v
)";

// One vertex, two edges per color, with a non-product square bijection.
inline const char* kFixD = R"(k 2
vertex v
edge e1 1 v v
edge e2 1 v v
edge f1 2 v v
edge f2 2 v v
square e1 f1 = f2 e2
square e1 f2 = f1 e1
square e2 f1 = f1 e2
square e2 f2 = f2 e1
)";

// One vertex, one edge per color, k = 3 (product squares; cube-consistent).
inline const char* kFixE = R"(k 3
vertex v
edge x 1 v v
edge y 2 v v
edge z 3 v v
square x y = y x
square x z = z x
square y z = z y
)";

// k = 3 with non-commuting pairwise bijections: the hexagon fails.
inline const char* kFixCubeBad = R"(k 3
vertex v
edge a1 1 v v
edge a2 1 v v
edge a3 1 v v
edge b 2 v v
edge c 3 v v
square a1 b = b a2
square a2 b = b a3
square a3 b = b a1
square a1 c = c a2
square a2 c = c a1
square a3 c = c a3
square b c = c b
)";

inline kgraphlab::KGraph fix_a() { return kgraphlab::parse_graph_text(kFixA); }
inline kgraphlab::KGraph fix_b() { return kgraphlab::parse_graph_text(kFixB); }
inline kgraphlab::KGraph fix_c() { return kgraphlab::parse_graph_text(kFixC); }
inline kgraphlab::KGraph fix_d() { return kgraphlab::parse_graph_text(kFixD); }
inline kgraphlab::KGraph fix_e() { return kgraphlab::parse_graph_text(kFixE); }

}  // namespace fixtures
