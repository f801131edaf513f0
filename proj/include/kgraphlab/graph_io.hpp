#pragma once

#include <string>

#include "kgraphlab/kgraph.hpp"

namespace kgraphlab {

// Graph description format, one directive per line ('#' starts a comment):
//   k <rank>
//   vertex <id>
//   edge <id> <color> <range> <source>
//   square <e_i> <f_j> = <f'_j> <e'_i>    (compose(e_i,f_j) = compose(f'_j,e'_i))
// Duplicate ids and malformed lines are reported with their line number.
KGraph parse_graph_text(const std::string& text);
KGraph load_graph_file(const std::string& path);

// Inverse of parse_graph_text, up to comments and blank lines.
std::string graph_to_text(const KGraph& g);

}  // namespace kgraphlab
