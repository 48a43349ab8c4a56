#ifndef GRACEGRAPH_GRAPH6_HPP
#define GRACEGRAPH_GRAPH6_HPP

/*
 * graph6 codec (the usual printable encoding: order, then the upper
 * triangle column by column, 6 bits per character, offset 63).
 */

#include <string>
#include <string_view>

#include "gracegraph/graph.hpp"

namespace gracegraph {

inline constexpr int kGraph6MaxOrder = 100000;

std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view s);

}  // namespace gracegraph

#endif
