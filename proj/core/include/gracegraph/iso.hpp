#ifndef GRACEGRAPH_ISO_HPP
#define GRACEGRAPH_ISO_HPP

/*
 * Canonical forms for small graphs via individualization-refinement,
 * adequate for the enumeration caps used here (order <= ~16).
 */

#include <string>

#include "gracegraph/graph.hpp"

namespace gracegraph {

inline constexpr int kCanonicalMaxOrder = 24;

// Relabeling of g that is identical for isomorphic inputs.
Graph canonical_form(const Graph& g);

// graph6 string of the canonical form; equal iff isomorphic.
std::string certificate(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace gracegraph

#endif
