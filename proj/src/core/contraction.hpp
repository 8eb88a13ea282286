#pragma once

#include "core/bouquet.hpp"
#include "core/edge_set.hpp"
#include "core/ribbon_graph.hpp"

namespace petrial {

enum class TreePolicy {
    dfs_ascending,  // depth-first from v1, candidate edges in ascending label order
    dfs_descending, // depth-first from the last vertex, labels descending
};

// Deterministic spanning tree of a connected graph; throws ConnectivityError
// on disconnected input. The empty set for a single-vertex graph.
EdgeSet spanning_tree(const RibbonGraph& g, TreePolicy policy = TreePolicy::dfs_ascending);

bool is_spanning_tree(const RibbonGraph& g, EdgeSet tree);

// Contracts a non-loop edge e joining distinct vertices u, v: with u's
// rotation read as (e, A) and v's as (e, B) from e's two ends, the merged
// vertex gets (A, B) when e is untwisted and (A, B^-1) when twisted, where
// B^-1 reverses B and negates every sign. Remaining labels are preserved.
RibbonGraph contract_edge(const RibbonGraph& g, unsigned e);

// Contracts every tree edge in ascending label order; the result keeps the
// non-tree labels as its loop labels.
Bouquet aux_bouquet(const RibbonGraph& g, EdgeSet tree);

// Twists every edge in x (alias of partial_petrial; this is the G_X of the
// tree sweep).
RibbonGraph twist_edges(const RibbonGraph& g, EdgeSet x);

} // namespace petrial
