#pragma once

#include <random>

#include "core/bouquet.hpp"
#include "core/ribbon_graph.hpp"
#include "core/signed_graph.hpp"

namespace petrial {

// Uniform random matching of 2m circle positions, labels assigned in order of
// first appearance, each loop twisted with probability 1/2.
Bouquet random_bouquet(std::mt19937_64& rng, int loops);

// Random connected rotation system: m edges with uniform endpoints, resampled
// until connected, random rotation order at every vertex, random framings.
RibbonGraph random_connected_ribbon(std::mt19937_64& rng, int vertices, int edges);

// Erdos-Renyi p = 1/2 edges, signs uniform.
SignedGraph random_signed_graph(std::mt19937_64& rng, int vertices);

} // namespace petrial
