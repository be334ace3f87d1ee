#pragma once

// Graph generators: exhaustive isomorph-free enumeration for small orders
// and seeded random families.

#include <random>
#include <vector>

#include "rminor/graph.hpp"

namespace rminor {

/// One representative per isomorphism class of simple graphs on n vertices
/// (ids 0..n-1), by canonical-free edge addition with isomorphism buckets.
std::vector<LabeledMultigraph> all_simple_graphs(int n);

/// The 3-connected members of all_simple_graphs(n).
std::vector<LabeledMultigraph> three_connected_graphs(int n);

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform(Rng& rng, int lo, int hi);

/// A simple 3-connected non-planar graph on at most max_vertices vertices: a
/// random subdivision of K5 or K33 with random edges added until it is
/// 3-connected, plus a few more.
LabeledMultigraph random_nonplanar_three_connected(Rng& rng, int max_vertices = 12);

/// A random connected host with at most max_edges edges. Half of the hosts
/// are grown from a catalog pattern by subdivisions, splits and extra edges.
LabeledMultigraph random_host(Rng& rng, int max_edges = 12);

}  // namespace rminor
