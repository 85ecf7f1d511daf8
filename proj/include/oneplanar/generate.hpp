#ifndef ONEPLANAR_GENERATE_HPP
#define ONEPLANAR_GENERATE_HPP

#include <cstdint>
#include <random>

#include "oneplanar/graph.hpp"

namespace oneplanar {

// Deterministic bounded draw (uniform_int_distribution is implementation
// defined, so fixture reproducibility uses this instead).
inline int rand_below(std::mt19937& rng, int n) {
    return static_cast<int>(rng() % static_cast<unsigned>(n));
}

Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_cycle(int n);
Graph make_path(int n);

// Two hubs joined by `num_paths` internally disjoint paths of `path_length`
// edges each.
Graph make_theta(int num_paths, int path_length);

// Cubic Halin graph whose characteristic tree has k leaves: 2k-2 vertices,
// all of degree 3; k = 3 gives K4.
Graph make_cubic_halin(int k);

// Random graph with a planted vertex cover of size k.
Graph make_random_with_cover(int n, int k, uint32_t seed);

// Random graph built from a tree plus `k` extra edges, with random edge
// subdivisions until n vertices.
Graph make_random_with_cyclomatic(int n, int k, uint32_t seed);

struct Cotree;  // defined in kernel_treedepth.hpp

// Random cograph on n vertices (via a random cotree shape).
Graph make_cograph_from_random_cotree(int n, uint32_t seed);

// Erdos-Renyi-style G(n, m) with exactly m distinct edges.
Graph make_random_gnm(int n, int m, uint32_t seed);

// Random tree on n vertices.
Graph make_random_tree(int n, uint32_t seed);

}  // namespace oneplanar

#endif
