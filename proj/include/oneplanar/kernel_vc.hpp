#ifndef ONEPLANAR_KERNEL_VC_HPP
#define ONEPLANAR_KERNEL_VC_HPP

#include <optional>
#include <vector>

#include "oneplanar/graph.hpp"
#include "oneplanar/solver.hpp"

namespace oneplanar {

// A class of degree-two vertices outside the cover sharing the same two
// cover neighbors.  Coordinates are those of the finished kernel.
struct CoverGroup {
    int group_id;
    Edge hubs;
    std::vector<int> kept;
    int removed_count;
    int anchor;  // kept member whose two edges stay uncrossed when truncated
};

struct CoverKernel {
    Graph kernel;
    std::vector<int> cover;  // kernel coordinates, sorted
    std::vector<CoverGroup> groups;
    LiftPlan plan;  // input graph of vc_kernelize -> kernel
    std::optional<SolveOutcome> early_verdict;
};

// Minimum vertex cover if its size is <= max_k, otherwise nullopt.  Greedy
// maximal matching bounds the search; vertices of degree above the remaining
// budget are forced into the cover.
std::optional<std::vector<int>> vertex_cover(const Graph& g, int max_k);

// Cover-parameterized kernelization: prune outside degree-one vertices,
// apply the three counting rejections, truncate each K_{2,i} group to
// min(i, max(1, 2k-3)) members with a designated anchor.
CoverKernel vc_kernelize(const Graph& g, const std::vector<int>& cover);

// decide() on the kernel, with each truncated group's anchor edges pinned
// uncrossed.  Complete: some 1-planar drawing keeps one group member's two
// edges crossing-free, and group members are interchangeable.
SolveOutcome vc_solve_kernel(const CoverKernel& ck, int64_t budget);

// Transports a verified kernel witness back to the pre-kernel graph; the
// restored vertices join crossing-free (realized beside the anchor path /
// in a face at the former neighbor).  Throws if an anchor edge is crossed.
CrossingWitness vc_lift(const CoverKernel& ck, const CrossingWitness& w);

struct VcReport {
    int k = 0;
    int kernel_n = 0;
    int kernel_m = 0;
    int group_count = 0;
    int truncated_groups = 0;
    SolveStats stats;
};

// Leaf pruning, density guard, cover computation, kernelization, kernel
// solve, and witness lifting, end to end.
SolveOutcome pipeline_vc(const Graph& g, int64_t budget, int max_k = 10,
                         VcReport* report = nullptr);

// Decision for split graphs: clique side of size >= 7 settles the negative;
// otherwise the clique side is a vertex cover of size <= 6.  Throws if g is
// not split (degree-sequence characterization).
SolveOutcome split_graph_one_planar(const Graph& g, int64_t budget);

}  // namespace oneplanar

#endif
