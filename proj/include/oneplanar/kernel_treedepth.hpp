#ifndef ONEPLANAR_KERNEL_TREEDEPTH_HPP
#define ONEPLANAR_KERNEL_TREEDEPTH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "oneplanar/graph.hpp"
#include "oneplanar/solver.hpp"

namespace oneplanar {

// Forest on the graph's vertices in which every graph edge joins an
// ancestor-descendant pair; depth counts vertices on a root-leaf path.
struct EliminationForest {
    std::vector<int> parent;  // -1 for roots
    int depth = 0;
};

// Throws invalid_argument if f is not a forest on g's vertices, some edge
// joins incomparable vertices, or the stated depth is wrong.
void validate_forest(const Graph& g, const EliminationForest& f);

// Exact tree-depth with a witnessing forest if it is <= max_d.  Memoized
// vertex-deletion recursion over twin-reduced candidates; a DFS tree supplies
// the initial upper bound.
std::optional<std::pair<int, EliminationForest>> tree_depth(const Graph& g,
                                                            int max_d);

// Enforces, without increasing depth: every child subtree induces a connected
// subgraph, and its root's parent has a graph edge into it (otherwise the
// subtree moves up a level).
EliminationForest normalize_forest(const Graph& g, const EliminationForest& f);

// Attachment sets of the child subtrees of one forest node: for the i-th
// child subtree T_i, S_i is the set of ancestors (including the node itself)
// with a graph edge into T_i.
struct ChildClassification {
    int node;
    std::vector<std::vector<int>> subtrees;     // vertex lists
    std::vector<std::vector<int>> attachments;  // S_i, sorted
};

std::vector<ChildClassification> classify_children(const Graph& g,
                                                   const EliminationForest& f);

// One split-off sub-instance: an |S| = 2 child subtree together with its two
// attachment vertices and an uncrossable edge on them.
struct TdInstance {
    Graph graph;
    std::vector<int> to_host;          // instance vertex -> host vertex
    std::vector<Edge> uncrossable;     // S-edges, instance coordinates
    std::vector<Edge> added_edges;     // the S-edges absent from the host
};

struct TdKernel {
    std::optional<std::string> rejection;  // large |S| >= 3 group
    std::vector<TdInstance> instances;     // last one is the remainder
    int splits = 0;                        // number of |S| = 2 groups split
};

// Child-group analysis on a connected graph with a normalized forest of
// depth d: a group with |S| >= 3 larger than c1*2^d rejects (sound only for
// a large enough c1; disable via apply_rejection for paranoid runs); each
// group with |S| = 2 larger than 2^d splits into per-subtree instances plus
// a remainder, all carrying the uncrossable S-edge.
TdKernel td_kernelize(const Graph& g, const EliminationForest& f, int c1,
                      bool apply_rejection = true);

struct TdReport {
    int block_count = 0;
    int max_depth = 0;
    int instance_count = 0;
    int rejections = 0;
    SolveStats stats;
};

// blocks -> tree_depth -> normalize -> td_kernelize -> solve the instances
// under their uncrossable constraints -> merge witnesses at the shared edge.
SolveOutcome pipeline_td(const Graph& g, int64_t budget, int max_d = 8,
                         int c1 = 20, bool apply_rejection = true,
                         TdReport* report = nullptr);

// Same pipeline but with a caller-supplied forest for the whole graph
// (restricted and renormalized per block).
SolveOutcome pipeline_td_with_forest(const Graph& g, const EliminationForest& f,
                                     int64_t budget, int c1 = 20,
                                     bool apply_rejection = true,
                                     TdReport* report = nullptr);

// --- Cographs ---------------------------------------------------------------

// Rooted cotree: leaves are graph vertices, internal nodes are labeled 0
// (disjoint union) or 1 (join); adjacent internal nodes alternate labels and
// every internal node has at least two children.
struct Cotree {
    struct Node {
        int label = -1;             // 0/1 for internal, -1 for leaf
        int vertex = -1;            // leaf only
        std::vector<int> children;  // internal only
    };
    std::vector<Node> nodes;
    int root = -1;
};

// Canonical cotree if g is a cograph (recursing on components of g and of
// its complement), otherwise nullopt.
std::optional<Cotree> cotree_build(const Graph& g);

// Whether the cograph contains K_a as a subgraph, and whether it contains
// K_{b,b}; both by folding over the cotree.
std::pair<bool, bool> cotree_exclusions(const Cotree& t, int a, int b);

// Elimination forest of depth <= 1 + (a-1)(b-1) for a cograph excluding K_a
// and K_{b,b}: at each join, the light children's leaves form a path above
// the recursively processed heaviest child.  Throws if an exclusion fails.
EliminationForest cograph_forest(const Graph& g, const Cotree& t, int a, int b);

// cotree_build; reject on K_7 or K_{5,5}; otherwise pipeline_td with the
// cograph_forest result.  Throws invalid_argument if g is not a cograph.
SolveOutcome pipeline_cograph(const Graph& g, int64_t budget,
                              TdReport* report = nullptr);

}  // namespace oneplanar

#endif
