#ifndef ONEPLANAR_GRAPH_HPP
#define ONEPLANAR_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace oneplanar {

// Undirected edge, stored with u < v.
using Edge = std::pair<int, int>;

inline Edge mk_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph with dense vertex ids in [0, n).
// Immutable after construction; equality is (n, edge set).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, unique, each (u < v)
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// Subgraph induced by `vertices` (need not be sorted; duplicates rejected).
// Returns the subgraph plus the map new id -> old id (sorted order of `vertices`).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& vertices);

// --- Lift plan -------------------------------------------------------------
//
// Every reduction step maps a host graph onto a smaller one and appends a
// record.  Vertex ids in a record refer to the host graph at the time that
// record was appended; `old_n` plus `removed_vertices` determine the dense
// id compaction for the step.

struct LeafRemoval {
    int vertex;
    int neighbor;
};

struct GroupTruncation {
    int group_id;
    Edge hubs;
    int removed_count;
    int anchor;  // kept group member whose two edges stay uncrossed
};

struct PathTruncation {
    int path_id;
    Edge endpoints;
    std::vector<int> removed_interior;  // in path order, adjacent to bridge.first
    int kept_interior;
    Edge bridge;  // edge of the reduced graph standing for the removed stretch
};

struct UncrossableSplit {
    Edge shared;
    std::vector<int> subinstance_ids;
    bool added_edge;
};

struct BlockSplit {
    std::vector<int> block_ids;
};

struct CycleDrop {
    std::vector<int> cycle_vertices;
};

using ReductionAction =
    std::variant<LeafRemoval, GroupTruncation, PathTruncation, UncrossableSplit,
                 BlockSplit, CycleDrop>;

struct ReductionRecord {
    ReductionAction action;
    int old_n = 0;
    std::vector<int> removed_vertices;  // host-coordinate ids, sorted
    std::vector<Edge> removed_edges;    // host-coordinate endpoints
    std::vector<Edge> added_edges;      // host-coordinate endpoints (both survive)
};

struct LiftPlan {
    std::vector<ReductionRecord> records;
};

// Deletes `removed` (sorted) from g and adds `added` edges (host coordinates,
// both endpoints surviving), appending one record; every id list in `tracked`
// follows the compaction in place.
Graph apply_reduction(const Graph& g, ReductionAction action,
                      const std::vector<int>& removed, const std::vector<Edge>& added,
                      LiftPlan& plan, const std::vector<std::vector<int>*>& tracked);

// Dense compaction map for one record: old id -> new id, -1 for removed.
std::vector<int> record_old_to_new(const ReductionRecord& rec);

// Applies the inverse of `rec` to a reduced graph, restoring the host graph
// of the step.
Graph replay_record(const ReductionRecord& rec, const Graph& reduced);

// Replays all records in reverse, reconstructing the pre-plan graph.
Graph replay_plan(const LiftPlan& plan, const Graph& kernel);

// --- Structural operations -------------------------------------------------

// Iteratively removes degree <= 1 vertices (queue order, ascending ids).
// The result has min degree >= 2 or is empty.
std::pair<Graph, LiftPlan> two_core(const Graph& g);

struct Block {
    Graph graph;
    std::vector<int> to_host;  // block id -> host id
};

// Biconnected components; blocks partition the edge set.  Isolated vertices
// belong to no block.
std::vector<Block> blocks(const Graph& g);

// m - n + c.
int cyclomatic_number(const Graph& g);

struct DegreeTwoPath {
    Edge endpoints;            // both of degree > 2; may coincide (closed path)
    std::vector<int> interior; // degree-2 vertices in path order; may be empty
};

struct PathDecomposition {
    std::vector<DegreeTwoPath> paths;
    std::vector<std::vector<int>> pure_cycles;  // components with all degrees 2
};

// Requires min degree >= 2 (throws otherwise).  Every edge lies in exactly
// one path or one pure cycle.
PathDecomposition maximal_degree_two_paths(const Graph& g);

// Known characterization of 1-planar K_{a,b}; arguments normalized so a <= b.
bool complete_bipartite_one_planar(int a, int b);

int connected_component_count(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace oneplanar

#endif
