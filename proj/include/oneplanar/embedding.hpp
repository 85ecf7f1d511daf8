#ifndef ONEPLANAR_EMBEDDING_HPP
#define ONEPLANAR_EMBEDDING_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "oneplanar/graph.hpp"

namespace oneplanar {

// Graph with stable edge ids and parallel edges allowed (kite copies).
struct Multigraph {
    int n = 0;
    std::vector<Edge> edges;  // edge id = index; endpoints stored (min, max)

    static Multigraph from_graph(const Graph& g);
};

// Darts: edge e has darts 2e (first -> second) and 2e+1 (second -> first).
inline int dart_twin(int d) { return d ^ 1; }
int dart_tail(const Multigraph& mg, int d);
int dart_head(const Multigraph& mg, int d);

// Cyclic order of outgoing darts per vertex.  Orbits of
// d -> rotation-successor of twin(d) at head(d) are the faces.
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(std::vector<std::vector<int>> rot) : rot_(std::move(rot)) {}

    const std::vector<std::vector<int>>& rotations() const { return rot_; }
    std::vector<std::vector<int>>& rotations() { return rot_; }

    // Faces as dart cycles, ordered by smallest dart.
    std::vector<std::vector<int>> trace_faces(const Multigraph& mg) const;

    // v - e + f == 2 for every connected component.
    bool euler_ok(const Multigraph& mg) const;

private:
    std::vector<std::vector<int>> rot_;
};

// Planarity with an embedding witness; empty iff nonplanar.
std::optional<RotationSystem> planarity_test(const Multigraph& mg);

// Planarity verdict only, without constructing an embedding.
bool is_planar(const Multigraph& mg);

// Edge ids (of mg) forming a K5/K33 subdivision; empty when planar.
// Parallel copies are represented by their lowest-id edge.
std::vector<int> planarity_obstruction(const Multigraph& mg);

// --- Witnesses and constraints --------------------------------------------

// Matching on the host graph's edges: the pairs that cross.
struct CrossingWitness {
    std::vector<std::pair<Edge, Edge>> pairs;  // normalized, sorted

    void normalize();
    bool empty() const { return pairs.empty(); }
    size_t size() const { return pairs.size(); }
    bool operator==(const CrossingWitness&) const = default;
};

// Returns empty if w is structurally valid for g: a matching of
// vertex-disjoint existing edge pairs.  Otherwise a diagnostic.
std::optional<std::string> witness_structural_error(const Graph& g,
                                                    const CrossingWitness& w);

struct ConstraintSet {
    static constexpr int kUncrossableColor = 0;

    std::set<Edge> uncrossable;                       // the F of the constrained problem
    std::set<std::pair<Edge, Edge>> forbidden_pairs;  // normalized pairs
    std::optional<std::map<Edge, int>> colors;        // total when present; 0 = uncrossable
    std::vector<std::vector<Edge>> mandatory_uncrossed_paths;

    bool empty() const {
        return uncrossable.empty() && forbidden_pairs.empty() && !colors &&
               mandatory_uncrossed_paths.empty();
    }
    // Folds mandatory paths into `uncrossable`.
    ConstraintSet compiled() const;
    bool edge_crossable(const Edge& e) const;         // on a compiled set
    bool pair_allowed(const Edge& e, const Edge& f) const;
    void validate_for(const Graph& g) const;          // throws on dangling references
};

struct EdgeOrigin {
    enum Kind { original, spoke, kite } kind;
    Edge source;     // original edge (spoke: the crossed edge it halves)
    int pair_index;  // -1 for uncrossed originals
};

struct Planarization {
    Multigraph graph;  // host vertices first, one dummy per crossing pair after
    std::vector<EdgeOrigin> origin;  // by edge id
};

// Removes each crossing pair, adds a degree-4 dummy with four spokes, and the
// kite cycle on the pair's endpoints (kite edges may parallel existing ones).
// Throws on a structurally invalid witness; `validate` may be dropped by
// callers that construct witnesses valid by design.
Planarization planarize_with_kites(const Graph& g, const CrossingWitness& w,
                                   bool validate = true);

// True iff w is structurally valid, respects cs, and the kite-augmented
// planarization is planar.  Never throws.
bool verify_witness(const Graph& g, const CrossingWitness& w, const ConstraintSet& cs);

// --- Embedding surgery ------------------------------------------------------

struct EmbeddedMultigraph {
    Multigraph graph;
    RotationSystem rotation;
};

// Inserts a new degree-2 vertex inside face `face_index` (index into
// trace_faces order) with edges to a and b, both of which must lie on that
// face.  Face count grows by exactly one.
EmbeddedMultigraph insert_two_path(const EmbeddedMultigraph& em, int a, int b,
                                   int face_index);

// Inserts a pendant vertex attached to `a` into some face incident to a.
EmbeddedMultigraph insert_leaf(const EmbeddedMultigraph& em, int a);

// --- Gluing -----------------------------------------------------------------

struct MergePiece {
    Graph graph;
    CrossingWitness witness;
    Edge shared;  // in the piece's coordinates; must be uncrossed
};

struct MergeResult {
    Graph merged;
    CrossingWitness witness;
    std::vector<std::vector<int>> piece_to_merged;
};

// Glues the pieces at their shared vertex pair (2-clique-sum).  The shared
// edge is kept once, or deleted when keep_shared_edge is false.  The merged
// witness is re-verified; throws if a piece crosses its shared edge.
MergeResult merge_at_shared_edge(const std::vector<MergePiece>& pieces,
                                 bool keep_shared_edge);

}  // namespace oneplanar

#endif
