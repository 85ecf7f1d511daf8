#ifndef ONEPLANAR_SOLVER_HPP
#define ONEPLANAR_SOLVER_HPP

#include <cstdint>
#include <string>

#include "oneplanar/embedding.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

enum class NotReason { edge_density, exhausted_search, bipartite_table, kernel_rejection };

std::string to_string(NotReason r);

struct SolveStats {
    int64_t nodes = 0;
    int64_t prunes = 0;

    SolveStats& operator+=(const SolveStats& o) {
        nodes += o.nodes;
        prunes += o.prunes;
        return *this;
    }
};

struct SolveOutcome {
    enum class Kind { one_planar, not_one_planar, budget_exceeded };
    Kind kind;
    CrossingWitness witness;   // one_planar only
    NotReason reason = NotReason::exhausted_search;
    std::string detail;        // kernel rejection rule, budget notes
    SolveStats stats;

    static SolveOutcome planar_with(CrossingWitness w, SolveStats s = {});
    static SolveOutcome rejected(NotReason r, std::string detail = "", SolveStats s = {});
    static SolveOutcome out_of_budget(SolveStats s, std::string detail = "");
    bool one_planar() const { return kind == Kind::one_planar; }
};

// Vertex-disjoint edge pairs not excluded by cs; lexicographic order.
std::vector<std::pair<Edge, Edge>> candidate_pairs(const Graph& g, const ConstraintSet& cs);

// Complete decision over crossing matchings: per-block decomposition, the
// 4n-8 density reject, and branching restricted to edges of a nonplanarity
// obstruction of the current planarization.
SolveOutcome decide(const Graph& g, const ConstraintSet& cs, int64_t budget);

// Brute force: enumerates matchings over candidate_pairs in size order and
// verifies each; the only pruning is the sound observation that edges outside
// every remaining candidate pair must stay uncrossed.  The returned witness
// has minimum cardinality.  Intended for n <= 9, m <= 4n-8.
SolveOutcome exhaustive_oracle(const Graph& g, const ConstraintSet& cs);

}  // namespace oneplanar

#endif
