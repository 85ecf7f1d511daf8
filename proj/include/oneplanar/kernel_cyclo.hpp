#ifndef ONEPLANAR_KERNEL_CYCLO_HPP
#define ONEPLANAR_KERNEL_CYCLO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "oneplanar/graph.hpp"
#include "oneplanar/solver.hpp"

namespace oneplanar {

// Symbol sequence without two consecutive equal symbols.
struct Word {
    std::vector<int> symbols;
    int alphabet = 0;
};

void validate_word(const Word& w);

struct ReducibleSubword {
    int start;  // inclusive
    int end;    // exclusive
    int k;      // distinct symbols in the window, each appearing >= k times
};

// Shortest (then leftmost) window with k > 1 distinct symbols each occurring
// at least k times, if any.
std::optional<ReducibleSubword> find_reducible_subword(const Word& w);

// The longest irreducible word on n symbols: w_2 = aba and
// w_k = (w_{k-1} s_k)^{k-1} w_{k-1}; length exactly 2*n! - 1.
Word extremal_word(int n);

struct CycloKernel {
    Graph kernel;
    LiftPlan plan;
    int dropped_cycles = 0;
    int truncated_paths = 0;
};

// 2-core, then per block: with p maximal degree-two paths, each path interior
// shrinks to at most 2*p!+1 vertices (factorial saturating); components that
// are bare cycles are dropped as planar.
CycloKernel cyclo_kernelize(const Graph& g);

// Restores truncated interiors by subdividing the stand-in edge (a crossing
// on it moves to the first segment), re-adds dropped cycles and pruned
// leaves.  Throws if w does not verify on the kernel.
CrossingWitness cyclo_lift(const Graph& kernel, const LiftPlan& plan,
                           const CrossingWitness& w);

struct CycloReport {
    int block_count = 0;
    int max_block_cyclomatic = 0;
    int kernel_n = 0;
    int kernel_m = 0;
    SolveStats stats;
};

SolveOutcome pipeline_cyclo(const Graph& g, int64_t budget,
                            CycloReport* report = nullptr);

}  // namespace oneplanar

#endif
