#ifndef ONEPLANAR_RUN_HPP
#define ONEPLANAR_RUN_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "oneplanar/embedding.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/solver.hpp"

namespace oneplanar {

enum class Strategy { auto_pick, exact, vc, treedepth, cyclomatic, cograph };
enum class OutputFormat { text, record };

Strategy parse_strategy(const std::string& s);      // throws on unknown names
std::string to_string(Strategy s);

struct RunConfig {
    Strategy strategy = Strategy::auto_pick;
    int64_t budget = 50'000'000;
    int c1 = 20;
    bool paranoid = false;      // disable the tree-depth counting rejection
    uint32_t seed = 0;
    int workers = 1;            // accepted; the solver runs sequentially
    OutputFormat output = OutputFormat::text;
    bool want_witness = false;
    bool timing = false;        // when false, millis is reported as 0
    // Auto-mode parameter caps; past them auto falls back to exact.
    int max_k_vc = 10;
    int max_d = 6;
    int max_k_cyclo = 6;
};

struct Report {
    enum class Verdict { one_planar, not_one_planar, unknown };
    Verdict verdict = Verdict::unknown;
    Strategy strategy = Strategy::exact;   // the one actually executed
    std::string reason;                    // not-one-planar only
    std::string detail;
    std::optional<int> k_vc, d, k_cyclo;   // parameters found during selection
    std::optional<int> kernel_n, kernel_m;
    SolveStats stats;
    std::optional<size_t> crossings;       // one-planar only
    std::optional<CrossingWitness> witness;  // retained only when requested
    int64_t millis = 0;

    int exit_code() const;  // 0 decided, 2 budget exceeded
};

// Executes the configured strategy (auto mode measures the parameters under
// the caps and picks the smallest predicted kernel).  Non-empty constraints
// confine the run to the exact strategy, since the kernels reduce the
// unconstrained problem only.
Report run(const RunConfig& config, const Graph& g, const ConstraintSet& cs);

std::string emit_report(const Report& r, OutputFormat format);

}  // namespace oneplanar

#endif
