#include "oneplanar/run.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "oneplanar/io.hpp"
#include "oneplanar/kernel_cyclo.hpp"
#include "oneplanar/kernel_treedepth.hpp"
#include "oneplanar/kernel_vc.hpp"

namespace oneplanar {

Strategy parse_strategy(const std::string& s) {
    if (s == "auto") return Strategy::auto_pick;
    if (s == "exact") return Strategy::exact;
    if (s == "vc") return Strategy::vc;
    if (s == "treedepth") return Strategy::treedepth;
    if (s == "cyclomatic") return Strategy::cyclomatic;
    if (s == "cograph") return Strategy::cograph;
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::auto_pick: return "auto";
        case Strategy::exact: return "exact";
        case Strategy::vc: return "vc";
        case Strategy::treedepth: return "treedepth";
        case Strategy::cyclomatic: return "cyclomatic";
        case Strategy::cograph: return "cograph";
    }
    return "?";
}

int Report::exit_code() const { return verdict == Verdict::unknown ? 2 : 0; }

namespace {

int64_t saturating_factorial(int k) {
    int64_t f = 1;
    for (int i = 2; i <= k; ++i) {
        if (f > std::numeric_limits<int64_t>::max() / 4 / i)
            return std::numeric_limits<int64_t>::max() / 4;
        f *= i;
    }
    return f;
}

int max_block_cyclomatic(const Graph& g) {
    int best = 0;
    for (const Block& b : blocks(g))
        best = std::max(best, cyclomatic_number(b.graph));
    return best;
}

// Predicted kernel sizes steering the auto choice; smaller wins.
int64_t vc_predicted(int k) {
    return static_cast<int64_t>(k) + 5LL * k * std::max(1, 2 * k - 3);
}

int64_t cyclo_predicted(int k) {
    int p = std::max(1, 3 * k - 3);
    int64_t cap = 2 * saturating_factorial(p) + 1;
    return static_cast<int64_t>(p) *
           std::min(cap, std::numeric_limits<int64_t>::max() / (p + 1));
}

Strategy pick_auto(const Graph& g, const RunConfig& cfg, Report& rep) {
    Strategy best = Strategy::exact;
    int64_t best_size = std::numeric_limits<int64_t>::max();

    if (auto cover = vertex_cover(g, cfg.max_k_vc)) {
        rep.k_vc = static_cast<int>(cover->size());
        int64_t sz = vc_predicted(*rep.k_vc);
        if (sz < best_size) {
            best = Strategy::vc;
            best_size = sz;
        }
    }
    int kc = max_block_cyclomatic(g);
    if (kc <= cfg.max_k_cyclo) {
        rep.k_cyclo = kc;
        int64_t sz = cyclo_predicted(kc);
        if (sz < best_size) {
            best = Strategy::cyclomatic;
            best_size = sz;
        }
    }
    // The tree-depth prediction is measured: size of the largest instance
    // after the split.  The exact depth search is confined to small graphs.
    if (g.vertex_count() <= 30) {
        if (auto td = tree_depth(g, cfg.max_d)) {
            rep.d = td->first;
            EliminationForest nf = normalize_forest(g, td->second);
            TdKernel k = td_kernelize(g, nf, cfg.c1, !cfg.paranoid);
            int64_t sz = 0;
            for (const TdInstance& inst : k.instances)
                sz = std::max<int64_t>(sz, inst.graph.vertex_count());
            if (sz < best_size) {
                best = Strategy::treedepth;
                best_size = sz;
            }
        }
    }
    return best;
}

void fill_outcome(const SolveOutcome& out, const RunConfig& cfg, Report& rep) {
    rep.stats = out.stats;
    switch (out.kind) {
        case SolveOutcome::Kind::one_planar:
            rep.verdict = Report::Verdict::one_planar;
            rep.crossings = out.witness.pairs.size();
            if (cfg.want_witness) rep.witness = out.witness;
            break;
        case SolveOutcome::Kind::not_one_planar:
            rep.verdict = Report::Verdict::not_one_planar;
            rep.reason = to_string(out.reason);
            rep.detail = out.detail;
            break;
        case SolveOutcome::Kind::budget_exceeded:
            rep.verdict = Report::Verdict::unknown;
            rep.detail = out.detail;
            break;
    }
}

}  // namespace

Report run(const RunConfig& config, const Graph& g, const ConstraintSet& cs) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    Strategy s = config.strategy;
    if (s == Strategy::auto_pick)
        s = cs.empty() ? pick_auto(g, config, rep) : Strategy::exact;
    rep.strategy = s;

    switch (s) {
        case Strategy::auto_pick:
        case Strategy::exact:
            fill_outcome(decide(g, cs, config.budget), config, rep);
            break;
        case Strategy::vc: {
            if (!cs.empty())
                throw std::invalid_argument("constraints require the exact strategy");
            VcReport vr;
            fill_outcome(pipeline_vc(g, config.budget, config.max_k_vc, &vr),
                         config, rep);
            rep.k_vc = vr.k;
            rep.kernel_n = vr.kernel_n;
            rep.kernel_m = vr.kernel_m;
            break;
        }
        case Strategy::treedepth: {
            if (!cs.empty())
                throw std::invalid_argument("constraints require the exact strategy");
            TdReport tr;
            fill_outcome(pipeline_td(g, config.budget, std::max(config.max_d, 8),
                                     config.c1, !config.paranoid, &tr),
                         config, rep);
            rep.d = tr.max_depth;
            rep.kernel_n = tr.instance_count;
            break;
        }
        case Strategy::cyclomatic: {
            if (!cs.empty())
                throw std::invalid_argument("constraints require the exact strategy");
            CycloReport cr;
            fill_outcome(pipeline_cyclo(g, config.budget, &cr), config, rep);
            rep.k_cyclo = cr.max_block_cyclomatic;
            rep.kernel_n = cr.kernel_n;
            rep.kernel_m = cr.kernel_m;
            break;
        }
        case Strategy::cograph: {
            if (!cs.empty())
                throw std::invalid_argument("constraints require the exact strategy");
            TdReport tr;
            fill_outcome(pipeline_cograph(g, config.budget, &tr), config, rep);
            rep.d = tr.max_depth;
            rep.kernel_n = tr.instance_count;
            break;
        }
    }
    if (config.timing)
        rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

std::string emit_report(const Report& r, OutputFormat format) {
    const char* verdict = r.verdict == Report::Verdict::one_planar ? "one-planar"
                          : r.verdict == Report::Verdict::not_one_planar
                              ? "not-one-planar"
                              : "unknown";
    std::string reason =
        r.reason.empty() ? "" : r.detail.empty() ? r.reason : r.reason + "(" + r.detail + ")";

    if (format == OutputFormat::text) {
        std::string out;
        out += "verdict: " + std::string(verdict) + "\n";
        out += "strategy: " + to_string(r.strategy) + "\n";
        if (r.k_vc) out += "k_vc: " + std::to_string(*r.k_vc) + "\n";
        if (r.d) out += "tree_depth: " + std::to_string(*r.d) + "\n";
        if (r.k_cyclo) out += "k_cyclo: " + std::to_string(*r.k_cyclo) + "\n";
        if (r.kernel_n) out += "kernel_n: " + std::to_string(*r.kernel_n) + "\n";
        if (r.kernel_m) out += "kernel_m: " + std::to_string(*r.kernel_m) + "\n";
        out += "nodes: " + std::to_string(r.stats.nodes) + "\n";
        out += "prunes: " + std::to_string(r.stats.prunes) + "\n";
        if (r.crossings) out += "crossings: " + std::to_string(*r.crossings) + "\n";
        if (!reason.empty()) out += "reason: " + reason + "\n";
        if (r.verdict == Report::Verdict::unknown && !r.detail.empty())
            out += "note: " + r.detail + "\n";
        if (r.witness) out += emit_witness(*r.witness);
        out += "millis: " + std::to_string(r.millis) + "\n";
        return out;
    }

    nlohmann::ordered_json j;
    j["verdict"] = verdict;
    j["strategy"] = to_string(r.strategy);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    if (r.k_vc) params["k_vc"] = *r.k_vc;
    if (r.d) params["d"] = *r.d;
    if (r.k_cyclo) params["k_cyclo"] = *r.k_cyclo;
    j["parameters"] = params;
    nlohmann::ordered_json kernel = nlohmann::ordered_json::object();
    if (r.kernel_n) kernel["n"] = *r.kernel_n;
    if (r.kernel_m) kernel["m"] = *r.kernel_m;
    j["kernel"] = kernel;
    nlohmann::ordered_json search = nlohmann::ordered_json::object();
    search["nodes"] = r.stats.nodes;
    search["prunes"] = r.stats.prunes;
    if (!reason.empty()) search["reason"] = reason;
    j["search"] = search;
    if (r.witness) {
        nlohmann::ordered_json w = nlohmann::ordered_json::array();
        for (const auto& [e, f] : r.witness->pairs)
            w.push_back({e.first, e.second, f.first, f.second});
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["millis"] = r.millis;
    return j.dump() + "\n";
}

}  // namespace oneplanar
