#include "oneplanar/kernel_cyclo.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace oneplanar {

namespace {

// 2*p!+1, saturating well below overflow.
int64_t interior_cap(int p) {
    const int64_t kSat = std::numeric_limits<int64_t>::max() / 4;
    int64_t f = 1;
    for (int i = 2; i <= p; ++i) {
        if (f > kSat / i) return kSat;
        f *= i;
    }
    return 2 * f + 1;
}

CrossingWitness lift_one(const ReductionRecord& rec, const CrossingWitness& w) {
    std::vector<int> to_new = record_old_to_new(rec);
    std::vector<int> to_old(rec.old_n - static_cast<int>(rec.removed_vertices.size()), -1);
    for (int u = 0; u < rec.old_n; ++u)
        if (to_new[u] >= 0) to_old[to_new[u]] = u;

    std::optional<Edge> reduced_bridge;
    Edge first_segment{-1, -1};
    if (const auto* trunc = std::get_if<PathTruncation>(&rec.action)) {
        reduced_bridge = mk_edge(to_new[trunc->bridge.first], to_new[trunc->bridge.second]);
        first_segment = mk_edge(trunc->bridge.first, trunc->removed_interior.front());
    }
    auto back = [&](const Edge& e) {
        if (reduced_bridge && e == *reduced_bridge) return first_segment;
        return mk_edge(to_old[e.first], to_old[e.second]);
    };
    CrossingWitness out;
    for (const auto& [e, f] : w.pairs) out.pairs.push_back({back(e), back(f)});
    out.normalize();
    return out;
}

}  // namespace

void validate_word(const Word& w) {
    for (size_t i = 0; i < w.symbols.size(); ++i) {
        if (w.symbols[i] < 0 || w.symbols[i] >= w.alphabet)
            throw std::invalid_argument("word: symbol outside the alphabet");
        if (i && w.symbols[i] == w.symbols[i - 1])
            throw std::invalid_argument("word: consecutive equal symbols");
    }
}

std::optional<ReducibleSubword> find_reducible_subword(const Word& w) {
    validate_word(w);
    const int len = static_cast<int>(w.symbols.size());
    for (int window = 2; window <= len; ++window)
        for (int start = 0; start + window <= len; ++start) {
            std::vector<int> count(w.alphabet, 0);
            for (int i = start; i < start + window; ++i) ++count[w.symbols[i]];
            int k = 0;
            for (int c : count) k += c > 0;
            if (k <= 1) continue;
            bool ok = true;
            for (int c : count) ok = ok && (c == 0 || c >= k);
            if (ok) return ReducibleSubword{start, start + window, k};
        }
    return std::nullopt;
}

Word extremal_word(int n) {
    if (n < 2) throw std::invalid_argument("extremal_word: need at least 2 symbols");
    std::vector<int> w = {0, 1, 0};
    for (int k = 3; k <= n; ++k) {
        std::vector<int> next;
        for (int rep = 0; rep < k - 1; ++rep) {
            next.insert(next.end(), w.begin(), w.end());
            next.push_back(k - 1);
        }
        next.insert(next.end(), w.begin(), w.end());
        w = std::move(next);
    }
    Word out{std::move(w), n};
    validate_word(out);
    return out;
}

CycloKernel cyclo_kernelize(const Graph& g) {
    CycloKernel ck;
    Graph cur;
    std::tie(cur, ck.plan) = two_core(g);

    // bare cycles are planar on their own
    for (bool again = true; again;) {
        again = false;
        for (const auto& comp : connected_components(cur)) {
            bool cycle = comp.size() >= 3;
            for (int v : comp) cycle = cycle && cur.degree(v) == 2;
            if (!cycle) continue;
            cur = apply_reduction(cur, CycleDrop{comp}, comp, {}, ck.plan, {});
            ++ck.dropped_cycles;
            again = true;
            break;
        }
    }

    // collect truncation jobs (host coordinates), then apply one at a time
    struct Job {
        std::vector<int> endpoints;  // 2 entries; tracked through compaction
        std::vector<int> interior;   // path order
        int64_t cap;
    };
    std::vector<Job> jobs;
    for (const auto& comp : connected_components(cur)) {
        auto [sub, to_host] = induced_subgraph(cur, comp);
        if (sub.edge_count() == 0) continue;
        PathDecomposition pd = maximal_degree_two_paths(sub);
        const int p = static_cast<int>(pd.paths.size());
        const int64_t cap = interior_cap(p);
        for (const DegreeTwoPath& path : pd.paths) {
            if (static_cast<int64_t>(path.interior.size()) <= cap) continue;
            Job job;
            job.endpoints = {to_host[path.endpoints.first], to_host[path.endpoints.second]};
            for (int v : path.interior) job.interior.push_back(to_host[v]);
            job.cap = cap;
            jobs.push_back(std::move(job));
        }
    }
    for (size_t ji = 0; ji < jobs.size(); ++ji) {
        Job& job = jobs[ji];
        const int keep = static_cast<int>(job.cap);
        std::vector<int> removed(job.interior.begin() + keep, job.interior.end());
        Edge bridge = mk_edge(job.interior[keep - 1], job.endpoints[1]);
        PathTruncation action{static_cast<int>(ji),
                              mk_edge(job.endpoints[0], job.endpoints[1]),
                              removed, keep, bridge};
        std::vector<int> removed_sorted = removed;
        std::sort(removed_sorted.begin(), removed_sorted.end());
        std::vector<std::vector<int>*> tracked;
        for (size_t jj = ji + 1; jj < jobs.size(); ++jj) {
            tracked.push_back(&jobs[jj].endpoints);
            tracked.push_back(&jobs[jj].interior);
        }
        cur = apply_reduction(cur, std::move(action), removed_sorted, {bridge},
                              ck.plan, tracked);
        ++ck.truncated_paths;
    }
    ck.kernel = cur;
    return ck;
}

CrossingWitness cyclo_lift(const Graph& kernel, const LiftPlan& plan,
                           const CrossingWitness& w) {
    if (!verify_witness(kernel, w, ConstraintSet{}))
        throw std::invalid_argument("cyclo_lift: witness fails on the kernel");
    CrossingWitness lifted = w;
    Graph cur = kernel;
    for (auto it = plan.records.rbegin(); it != plan.records.rend(); ++it) {
        lifted = lift_one(*it, lifted);
        cur = replay_record(*it, cur);
    }
    if (!verify_witness(cur, lifted, ConstraintSet{}))
        throw std::logic_error("cyclo_lift: lifted witness fails verification");
    return lifted;
}

SolveOutcome pipeline_cyclo(const Graph& g, int64_t budget, CycloReport* report) {
    SolveStats stats;
    CrossingWitness combined;
    for (const Block& block : blocks(g)) {
        if (report) {
            ++report->block_count;
            report->max_block_cyclomatic =
                std::max(report->max_block_cyclomatic, cyclomatic_number(block.graph));
        }
        CycloKernel ck = cyclo_kernelize(block.graph);
        if (report) {
            report->kernel_n += ck.kernel.vertex_count();
            report->kernel_m += ck.kernel.edge_count();
        }
        SolveOutcome out = decide(ck.kernel, ConstraintSet{}, budget);
        stats += out.stats;
        if (!out.one_planar()) {
            out.stats = stats;
            if (report) report->stats = stats;
            return out;
        }
        CrossingWitness lifted = cyclo_lift(ck.kernel, ck.plan, out.witness);
        for (const auto& [e, f] : lifted.pairs)
            combined.pairs.push_back(
                {mk_edge(block.to_host[e.first], block.to_host[e.second]),
                 mk_edge(block.to_host[f.first], block.to_host[f.second])});
    }
    if (report) report->stats = stats;
    if (!verify_witness(g, combined, ConstraintSet{}))
        throw std::logic_error("pipeline_cyclo: combined witness fails verification");
    return SolveOutcome::planar_with(std::move(combined), stats);
}

}  // namespace oneplanar
