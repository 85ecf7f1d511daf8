#include "oneplanar/kernel_vc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oneplanar {

namespace {

// Decision version: a cover of size <= k of the edges still alive, given
// `chosen` already in the cover.  Degree-one and high-degree forcing keep
// the branching on max-degree vertices shallow.
bool vc_search(const Graph& g, std::set<int>& chosen, int k) {
    std::vector<int> deg(g.vertex_count(), 0);
    bool any_edge = false;
    for (const Edge& e : g.edges()) {
        if (chosen.count(e.first) || chosen.count(e.second)) continue;
        ++deg[e.first];
        ++deg[e.second];
        any_edge = true;
    }
    if (!any_edge) return true;
    if (k <= 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] > k) {
            chosen.insert(v);
            if (vc_search(g, chosen, k - 1)) return true;
            chosen.erase(v);
            return false;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] != 1) continue;
        for (int u : g.neighbors(v)) {
            if (chosen.count(u)) continue;
            chosen.insert(u);
            bool ok = vc_search(g, chosen, k - 1);
            if (!ok) chosen.erase(u);
            return ok;
        }
    }
    int best = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (deg[v] > deg[best]) best = v;
    chosen.insert(best);
    if (vc_search(g, chosen, k - 1)) return true;
    chosen.erase(best);
    std::vector<int> taken;
    for (int u : g.neighbors(best)) {
        if (chosen.count(u) || !deg[u]) continue;
        chosen.insert(u);
        taken.push_back(u);
    }
    if (static_cast<int>(taken.size()) <= k &&
        vc_search(g, chosen, k - static_cast<int>(taken.size())))
        return true;
    for (int u : taken) chosen.erase(u);
    return false;
}

int maximal_matching_size(const Graph& g) {
    std::set<int> used;
    int size = 0;
    for (const Edge& e : g.edges()) {
        if (used.count(e.first) || used.count(e.second)) continue;
        used.insert(e.first);
        used.insert(e.second);
        ++size;
    }
    return size;
}

Graph apply_removal(const Graph& g, ReductionAction action,
                    const std::vector<int>& remove, LiftPlan& plan,
                    std::vector<std::vector<int>*> tracked) {
    return apply_reduction(g, std::move(action), remove, {}, plan, tracked);
}

// Iteratively removes degree-one vertices satisfying `removable`, one record
// each; `tracked` id lists follow the compaction.
Graph prune_leaves(Graph g, LiftPlan& plan, std::vector<std::vector<int>*> tracked,
                   const std::function<bool(int)>& removable) {
    for (bool again = true; again;) {
        again = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 1 || !removable(v)) continue;
            int nb = g.neighbors(v)[0];
            g = apply_removal(g, LeafRemoval{v, nb}, {v}, plan, tracked);
            again = true;
            break;
        }
    }
    return g;
}

CrossingWitness map_witness_back(const ReductionRecord& rec, const CrossingWitness& w) {
    std::vector<int> to_new = record_old_to_new(rec);
    std::vector<int> to_old(rec.old_n - static_cast<int>(rec.removed_vertices.size()), -1);
    for (int u = 0; u < rec.old_n; ++u)
        if (to_new[u] >= 0) to_old[to_new[u]] = u;
    CrossingWitness out;
    for (const auto& [e, f] : w.pairs)
        out.pairs.push_back({mk_edge(to_old[e.first], to_old[e.second]),
                             mk_edge(to_old[f.first], to_old[f.second])});
    out.normalize();
    return out;
}

int face_with_both(const EmbeddedMultigraph& em, int a, int b) {
    auto faces = em.rotation.trace_faces(em.graph);
    for (size_t i = 0; i < faces.size(); ++i) {
        bool has_a = false, has_b = false;
        for (int dart : faces[i]) {
            int tail = dart_tail(em.graph, dart);
            has_a |= tail == a;
            has_b |= tail == b;
        }
        if (has_a && has_b) return static_cast<int>(i);
    }
    throw std::logic_error("lift: no face contains both hub vertices");
}

}  // namespace

std::optional<std::vector<int>> vertex_cover(const Graph& g, int max_k) {
    int lower = 0;
    {
        // 2-approximation: a maximal matching certifies optimum >= its size.
        int m = maximal_matching_size(g);
        lower = m;
        if (m > max_k) return std::nullopt;
    }
    for (int k = lower; k <= max_k; ++k) {
        std::set<int> chosen;
        if (vc_search(g, chosen, k)) {
            std::vector<int> out(chosen.begin(), chosen.end());
            for (const Edge& e : g.edges())
                if (!chosen.count(e.first) && !chosen.count(e.second))
                    throw std::logic_error("vertex_cover: result is not a cover");
            return out;
        }
    }
    return std::nullopt;
}

CoverKernel vc_kernelize(const Graph& g, const std::vector<int>& cover) {
    std::set<int> in_cover(cover.begin(), cover.end());
    for (const Edge& e : g.edges())
        if (!in_cover.count(e.first) && !in_cover.count(e.second))
            throw std::invalid_argument("vc_kernelize: cover does not cover the graph");
    const int k = static_cast<int>(cover.size());

    CoverKernel ck;
    std::vector<int> cov = cover;
    std::sort(cov.begin(), cov.end());

    // (1) degree-one vertices outside the cover
    std::set<int>* cover_set = &in_cover;
    Graph cur = prune_leaves(
        g, ck.plan, {&cov},
        [&](int v) { return !cover_set->count(v); });
    in_cover = std::set<int>(cov.begin(), cov.end());

    auto reject = [&](const std::string& rule) {
        ck.kernel = cur;
        ck.cover = cov;
        ck.early_verdict =
            SolveOutcome::rejected(NotReason::kernel_rejection, rule);
        return ck;
    };

    // (2) too many cover pairs tied by an outside common neighbor: smoothing
    // one two-edge path per pair would give k vertices, > 5k edges, and at
    // most two crossings per edge, beyond what such drawings allow.
    std::set<Edge> tied_pairs;
    for (int v = 0; v < cur.vertex_count(); ++v) {
        if (in_cover.count(v)) continue;
        const auto& nb = cur.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                tied_pairs.insert(mk_edge(nb[i], nb[j]));
    }
    if (static_cast<int>(tied_pairs.size()) > 5 * k)
        return reject("more than 5k cover pairs joined through outside vertices");

    // (3) three cover vertices with seven common neighbors form a K_{3,7}
    for (size_t a = 0; a < cov.size(); ++a)
        for (size_t b = a + 1; b < cov.size(); ++b)
            for (size_t c = b + 1; c < cov.size(); ++c) {
                int common = 0;
                for (int v = 0; v < cur.vertex_count(); ++v) {
                    if (v == cov[a] || v == cov[b] || v == cov[c]) continue;
                    if (cur.has_edge(v, cov[a]) && cur.has_edge(v, cov[b]) &&
                        cur.has_edge(v, cov[c]))
                        ++common;
                }
                if (common >= 7) return reject("K_{3,7}: cover triple with 7 common neighbors");
            }

    // (4) more than 6k outside degree->=3 vertices on one hub pair force a
    // repeated third neighbor, i.e. a K_{3,7} again
    std::map<Edge, int> high_by_pair;
    for (int v = 0; v < cur.vertex_count(); ++v) {
        if (in_cover.count(v) || cur.degree(v) < 3) continue;
        const auto& nb = cur.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                ++high_by_pair[mk_edge(nb[i], nb[j])];
    }
    for (const auto& [pair, cnt] : high_by_pair)
        if (cnt > 6 * k)
            return reject("hub pair with more than 6k high-degree common neighbors");

    // (5) K_{2,i} truncation
    std::map<Edge, std::vector<int>> group_members;
    for (int v = 0; v < cur.vertex_count(); ++v) {
        if (in_cover.count(v) || cur.degree(v) != 2) continue;
        const auto& nb = cur.neighbors(v);
        group_members[mk_edge(nb[0], nb[1])].push_back(v);
    }
    const int keep_cap = std::max(1, 2 * k - 3);
    int gid = 0;
    std::vector<CoverGroup> groups;
    std::vector<std::vector<int>> all_members;
    for (auto& [hubs, members] : group_members) {
        std::sort(members.begin(), members.end());
        CoverGroup grp;
        grp.group_id = gid++;
        grp.hubs = hubs;
        int keep = std::min<int>(members.size(), keep_cap);
        grp.kept.assign(members.begin(), members.begin() + keep);
        grp.removed_count = static_cast<int>(members.size()) - keep;
        grp.anchor = grp.kept.front();
        groups.push_back(grp);
        all_members.push_back(members);
    }
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        CoverGroup& grp = groups[gi];
        if (grp.removed_count == 0) continue;
        std::vector<int> removed(all_members[gi].begin() + grp.kept.size(),
                                 all_members[gi].end());
        std::vector<std::vector<int>*> tracked = {&cov};
        std::vector<std::vector<int>> slots;  // each group's (hub, hub, anchor)
        for (const CoverGroup& other : groups)
            slots.push_back({other.hubs.first, other.hubs.second, other.anchor});
        for (auto& s : slots) tracked.push_back(&s);
        for (CoverGroup& other : groups) tracked.push_back(&other.kept);
        for (size_t gj = gi + 1; gj < all_members.size(); ++gj)
            tracked.push_back(&all_members[gj]);
        cur = apply_removal(
            cur,
            GroupTruncation{grp.group_id, grp.hubs, grp.removed_count, grp.anchor},
            removed, ck.plan, tracked);
        for (size_t j = 0; j < groups.size(); ++j) {
            groups[j].hubs = mk_edge(slots[j][0], slots[j][1]);
            groups[j].anchor = slots[j][2];
        }
    }

    ck.kernel = cur;
    std::sort(cov.begin(), cov.end());
    ck.cover = cov;
    ck.groups = std::move(groups);
    return ck;
}

SolveOutcome vc_solve_kernel(const CoverKernel& ck, int64_t budget) {
    if (ck.early_verdict) return *ck.early_verdict;
    ConstraintSet cs;
    for (const CoverGroup& grp : ck.groups) {
        if (grp.removed_count == 0) continue;
        cs.mandatory_uncrossed_paths.push_back(
            {mk_edge(grp.anchor, grp.hubs.first), mk_edge(grp.anchor, grp.hubs.second)});
    }
    return decide(ck.kernel, cs, budget);
}

CrossingWitness vc_lift(const CoverKernel& ck, const CrossingWitness& w) {
    if (ck.early_verdict)
        throw std::invalid_argument("vc_lift: kernel carries an early verdict");
    std::set<Edge> crossed;
    for (const auto& [e, f] : w.pairs) {
        crossed.insert(e);
        crossed.insert(f);
    }
    for (const CoverGroup& grp : ck.groups) {
        if (grp.removed_count == 0) continue;
        if (crossed.count(mk_edge(grp.anchor, grp.hubs.first)) ||
            crossed.count(mk_edge(grp.anchor, grp.hubs.second)))
            throw std::invalid_argument("vc_lift: anchor edge is crossed");
    }
    if (!verify_witness(ck.kernel, w, ConstraintSet{}))
        throw std::invalid_argument("vc_lift: witness fails on the kernel");

    // Embedding-level realization: restored group members enter a face
    // holding both hubs (one exists beside the uncrossed anchor path),
    // leaves enter any face at their neighbor.
    auto rot = planarity_test(planarize_with_kites(ck.kernel, w).graph);
    EmbeddedMultigraph em{planarize_with_kites(ck.kernel, w).graph, *rot};
    std::vector<int> loc(ck.kernel.vertex_count());
    std::iota(loc.begin(), loc.end(), 0);

    CrossingWitness lifted = w;
    Graph cur = ck.kernel;
    for (auto it = ck.plan.records.rbegin(); it != ck.plan.records.rend(); ++it) {
        const ReductionRecord& rec = *it;
        lifted = map_witness_back(rec, lifted);
        Graph host = replay_record(rec, cur);
        std::vector<int> to_new = record_old_to_new(rec);
        std::vector<int> host_loc(rec.old_n, -1);
        for (int u = 0; u < rec.old_n; ++u)
            if (to_new[u] >= 0) host_loc[u] = loc[to_new[u]];
        if (const auto* leaf = std::get_if<LeafRemoval>(&rec.action)) {
            em = insert_leaf(em, host_loc[leaf->neighbor]);
            host_loc[leaf->vertex] = em.graph.n - 1;
        } else if (const auto* trunc = std::get_if<GroupTruncation>(&rec.action)) {
            for (int v : rec.removed_vertices) {
                int a = host_loc[trunc->hubs.first], b = host_loc[trunc->hubs.second];
                em = insert_two_path(em, a, b, face_with_both(em, a, b));
                host_loc[v] = em.graph.n - 1;
            }
        } else {
            throw std::logic_error("vc_lift: unexpected record kind");
        }
        loc = std::move(host_loc);
        cur = std::move(host);
    }
    if (!verify_witness(cur, lifted, ConstraintSet{}))
        throw std::logic_error("vc_lift: lifted witness fails verification");
    return lifted;
}

SolveOutcome pipeline_vc(const Graph& g, int64_t budget, int max_k, VcReport* report) {
    // degree-one vertices never matter; shed them before covering
    LiftPlan leaf_plan;
    Graph pruned = prune_leaves(g, leaf_plan, {}, [](int) { return true; });

    for (const auto& comp : connected_components(pruned)) {
        auto [sub, ignore] = induced_subgraph(pruned, comp);
        if (sub.vertex_count() >= 3 &&
            sub.edge_count() > 4 * sub.vertex_count() - 8)
            return SolveOutcome::rejected(NotReason::edge_density,
                                          "component beyond 4n-8 edges");
    }

    auto cover = vertex_cover(pruned, max_k);
    if (!cover)
        return SolveOutcome::out_of_budget(
            SolveStats{}, "no vertex cover within the parameter bound");

    CoverKernel ck = vc_kernelize(pruned, *cover);
    if (report) {
        report->k = static_cast<int>(cover->size());
        report->kernel_n = ck.kernel.vertex_count();
        report->kernel_m = ck.kernel.edge_count();
        report->group_count = static_cast<int>(ck.groups.size());
        report->truncated_groups = 0;
        for (const auto& grp : ck.groups)
            if (grp.removed_count) ++report->truncated_groups;
    }
    SolveOutcome out = vc_solve_kernel(ck, budget);
    if (report) report->stats = out.stats;
    if (!out.one_planar()) return out;

    CrossingWitness lifted = vc_lift(ck, out.witness);
    for (auto it = leaf_plan.records.rbegin(); it != leaf_plan.records.rend(); ++it)
        lifted = map_witness_back(*it, lifted);
    if (!verify_witness(g, lifted, ConstraintSet{}))
        throw std::logic_error("pipeline_vc: lifted witness fails verification");
    SolveOutcome final_out = SolveOutcome::planar_with(std::move(lifted), out.stats);
    return final_out;
}

SolveOutcome split_graph_one_planar(const Graph& g, int64_t budget) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    // degree-sequence split test: with d1 >= ... >= dn and m the largest index
    // with d_m >= m-1, the graph is split iff sum_{i<=m} d_i = m(m-1) + rest
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i) m = i + 1;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i)
        (i < m ? head : tail) += g.degree(order[i]);
    if (head != static_cast<long long>(m) * (m - 1) + tail)
        throw std::invalid_argument("split_graph_one_planar: graph is not split");

    std::vector<int> clique(order.begin(), order.begin() + m);
    if (m >= 7)
        return SolveOutcome::rejected(NotReason::kernel_rejection,
                                      "split graph with clique of size 7");
    // the clique may extend by one independent-side vertex adjacent to all of it
    for (int i = m; i < n; ++i) {
        bool all = true;
        for (int c : clique) all = all && g.has_edge(order[i], c);
        if (all && m + 1 >= 7)
            return SolveOutcome::rejected(NotReason::kernel_rejection,
                                          "split graph with clique of size 7");
    }
    std::sort(clique.begin(), clique.end());
    CoverKernel ck = vc_kernelize(g, clique);
    SolveOutcome out = vc_solve_kernel(ck, budget);
    if (!out.one_planar()) return out;
    return SolveOutcome::planar_with(vc_lift(ck, out.witness), out.stats);
}

}  // namespace oneplanar
