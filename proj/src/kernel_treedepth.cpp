#include "oneplanar/kernel_treedepth.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "oneplanar/embedding.hpp"

namespace oneplanar {

namespace {

std::vector<int> forest_depths(const EliminationForest& f) {
    int n = static_cast<int>(f.parent.size());
    std::vector<int> depth(n, 0);
    for (int v = 0; v < n; ++v) {
        if (depth[v]) continue;
        std::vector<int> chain;
        int u = v;
        while (u != -1 && !depth[u]) {
            chain.push_back(u);
            u = f.parent[u];
        }
        int base = u == -1 ? 0 : depth[u];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++base;
    }
    return depth;
}

bool is_ancestor(const EliminationForest& f, const std::vector<int>& depth,
                 int anc, int v) {
    while (depth[v] > depth[anc]) v = f.parent[v];
    return v == anc;
}

// Components of the subgraph induced by `verts` (host coordinates).
std::vector<std::vector<int>> sub_components(const Graph& g,
                                             const std::vector<int>& verts) {
    std::set<int> in(verts.begin(), verts.end());
    std::set<int> seen;
    std::vector<std::vector<int>> comps;
    for (int s : verts) {
        if (seen.count(s)) continue;
        std::vector<int> comp, stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (in.count(w) && seen.insert(w).second) stack.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// --- tree-depth search ------------------------------------------------------

struct TdSearch {
    const Graph& g;
    std::map<std::vector<int>, std::pair<int, int>> memo;  // verts -> (td, pick)

    // Exact tree-depth of the connected induced subgraph, or cap+1 if it
    // exceeds cap (such answers are not memoized).
    int rec(const std::vector<int>& verts, int cap) {
        if (verts.size() == 1) return 1;
        if (cap <= 1) return cap + 1;  // >= 2 vertices of a connected subgraph
        auto it = memo.find(verts);
        if (it != memo.end()) return it->second.first;

        // One candidate per twin class: removing either of two twins leaves
        // isomorphic subproblems. Non-adjacent twins share open neighborhoods,
        // adjacent twins share closed ones; keeping one representative of each
        // kind covers every class.
        std::set<int> in(verts.begin(), verts.end());
        std::map<std::vector<int>, int> open_rep, closed_rep;
        for (int v : verts) {
            std::vector<int> open;
            for (int w : g.neighbors(v))
                if (in.count(w)) open.push_back(w);
            std::sort(open.begin(), open.end());
            std::vector<int> closed = open;
            closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
            open_rep.emplace(std::move(open), v);
            closed_rep.emplace(std::move(closed), v);
        }
        std::set<int> cand_set;
        for (const auto& [k, v] : open_rep) cand_set.insert(v);
        for (const auto& [k, v] : closed_rep) cand_set.insert(v);
        std::vector<int> cands(cand_set.begin(), cand_set.end());

        int best = cap + 1, pick = -1;
        for (int v : cands) {
            std::vector<int> rest;
            for (int u : verts)
                if (u != v) rest.push_back(u);
            int worst = 0;
            for (const auto& comp : sub_components(g, rest)) {
                worst = std::max(worst, rec(comp, best - 2));
                if (1 + worst >= best) break;
            }
            if (1 + worst < best) {
                best = 1 + worst;
                pick = v;
            }
        }
        if (best <= cap) memo[verts] = {best, pick};
        return best;
    }

    void build(const std::vector<int>& verts, int parent,
               EliminationForest& f) {
        if (verts.size() == 1) {
            f.parent[verts[0]] = parent;
            return;
        }
        int v = memo.at(verts).second;
        f.parent[v] = parent;
        std::vector<int> rest;
        for (int u : verts)
            if (u != v) rest.push_back(u);
        for (const auto& comp : sub_components(g, rest)) build(comp, v, f);
    }
};

// --- forest utilities -------------------------------------------------------

std::vector<std::vector<int>> forest_children(const EliminationForest& f) {
    std::vector<std::vector<int>> ch(f.parent.size());
    for (size_t v = 0; v < f.parent.size(); ++v)
        if (f.parent[v] != -1) ch[f.parent[v]].push_back(static_cast<int>(v));
    return ch;
}

std::vector<int> subtree_of(const std::vector<std::vector<int>>& ch, int root) {
    std::vector<int> out, stack{root};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (int c : ch[u]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int forest_depth_value(const EliminationForest& f) {
    std::vector<int> d = forest_depths(f);
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

// Restriction of a forest to a vertex subset: each kept vertex's parent is
// its nearest kept proper ancestor.
EliminationForest restrict_forest(const EliminationForest& f,
                                  const std::vector<int>& verts,
                                  const std::vector<int>& to_local) {
    EliminationForest out;
    out.parent.assign(verts.size(), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        int u = f.parent[verts[i]];
        while (u != -1 && to_local[u] == -1) u = f.parent[u];
        out.parent[i] = u == -1 ? -1 : to_local[u];
    }
    out.depth = forest_depth_value(out);
    return out;
}

}  // namespace

void validate_forest(const Graph& g, const EliminationForest& f) {
    if (static_cast<int>(f.parent.size()) != g.vertex_count())
        throw std::invalid_argument("forest: wrong vertex count");
    std::vector<int> seen(f.parent.size(), 0);
    for (size_t v = 0; v < f.parent.size(); ++v) {
        int u = static_cast<int>(v), steps = 0;
        while (u != -1) {
            if (++steps > static_cast<int>(f.parent.size()))
                throw std::invalid_argument("forest: parent cycle");
            u = f.parent[u];
        }
    }
    std::vector<int> depth = forest_depths(f);
    for (const Edge& e : g.edges())
        if (!is_ancestor(f, depth, depth[e.first] < depth[e.second] ? e.first : e.second,
                         depth[e.first] < depth[e.second] ? e.second : e.first))
            throw std::invalid_argument("forest: edge joins incomparable vertices");
    if (f.depth != (depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end())))
        throw std::invalid_argument("forest: stated depth is wrong");
}

std::optional<std::pair<int, EliminationForest>> tree_depth(const Graph& g,
                                                            int max_d) {
    TdSearch search{g, {}};
    EliminationForest f;
    f.parent.assign(g.vertex_count(), -1);
    int overall = 0;
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    for (const auto& comp : sub_components(g, all)) {
        int td = search.rec(comp, max_d);
        if (td > max_d) return std::nullopt;
        overall = std::max(overall, td);
        search.build(comp, -1, f);
    }
    f.depth = overall;
    validate_forest(g, f);
    return std::make_pair(overall, f);
}

EliminationForest normalize_forest(const Graph& g, const EliminationForest& f) {
    validate_forest(g, f);
    EliminationForest cur = f;
    for (bool changed = true; changed;) {
        changed = false;
        auto ch = forest_children(cur);
        for (int v = 0; v < g.vertex_count() && !changed; ++v) {
            for (int c : ch[v]) {
                std::vector<int> sub = subtree_of(ch, c);
                auto comps = sub_components(g, sub);
                if (comps.size() > 1) {
                    // Disconnected child subtree: one child per component,
                    // ancestry compressed within each component.
                    for (const auto& comp : comps) {
                        std::set<int> in(comp.begin(), comp.end());
                        for (int u : comp) {
                            int p = cur.parent[u];
                            while (p != -1 && !in.count(p) &&
                                   std::binary_search(sub.begin(), sub.end(), p))
                                p = cur.parent[p];
                            cur.parent[u] = (p != -1 && in.count(p)) ? p : v;
                        }
                    }
                    changed = true;
                    break;
                }
                bool attached = false;
                for (int u : sub)
                    for (int w : g.neighbors(u)) attached = attached || w == v;
                if (!attached) {
                    cur.parent[c] = cur.parent[v];  // lift past the spine
                    changed = true;
                    break;
                }
            }
        }
    }
    cur.depth = forest_depth_value(cur);
    validate_forest(g, cur);
    return cur;
}

std::vector<ChildClassification> classify_children(const Graph& g,
                                                   const EliminationForest& f) {
    auto ch = forest_children(f);
    std::vector<int> depth = forest_depths(f);
    std::vector<ChildClassification> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (ch[v].empty()) continue;
        ChildClassification cc;
        cc.node = v;
        for (int c : ch[v]) {
            std::vector<int> sub = subtree_of(ch, c);
            std::set<int> in(sub.begin(), sub.end());
            std::set<int> attach;
            for (int u : sub)
                for (int w : g.neighbors(u))
                    if (!in.count(w)) attach.insert(w);  // ancestors only
            cc.subtrees.push_back(sub);
            cc.attachments.emplace_back(attach.begin(), attach.end());
        }
        out.push_back(std::move(cc));
    }
    return out;
}

TdKernel td_kernelize(const Graph& g, const EliminationForest& f, int c1,
                      bool apply_rejection) {
    validate_forest(g, f);
    const int d = f.depth;
    const long long pow2d = 1LL << std::min(d, 30);
    TdKernel out;

    // Current remainder in host coordinates.
    std::vector<char> alive(g.vertex_count(), 1);
    std::vector<std::pair<Edge, bool>> s_edges;  // host coords, added?

    for (bool changed = true; changed;) {
        changed = false;
        std::vector<int> verts;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (alive[v]) verts.push_back(v);
        std::vector<int> to_local(g.vertex_count(), -1);
        for (size_t i = 0; i < verts.size(); ++i) to_local[verts[i]] = static_cast<int>(i);
        auto [sub, to_host] = induced_subgraph(g, verts);
        EliminationForest sf = restrict_forest(f, verts, to_local);

        for (const ChildClassification& cc : classify_children(sub, sf)) {
            std::map<std::vector<int>, std::vector<int>> groups;  // S -> subtree idx
            for (size_t i = 0; i < cc.subtrees.size(); ++i)
                groups[cc.attachments[i]].push_back(static_cast<int>(i));
            for (const auto& [s, members] : groups) {
                if (apply_rejection && s.size() >= 3 &&
                    static_cast<long long>(members.size()) > c1 * pow2d) {
                    out.rejection = "a three-attachment child group of size " +
                                    std::to_string(members.size()) +
                                    " exceeds the drawing bound";
                    return out;
                }
                if (s.size() == 2 &&
                    static_cast<long long>(members.size()) > pow2d) {
                    int a = to_host[s[0]], b = to_host[s[1]];
                    bool added = !g.has_edge(a, b);
                    s_edges.push_back({mk_edge(a, b), added});
                    for (int mi : members) {
                        std::vector<int> piece;
                        for (int u : cc.subtrees[mi]) piece.push_back(to_host[u]);
                        piece.push_back(a);
                        piece.push_back(b);
                        std::sort(piece.begin(), piece.end());
                        auto [pg, ph] = induced_subgraph(g, piece);
                        TdInstance inst;
                        inst.graph = pg;
                        inst.to_host = ph;
                        int la = -1, lb = -1;
                        for (size_t i = 0; i < ph.size(); ++i) {
                            if (ph[i] == a) la = static_cast<int>(i);
                            if (ph[i] == b) lb = static_cast<int>(i);
                        }
                        Edge se = mk_edge(la, lb);
                        if (added) {
                            std::vector<Edge> es(pg.edges().begin(), pg.edges().end());
                            es.push_back(se);
                            inst.graph = Graph(pg.vertex_count(), es);
                            inst.added_edges.push_back(se);
                        }
                        inst.uncrossable.push_back(se);
                        out.instances.push_back(std::move(inst));
                        for (int u : cc.subtrees[mi]) alive[to_host[u]] = 0;
                    }
                    ++out.splits;
                    changed = true;
                }
                if (changed) break;
            }
            if (changed) break;
        }
    }

    // Remainder instance with every recorded S-edge uncrossable.
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (alive[v]) verts.push_back(v);
    auto [rg, rh] = induced_subgraph(g, verts);
    std::vector<int> to_local(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) to_local[verts[i]] = static_cast<int>(i);
    TdInstance rem;
    std::vector<Edge> es(rg.edges().begin(), rg.edges().end());
    for (const auto& [he, added] : s_edges) {
        Edge le = mk_edge(to_local[he.first], to_local[he.second]);
        rem.uncrossable.push_back(le);
        if (added) {
            es.push_back(le);
            rem.added_edges.push_back(le);
        }
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    rem.graph = Graph(rg.vertex_count(), es);
    rem.to_host = rh;
    out.instances.push_back(std::move(rem));
    return out;
}

namespace {

SolveOutcome solve_td_block(const Graph& bg, const EliminationForest& bf,
                            int64_t budget, int c1, bool apply_rejection,
                            TdReport* report, SolveStats& stats,
                            CrossingWitness& block_witness) {
    EliminationForest nf = normalize_forest(bg, bf);
    TdKernel kern = td_kernelize(bg, nf, c1, apply_rejection);
    if (report) {
        report->max_depth = std::max(report->max_depth, nf.depth);
        report->instance_count += static_cast<int>(kern.instances.size());
    }
    if (kern.rejection) {
        if (report) ++report->rejections;
        return SolveOutcome::rejected(NotReason::kernel_rejection, *kern.rejection,
                                      stats);
    }
    for (const TdInstance& inst : kern.instances) {
        ConstraintSet cs;
        cs.uncrossable.insert(inst.uncrossable.begin(), inst.uncrossable.end());
        SolveOutcome sub = decide(inst.graph, cs, budget - stats.nodes);
        stats += sub.stats;
        if (sub.kind != SolveOutcome::Kind::one_planar) {
            sub.stats = stats;
            return sub;
        }
        std::set<Edge> added(inst.added_edges.begin(), inst.added_edges.end());
        for (const auto& [e, fx] : sub.witness.pairs) {
            if (added.count(e) || added.count(fx))
                throw std::logic_error("td pipeline: added edge was crossed");
            block_witness.pairs.push_back(
                {mk_edge(inst.to_host[e.first], inst.to_host[e.second]),
                 mk_edge(inst.to_host[fx.first], inst.to_host[fx.second])});
        }
    }
    return SolveOutcome::planar_with(CrossingWitness{}, stats);
}

SolveOutcome run_td_pipeline(
    const Graph& g, int64_t budget, int c1, bool apply_rejection,
    TdReport* report,
    const std::function<std::optional<EliminationForest>(const Graph&, const Block&)>&
        block_forest) {
    SolveStats stats;
    CrossingWitness combined;
    for (const Block& block : blocks(g)) {
        if (report) ++report->block_count;
        std::optional<EliminationForest> bf = block_forest(g, block);
        if (!bf)
            return SolveOutcome::out_of_budget(stats,
                                               "tree-depth exceeds the bound");
        CrossingWitness bw;
        SolveOutcome sub = solve_td_block(block.graph, *bf, budget, c1,
                                          apply_rejection, report, stats, bw);
        if (sub.kind != SolveOutcome::Kind::one_planar) {
            if (report) report->stats = stats;
            return sub;
        }
        for (const auto& [e, fx] : bw.pairs)
            combined.pairs.push_back(
                {mk_edge(block.to_host[e.first], block.to_host[e.second]),
                 mk_edge(block.to_host[fx.first], block.to_host[fx.second])});
    }
    if (report) report->stats = stats;
    combined.normalize();
    if (!verify_witness(g, combined, ConstraintSet{}))
        throw std::logic_error("td pipeline: merged witness fails verification");
    return SolveOutcome::planar_with(std::move(combined), stats);
}

}  // namespace

SolveOutcome pipeline_td(const Graph& g, int64_t budget, int max_d, int c1,
                         bool apply_rejection, TdReport* report) {
    return run_td_pipeline(
        g, budget, c1, apply_rejection, report,
        [max_d](const Graph&, const Block& block)
            -> std::optional<EliminationForest> {
            auto td = tree_depth(block.graph, max_d);
            if (!td) return std::nullopt;
            return td->second;
        });
}

SolveOutcome pipeline_td_with_forest(const Graph& g, const EliminationForest& f,
                                     int64_t budget, int c1,
                                     bool apply_rejection, TdReport* report) {
    validate_forest(g, f);
    return run_td_pipeline(
        g, budget, c1, apply_rejection, report,
        [&f](const Graph& host, const Block& block)
            -> std::optional<EliminationForest> {
            std::vector<int> to_local(host.vertex_count(), -1);
            for (size_t i = 0; i < block.to_host.size(); ++i)
                to_local[block.to_host[i]] = static_cast<int>(i);
            return restrict_forest(f, block.to_host, to_local);
        });
}

// --- Cographs ---------------------------------------------------------------

namespace {

int cotree_rec(const Graph& g, const std::vector<int>& verts, Cotree& t,
               bool& ok) {
    if (!ok) return -1;
    if (verts.size() == 1) {
        t.nodes.push_back({-1, verts[0], {}});
        return static_cast<int>(t.nodes.size()) - 1;
    }
    auto comps = sub_components(g, verts);
    if (comps.size() > 1) {
        std::vector<int> kids;
        for (const auto& comp : comps) kids.push_back(cotree_rec(g, comp, t, ok));
        t.nodes.push_back({0, -1, std::move(kids)});
        return static_cast<int>(t.nodes.size()) - 1;
    }
    // Components of the complement within verts.
    std::set<int> in(verts.begin(), verts.end());
    std::set<int> seen;
    std::vector<std::vector<int>> parts;
    for (int s : verts) {
        if (seen.count(s)) continue;
        std::vector<int> part, stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            part.push_back(u);
            for (int w : verts)
                if (w != u && !g.has_edge(u, w) && seen.insert(w).second)
                    stack.push_back(w);
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    if (parts.size() == 1) {
        ok = false;  // both g and its complement connected: not a cograph
        return -1;
    }
    std::vector<int> kids;
    for (const auto& part : parts) kids.push_back(cotree_rec(g, part, t, ok));
    t.nodes.push_back({1, -1, std::move(kids)});
    return static_cast<int>(t.nodes.size()) - 1;
}

std::vector<int> leaves_under(const Cotree& t, int node) {
    std::vector<int> out, stack{node};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (t.nodes[u].label == -1)
            out.push_back(t.nodes[u].vertex);
        else
            for (int c : t.nodes[u].children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<Cotree> cotree_build(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    Cotree t;
    bool ok = true;
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    t.root = cotree_rec(g, all, t, ok);
    if (!ok) return std::nullopt;
    // Adjacency law check: u ~ v iff their LCA is labeled 1.
    std::vector<int> leaf_node(g.vertex_count(), -1), parent(t.nodes.size(), -1);
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        if (t.nodes[i].label == -1) leaf_node[t.nodes[i].vertex] = static_cast<int>(i);
        for (int c : t.nodes[i].children) parent[c] = static_cast<int>(i);
    }
    auto ancestors = [&](int node) {
        std::vector<int> a;
        for (int u = node; u != -1; u = parent[u]) a.push_back(u);
        return a;
    };
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::set<int> anc_u;
        for (int x : ancestors(leaf_node[u])) anc_u.insert(x);
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            int lca = leaf_node[v];
            while (!anc_u.count(lca)) lca = parent[lca];
            if ((t.nodes[lca].label == 1) != g.has_edge(u, v))
                throw std::logic_error("cotree violates the adjacency law");
        }
    }
    return t;
}

std::pair<bool, bool> cotree_exclusions(const Cotree& t, int a, int b) {
    // Clique number: max over union children, sum over join children.
    // Biclique pairs (x, y), capped at b: join folds by Minkowski sum; at a
    // union a biclique with both sides nonempty lies inside one child.
    struct Fold {
        int clique;
        std::vector<std::vector<char>> bi;  // (x, y) achievable
        int leaves;
    };
    const Cotree& ct = t;
    auto rec = [&](auto&& self, int node) -> Fold {
        const auto& nd = ct.nodes[node];
        int cap = b;
        if (nd.label == -1) {
            Fold f{1, std::vector<std::vector<char>>(cap + 1,
                                                     std::vector<char>(cap + 1, 0)),
                   1};
            f.bi[0][0] = f.bi[1][0] = f.bi[0][1] = 1;
            return f;
        }
        Fold acc{nd.label == 1 ? 0 : 1,
                 std::vector<std::vector<char>>(cap + 1,
                                                std::vector<char>(cap + 1, 0)),
                 0};
        acc.bi[0][0] = 1;
        bool first = true;
        for (int c : nd.children) {
            Fold f = self(self, c);
            acc.leaves += f.leaves;
            if (nd.label == 0) {
                acc.clique = std::max(acc.clique, f.clique);
                for (int x = 0; x <= cap; ++x)
                    for (int y = 0; y <= cap; ++y)
                        acc.bi[x][y] = acc.bi[x][y] | f.bi[x][y];
            } else {
                acc.clique = std::min(a, acc.clique + f.clique);
                std::vector<std::vector<char>> next(cap + 1,
                                                    std::vector<char>(cap + 1, 0));
                if (first) {
                    next = f.bi;
                } else {
                    for (int x1 = 0; x1 <= cap; ++x1)
                        for (int y1 = 0; y1 <= cap; ++y1) {
                            if (!acc.bi[x1][y1]) continue;
                            for (int x2 = 0; x2 + x1 <= cap; ++x2)
                                for (int y2 = 0; y2 + y1 <= cap; ++y2)
                                    if (f.bi[x2][y2])
                                        next[x1 + x2][y1 + y2] = 1;
                        }
                }
                acc.bi = std::move(next);
            }
            first = false;
        }
        // Side-with-no-partner sets are just vertex sets.
        for (int x = 0; x <= std::min(acc.leaves, cap); ++x)
            acc.bi[x][0] = acc.bi[0][x] = 1;
        return acc;
    };
    Fold f = rec(rec, t.root);
    return {f.clique >= a, f.bi[b][b] != 0};
}

namespace {

// Returns the roots of the built forest piece for this cotree node.
std::vector<int> cograph_forest_rec(const Cotree& t, int node,
                                    std::vector<int>& parent) {
    const auto& nd = t.nodes[node];
    if (nd.label == -1) return {nd.vertex};
    if (nd.label == 0) {
        std::vector<int> roots;
        for (int c : nd.children)
            for (int r : cograph_forest_rec(t, c, parent)) roots.push_back(r);
        return roots;
    }
    // Join: all leaves outside the heaviest child become a spine path; the
    // heaviest child's forest hangs below it.
    int heavy = -1, heavy_leaves = -1, heavy_min = -1;
    for (int c : nd.children) {
        std::vector<int> lv = leaves_under(t, c);
        int cnt = static_cast<int>(lv.size());
        if (cnt > heavy_leaves || (cnt == heavy_leaves && lv[0] < heavy_min)) {
            heavy = c;
            heavy_leaves = cnt;
            heavy_min = lv[0];
        }
    }
    std::vector<int> spine;
    for (int c : nd.children) {
        if (c == heavy) continue;
        std::vector<int> lv = leaves_under(t, c);
        spine.insert(spine.end(), lv.begin(), lv.end());
    }
    std::sort(spine.begin(), spine.end());
    for (size_t i = 1; i < spine.size(); ++i) parent[spine[i]] = spine[i - 1];
    std::vector<int> sub_roots = cograph_forest_rec(t, heavy, parent);
    for (int r : sub_roots) parent[r] = spine.back();
    return {spine.front()};
}

}  // namespace

EliminationForest cograph_forest(const Graph& g, const Cotree& t, int a, int b) {
    auto [has_ka, has_kbb] = cotree_exclusions(t, a, b);
    if (has_ka || has_kbb)
        throw std::invalid_argument("cograph_forest: exclusion check fails");
    EliminationForest f;
    f.parent.assign(g.vertex_count(), -1);
    cograph_forest_rec(t, t.root, f.parent);
    f.depth = forest_depth_value(f);
    validate_forest(g, f);
    return f;
}

SolveOutcome pipeline_cograph(const Graph& g, int64_t budget, TdReport* report) {
    std::optional<Cotree> t = cotree_build(g);
    if (!t) throw std::invalid_argument("pipeline_cograph: not a cograph");
    auto [has_k7, has_k55] = cotree_exclusions(*t, 7, 5);
    if (has_k7)
        return SolveOutcome::rejected(NotReason::kernel_rejection,
                                      "contains a K_7 subgraph");
    if (has_k55)
        return SolveOutcome::rejected(NotReason::kernel_rejection,
                                      "contains a K_{5,5} subgraph");
    EliminationForest f = cograph_forest(g, *t, 7, 5);
    return pipeline_td_with_forest(g, f, budget, 20, true, report);
}

}  // namespace oneplanar
